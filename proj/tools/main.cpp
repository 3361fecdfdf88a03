// park — command-line front end over the shared C API.
//
// Every JSON run prints {"config": ..., "result": ...}; the embedded config
// fully determines the run and `park rerun FILE` replays it byte for byte.
// Exit codes: 0 success, 1 validation/usage error, 2 a check ran and failed
// (or a series refused to converge).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "park/park.h"

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kInlineAlphaCap = 10000;

int g_exit_code = 0;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

void check(park_status s) {
    if (s == PARK_OK) return;
    const std::string msg = std::string(park_status_name(s)) + ": " + park_last_error();
    switch (s) {
        case PARK_ECHECK:
        case PARK_ENOCONV: die(2, msg);
        default: die(1, msg);
    }
}

std::string take_string(char* s) {
    if (s == nullptr) return {};
    std::string out(s);
    park_string_free(s);
    return out;
}

struct Prefs {
    park_prefs* p = nullptr;
    ~Prefs() { park_prefs_free(p); }
};

struct Doc {
    park_doc* d = nullptr;
    ~Doc() { park_doc_free(d); }
    json parsed() const { return json::parse(park_doc_json(d)); }
};

void load_prefs(const json& alpha, Prefs& out) {
    std::vector<int64_t> entries;
    entries.reserve(alpha.size());
    for (const auto& v : alpha) entries.push_back(v.get<int64_t>());
    check(park_prefs_create(entries.data(), entries.size(), &out.p));
}

// "a/b" stays exact through the C API; plain decimals are doubles
double p_as_double(const std::string& p) {
    const auto slash = p.find('/');
    if (slash == std::string::npos) return std::stod(p);
    return std::stod(p.substr(0, slash)) / std::stod(p.substr(slash + 1));
}

bool p_is_exact(const std::string& p) {
    return p.find('/') != std::string::npos ||
           (p.find('.') == std::string::npos && p.find('e') == std::string::npos);
}

json scalar_result(park_status s, double value, char* exact) {
    check(s);
    json r{{"value", value}};
    if (exact != nullptr) {
        r["exact"] = take_string(exact);
        r["mode"] = "exact";
    } else {
        r["mode"] = "float";
    }
    return r;
}

park_walk_params walk_params_from(const json& config) {
    park_walk_params params;
    park_walk_params_init(&params);
    params.p = p_as_double(config["p"].get<std::string>());
    params.unbounded = config["boundary"] == "unbounded" ? 1 : 0;
    params.step_cap = config.value("step_cap", int64_t{1000000});
    params.escape_margin = config.value("escape_margin", int64_t{0});
    return params;
}

// ---------------- subcommand handlers ----------------

json run_classify(const json& config) {
    Prefs prefs;
    load_prefs(config["alpha"], prefs);
    int pf = 0, id = 0, wi = 0;
    check(park_prefs_classify(prefs.p, &pf, &id, &wi));
    return json{{"n", park_prefs_len(prefs.p)},
                {"is_parking_function", pf == 1},
                {"is_identity_outcome", id == 1},
                {"is_weakly_increasing", wi == 1}};
}

json run_park(const json& config) {
    Prefs prefs;
    load_prefs(config["alpha"], prefs);
    Doc doc;
    check(park_classical(prefs.p, &doc.d));
    return doc.parsed();
}

json run_simulate(const json& config) {
    Prefs prefs;
    load_prefs(config["alpha"], prefs);
    const park_walk_params params = walk_params_from(config);
    Doc doc;
    check(park_simulate(prefs.p, &params, config["seed"].get<uint64_t>(),
                        config["trials"].get<uint64_t>(), nullptr, &doc.d));
    return doc.parsed();
}

json run_exact(const json& config) {
    const std::string formula = config["formula"];
    const auto get_i64 = [&](const char* key) {
        if (!config.contains(key)) die(1, "formula " + formula + " needs --" + key);
        return config[key].get<int64_t>();
    };
    const auto p_str = [&]() -> std::string {
        if (!config.contains("p")) die(1, "formula " + formula + " needs --p");
        return config["p"].get<std::string>();
    };
    const double tol = config.value("tol", 1e-12);

    double value = 0.0;
    char* exact = nullptr;
    park_status status = PARK_OK;
    if (formula == "open-prob-single") {
        status = park_open_prob_single(get_i64("i"), get_i64("s"), p_str().c_str(), &value, &exact);
        return scalar_result(status, value, exact);
    }
    if (formula == "open-time-single") {
        status = park_open_time_single(get_i64("i"), get_i64("s"), p_str().c_str(), &value, &exact);
        return scalar_result(status, value, exact);
    }
    if (formula == "unbounded-prob-single") {
        status = park_unbounded_prob_single(get_i64("d"), p_str().c_str(), tol, &value, &exact);
        return scalar_result(status, value, exact);
    }
    if (formula == "unbounded-time") {
        status = park_unbounded_time(get_i64("d"), p_str().c_str(), &value, &exact);
        return scalar_result(status, value, exact);
    }
    if (formula == "unbounded-variance") {
        status = park_unbounded_variance(get_i64("d"), p_str().c_str(), &value, &exact);
        return scalar_result(status, value, exact);
    }
    if (formula == "open-prob-all" || formula == "open-time-all" ||
        formula == "open-time-all-half" || formula == "unbounded-prob-all" ||
        formula == "exact-marginals") {
        if (!config.contains("alpha")) die(1, "formula " + formula + " needs --alpha");
        Prefs prefs;
        load_prefs(config["alpha"], prefs);
        if (formula == "open-prob-all") {
            status = park_open_prob_all(prefs.p, p_str().c_str(), &value, &exact);
            return scalar_result(status, value, exact);
        }
        if (formula == "open-time-all") {
            status = park_open_time_all(prefs.p, p_str().c_str(), &value, &exact);
            return scalar_result(status, value, exact);
        }
        if (formula == "open-time-all-half") {
            status = park_open_time_all_half(prefs.p, &value, &exact);
            return scalar_result(status, value, exact);
        }
        if (formula == "unbounded-prob-all") {
            status = park_unbounded_prob_all(prefs.p, p_str().c_str(), &value, &exact);
            return scalar_result(status, value, exact);
        }
        std::vector<double> marg(park_prefs_len(prefs.p));
        check(park_exact_marginals(prefs.p, p_str().c_str(), marg.data()));
        double mu = 0.0;
        for (double m : marg) mu += m;
        return json{{"marginals", marg}, {"mu", mu}};
    }
    if (formula == "unbounded-series") {
        int64_t terms = 0;
        double tail = 0.0;
        check(park_unbounded_prob_series(get_i64("d"), p_as_double(p_str()), tol, &value, &terms,
                                         &tail));
        return json{{"value", value}, {"terms", terms}, {"tail_bound", tail}, {"mode", "float"}};
    }
    if (formula == "time-via-paths") {
        int64_t terms = 0;
        double tail = 0.0;
        check(park_time_via_paths(get_i64("i"), get_i64("s"), p_as_double(p_str()), tol, &value,
                                  &terms, &tail));
        return json{{"value", value}, {"terms", terms}, {"tail_bound", tail}, {"mode", "float"}};
    }
    if (formula == "ruin-count") {
        char* s = nullptr;
        check(park_ruin_path_count(get_i64("b"), get_i64("k"), &s));
        return json{{"count", take_string(s)}};
    }
    if (formula == "catalan-convolution") {
        char* s = nullptr;
        check(park_catalan_convolution(get_i64("d"), get_i64("l"), &s));
        return json{{"count", take_string(s)}};
    }
    if (formula == "bounded-path-count") {
        char* s = nullptr;
        check(park_bounded_path_count(get_i64("i"), get_i64("j"), get_i64("k"), &s));
        return json{{"count", take_string(s)}};
    }
    if (formula == "time-solution-residual") {
        double residual = 0.0;
        int exact_zero = 0;
        check(park_verify_time_solution(get_i64("i"), p_str().c_str(), &residual, &exact_zero));
        return json{{"max_residual", residual}, {"exact_zero", exact_zero == 1}};
    }
    die(1, "unknown formula: " + formula);
}

json run_sample(const json& config) {
    const std::string family = config["family"];
    const int64_t n = config["n"];
    const uint64_t seed = config["seed"];
    const uint64_t draws = config["draws"];
    if (config.value("stats", false)) {
        if (family != "wipf") die(1, "--stats is available for the wipf family");
        Doc doc;
        check(park_sampler_stats(n, seed, draws, &doc.d));
        if (park_doc_passed(doc.d) == 0) g_exit_code = 2;
        return doc.parsed();
    }
    json rows = json::array();
    for (uint64_t t = 0; t < draws; ++t) {
        Prefs prefs;
        check(park_sample(family.c_str(), n, seed, t, &prefs.p));
        std::vector<int64_t> entries;
        for (std::size_t c = 1; c <= park_prefs_len(prefs.p); ++c)
            entries.push_back(park_prefs_entry(prefs.p, c));
        rows.push_back(entries);
    }
    return json{{"family", family}, {"n", n}, {"draws", rows}};
}

json run_count(const json& config) {
    const std::string what = config["what"];
    const int64_t n = config.value("n", int64_t{0});
    char* s = nullptr;
    if (what == "catalan") {
        check(park_catalan_number(n, &s));
        return json{{"value", take_string(s)}};
    }
    if (what == "catalan-triangle") {
        check(park_catalan_triangle(n, config["k"].get<int64_t>(), &s));
        return json{{"value", take_string(s)}};
    }
    if (what == "wipf-entry") {
        check(park_wipf_entry_count(n, config["i"].get<int64_t>(), config["j"].get<int64_t>(), &s));
        return json{{"value", take_string(s)}};
    }
    if (what == "last-entry-distribution") {
        Doc doc;
        check(park_last_entry_distribution(n, &doc.d));
        return doc.parsed();
    }
    if (what == "expected-last-entry") {
        char* mean = nullptr;
        char* alt = nullptr;
        check(park_expected_last_entry(n, &mean, &alt));
        return json{{"value", take_string(mean)}, {"shifted_closed_form", take_string(alt)}};
    }
    if (what == "lucky-set") {
        if (!config.contains("members")) die(1, "lucky-set needs --members");
        std::vector<int64_t> members;
        for (const auto& v : config["members"]) members.push_back(v.get<int64_t>());
        check(park_lucky_set_probability(n, members.data(), members.size(), &s));
        return json{{"value", take_string(s)}};
    }
    if (what == "lucky-count-distribution") {
        Doc doc;
        check(park_lucky_count_distribution(n, config.value("alt_factor", false) ? 1 : 0, &doc.d));
        return doc.parsed();
    }
    if (what == "expected-lucky") {
        check(park_expected_lucky(n, &s));
        return json{{"value", take_string(s)}};
    }
    if (what == "asymptotic") {
        double value = 0.0;
        char* ratio = nullptr;
        check(park_asymptotic(config["formula"].get<std::string>().c_str(), n,
                              config.value("j", int64_t{0}), &value, &ratio));
        return json{{"value", value}, {"exact_ratio", take_string(ratio)}};
    }
    if (what == "conditional-monotonicity") {
        if (!config.contains("members")) die(1, "conditional-monotonicity needs --members");
        std::vector<int64_t> idx;
        for (const auto& v : config["members"]) idx.push_back(v.get<int64_t>());
        int holds = 0;
        check(park_conditional_monotonicity(n, config["m"].get<int64_t>(), idx.data(), idx.size(),
                                            &holds));
        return json{{"holds", holds == 1}};
    }
    die(1, "unknown count query: " + what);
}

json run_verify(const json& config) {
    Doc doc;
    const park_status s =
        park_verify_suite(config["suite"].get<std::string>().c_str(),
                          config.value("n_max", int64_t{0}), config.value("trials", uint64_t{0}),
                          config["seed"].get<uint64_t>(), &doc.d);
    if (s == PARK_ECHECK) g_exit_code = 2;
    else check(s);
    return doc.parsed();
}

json run_correlate(const json& config) {
    Prefs prefs;
    load_prefs(config["alpha"], prefs);
    const park_walk_params params = walk_params_from(config);
    Doc doc;
    check(park_correlation_test(prefs.p, &params, config["seed"].get<uint64_t>(),
                                config["trials"].get<uint64_t>(),
                                config.value("subsets", std::string{}).c_str(), &doc.d));
    if (park_doc_passed(doc.d) == 0) g_exit_code = 2;
    return doc.parsed();
}

json run_chernoff(const json& config) {
    Prefs prefs;
    load_prefs(config["alpha"], prefs);
    const park_walk_params params = walk_params_from(config);
    std::vector<double> deltas;
    for (const auto& d : config["deltas"]) deltas.push_back(d.get<double>());
    Doc doc;
    const park_status s =
        park_chernoff_check(prefs.p, &params, config["seed"].get<uint64_t>(),
                            config["trials"].get<uint64_t>(), deltas.data(), deltas.size(), &doc.d);
    if (s == PARK_ECHECK) g_exit_code = 2;
    else check(s);
    return doc.parsed();
}

json run_cross_validate(const json& config) {
    std::vector<double> ps;
    for (const auto& p : config["p_set"]) ps.push_back(p.get<double>());
    Doc doc;
    const park_status s = park_cross_validate(config["n_max"].get<int64_t>(), ps.data(), ps.size(),
                                              config["trials"].get<uint64_t>(),
                                              config["seed"].get<uint64_t>(), &doc.d);
    if (s == PARK_ECHECK) g_exit_code = 2;
    else check(s);
    return doc.parsed();
}

json run_heatmap(const json& config) {
    park_heatmap* h = nullptr;
    check(park_heatmap_compute(config["n"].get<int64_t>(), config["p_steps"].get<int64_t>(),
                               config["y_steps"].get<int64_t>(), &h));
    json p_grid = json::array(), y_grid = json::array(), cells = json::array();
    for (std::size_t pi = 0; pi < park_heatmap_p_count(h); ++pi)
        p_grid.push_back(park_heatmap_p_at(h, pi));
    for (std::size_t yi = 0; yi < park_heatmap_y_count(h); ++yi)
        y_grid.push_back(park_heatmap_y_at(h, yi));
    for (std::size_t pi = 0; pi < park_heatmap_p_count(h); ++pi) {
        json row = json::array();
        for (std::size_t yi = 0; yi < park_heatmap_y_count(h); ++yi)
            row.push_back(park_heatmap_cell(h, pi, yi));
        cells.push_back(std::move(row));
    }
    const uint64_t total = park_heatmap_total(h);
    park_heatmap_free(h);
    return json{{"n", config["n"]},
                {"p_grid", p_grid},
                {"y_grid", y_grid},
                {"cells", cells},
                {"total", total}};
}

json run_config(const json& config) {
    const std::string cmd = config["command"];
    if (cmd == "classify") return run_classify(config);
    if (cmd == "park") return run_park(config);
    if (cmd == "simulate") return run_simulate(config);
    if (cmd == "exact") return run_exact(config);
    if (cmd == "sample") return run_sample(config);
    if (cmd == "count") return run_count(config);
    if (cmd == "verify") return run_verify(config);
    if (cmd == "correlate") return run_correlate(config);
    if (cmd == "chernoff") return run_chernoff(config);
    if (cmd == "cross-validate") return run_cross_validate(config);
    if (cmd == "heatmap") return run_heatmap(config);
    die(1, "unknown command in config: " + cmd);
}

// ---------------- output ----------------

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die(1, "cannot open output file: " + path);
    out << text;
}

std::string heatmap_csv(const json& result) {
    // pinned schema: header p,y,count,total; one row per cell
    std::ostringstream os;
    os << "p,y,count,total\n";
    const auto& pg = result["p_grid"];
    const auto& yg = result["y_grid"];
    const auto& cells = result["cells"];
    const uint64_t total = result["total"];
    for (std::size_t pi = 0; pi < pg.size(); ++pi)
        for (std::size_t yi = 0; yi < yg.size(); ++yi)
            os << json(pg[pi]).dump() << "," << json(yg[yi]).dump() << ","
               << cells[pi][yi].get<uint64_t>() << "," << total << "\n";
    return os.str();
}

std::string distribution_csv(const json& result) {
    std::ostringstream os;
    if (result.contains("counts")) {
        os << "j,count\n";
        const auto& counts = result["counts"];
        for (std::size_t j = 0; j < counts.size(); ++j)
            os << (j + 1) << "," << counts[j].get<std::string>() << "\n";
        return os.str();
    }
    if (result.contains("masses")) {
        os << "k,mass\n";
        const auto& masses = result["masses"];
        for (std::size_t k = 0; k < masses.size(); ++k)
            os << (k + 1) << "," << masses[k].get<std::string>() << "\n";
        return os.str();
    }
    die(1, "csv output is not defined for this result");
}

void write_pgm(const std::string& path, const json& result) {
    const auto& pg = result["p_grid"];
    const auto& yg = result["y_grid"];
    const auto& cells = result["cells"];
    const double total = result["total"].get<double>();
    std::ofstream out(path, std::ios::binary);
    if (!out) die(1, "cannot open pgm file: " + path);
    // 8-bit P5, row-major, y descending
    out << "P5\n" << pg.size() << " " << yg.size() << "\n255\n";
    for (std::size_t row = 0; row < yg.size(); ++row) {
        const std::size_t yi = yg.size() - 1 - row;
        for (std::size_t pi = 0; pi < pg.size(); ++pi) {
            const double frac = cells[pi][yi].get<double>() / total;
            out.put(static_cast<char>(static_cast<unsigned char>(frac * 255.0 + 0.5)));
        }
    }
}

void emit(const json& config, const json& result, const std::string& format,
          const std::string& out_path, const std::string& pgm_path) {
    const std::string cmd = config["command"];
    if (!pgm_path.empty()) {
        if (cmd != "heatmap") die(1, "--pgm applies to heatmap only");
        write_pgm(pgm_path, result);
    }
    if (format == "json") {
        json envelope{{"config", config}, {"result", result}};
        write_text(out_path, envelope.dump(2) + "\n");
        return;
    }
    if (format == "csv") {
        if (cmd == "heatmap") {
            write_text(out_path, heatmap_csv(result));
            return;
        }
        if (cmd == "count") {
            write_text(out_path, distribution_csv(result));
            return;
        }
        die(1, "csv output is available for heatmap and count distributions");
    }
    die(1, "unknown format: " + format);
}

std::vector<int64_t> parse_alpha_text(const std::string& text) {
    std::vector<int64_t> entries;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ' || c == '\n' || c == '\t' || c == '\r') {
            if (!cur.empty()) {
                entries.push_back(std::stoll(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    return entries;
}

json alpha_from_options(const std::string& inline_alpha, const std::string& alpha_file) {
    if (inline_alpha.empty() == alpha_file.empty())
        die(1, "exactly one of --alpha / --alpha-file is required");
    std::vector<int64_t> entries;
    if (!inline_alpha.empty()) {
        entries = parse_alpha_text(inline_alpha);
        if (entries.size() > kInlineAlphaCap)
            die(1, "inline lists are capped at 10000 entries; use --alpha-file");
    } else {
        std::ifstream in(alpha_file);
        if (!in) die(1, "cannot read " + alpha_file);
        std::stringstream ss;
        ss << in.rdbuf();
        entries = parse_alpha_text(ss.str());
    }
    return json(entries);
}

uint64_t default_seed(const std::optional<uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("PARK_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic parking process toolkit"};
    app.require_subcommand(1);

    std::string out_path, format = "json", pgm_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--pgm", pgm_path, "heatmap only: also write an 8-bit PGM image");
    std::optional<uint64_t> seed_flag;
    app.add_option("--seed", seed_flag, "RNG seed (default: PARK_SEED env var, else 0)");

    std::string inline_alpha, alpha_file, p_text = "1/2", boundary = "open";
    std::string formula, family = "wipf", what, suite = "all", subsets, members_text;
    uint64_t trials = 100000, draws = 1;
    int64_t n = 0, opt_i = 0, opt_s = 0, opt_d = 0, opt_b = 0, opt_k = 0, opt_j = 0, opt_l = 0,
            opt_m = 0, n_max = 0, step_cap = 1000000, escape_margin = 0, p_steps = 51,
            y_steps = 51;
    double tol = 1e-12;
    bool stats = false, alt_factor = false;
    std::vector<double> deltas{0.25, 0.5, 0.75, 1.0};
    std::vector<double> p_set{0.3, 0.5, 0.75};

    const auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", inline_alpha, "preference list, e.g. 1,2,1");
        cmd->add_option("--alpha-file", alpha_file, "file with a whitespace/comma separated list");
    };
    const auto add_walk = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_text, "step probability; a/b is exact, decimal is float");
        cmd->add_option("--boundary", boundary, "open or unbounded")
            ->check(CLI::IsMember({"open", "unbounded"}));
        cmd->add_option("--step-cap", step_cap, "per-walk step cap");
        cmd->add_option("--escape-margin", escape_margin, "unbounded escape margin (0 = auto)");
        cmd->add_option("--trials", trials, "Monte Carlo trials");
    };

    auto* c_classify = app.add_subcommand("classify", "predicates for a preference list");
    add_alpha(c_classify);

    auto* c_park = app.add_subcommand("park", "deterministic rightward protocol");
    add_alpha(c_park);

    auto* c_sim = app.add_subcommand("simulate", "seeded batch of stochastic protocol runs");
    add_alpha(c_sim);
    add_walk(c_sim);

    auto* c_exact = app.add_subcommand("exact", "evaluate a closed-form quantity");
    add_alpha(c_exact);
    c_exact
        ->add_option("--formula", formula,
                     "open-prob-single|open-prob-all|open-time-single|open-time-all|"
                     "open-time-all-half|unbounded-prob-single|unbounded-prob-all|"
                     "unbounded-time|unbounded-variance|unbounded-series|time-via-paths|"
                     "ruin-count|catalan-convolution|bounded-path-count|"
                     "time-solution-residual|exact-marginals")
        ->required();
    c_exact->add_option("--p", p_text, "step probability");
    c_exact->add_option("--i", opt_i, "target spot");
    c_exact->add_option("--s", opt_s, "start spot");
    c_exact->add_option("--d", opt_d, "displacement");
    c_exact->add_option("--b", opt_b, "walk length");
    c_exact->add_option("--k", opt_k, "net displacement / end height");
    c_exact->add_option("--j", opt_j, "left steps");
    c_exact->add_option("--l", opt_l, "series index");
    c_exact->add_option("--tol", tol, "series tolerance");

    auto* c_sample = app.add_subcommand("sample", "draw from a preference family");
    c_sample->add_option("--family", family, "pf, wipf, or pf-id");
    c_sample->add_option("--n", n, "length")->required();
    c_sample->add_option("--draws", draws, "number of draws");
    c_sample->add_flag("--stats", stats, "wipf only: empirical-vs-exact statistics report");

    auto* c_count = app.add_subcommand("count", "exact counting and distribution queries");
    c_count
        ->add_option("--what", what,
                     "catalan|catalan-triangle|wipf-entry|last-entry-distribution|"
                     "expected-last-entry|lucky-set|lucky-count-distribution|expected-lucky|"
                     "asymptotic|conditional-monotonicity")
        ->required();
    c_count->add_option("--n", n, "n");
    c_count->add_option("--i", opt_i, "position i");
    c_count->add_option("--j", opt_j, "value j");
    c_count->add_option("--k", opt_k, "k");
    c_count->add_option("--m", opt_m, "threshold m");
    c_count->add_option("--members", members_text, "comma-separated members, e.g. 1,3");
    c_count->add_option("--formula", formula, "asymptotic formula id");
    c_count->add_flag("--alt-factor", alt_factor, "use the unnormalized n/k lucky-count variant");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite,
                         "identities|convolution|series|time-solution|dyck|"
                         "combinatorics-oracle|discrepancies|montecarlo|all");
    c_verify->add_option("--n-max", n_max, "sweep bound (0 = suite default)");
    c_verify->add_option("--trials", trials, "Monte Carlo trials for montecarlo");

    auto* c_corr = app.add_subcommand("correlate", "pairwise/subset correlation verdicts");
    add_alpha(c_corr);
    add_walk(c_corr);
    c_corr->add_option("--subsets", subsets, "semicolon-separated subsets, e.g. 2,3;1,2,3");

    auto* c_chern = app.add_subcommand("chernoff", "tail bounds on the number of parked cars");
    add_alpha(c_chern);
    add_walk(c_chern);
    c_chern->add_option("--deltas", deltas, "deviation fractions in [0,1]");

    auto* c_cross = app.add_subcommand("cross-validate", "Monte Carlo vs exact formula panel");
    c_cross->add_option("--n-max", n_max, "largest list length in the panel")->required();
    c_cross->add_option("--p-set", p_set, "probabilities to test");
    c_cross->add_option("--trials", trials, "Monte Carlo trials per cell");

    auto* c_heat = app.add_subcommand("heatmap", "cumulative parking-probability grid");
    c_heat->add_option("--n", n, "number of cars (<= 10)")->required();
    c_heat->add_option("--p-steps", p_steps, "grid points along p");
    c_heat->add_option("--y-steps", y_steps, "grid points along y");

    auto* c_rerun = app.add_subcommand("rerun", "replay the config embedded in a JSON output");
    std::string rerun_file;
    c_rerun->add_option("file", rerun_file, "previous JSON output")->required();

    // global options (--seed, --format, --out, --pgm) may follow the subcommand
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        json config;
        if (c_rerun->parsed()) {
            std::ifstream in(rerun_file);
            if (!in) die(1, "cannot read " + rerun_file);
            json envelope = json::parse(in, nullptr, false);
            if (envelope.is_discarded() || !envelope.contains("config"))
                die(1, "not a replayable output file: " + rerun_file);
            config = envelope["config"];
        } else {
            const uint64_t seed = default_seed(seed_flag);
            if (c_classify->parsed() || c_park->parsed()) {
                config = json{{"command", c_classify->parsed() ? "classify" : "park"},
                              {"alpha", alpha_from_options(inline_alpha, alpha_file)}};
            } else if (c_sim->parsed()) {
                config = json{{"command", "simulate"},
                              {"alpha", alpha_from_options(inline_alpha, alpha_file)},
                              {"p", p_text},
                              {"p_mode", p_is_exact(p_text) ? "exact" : "float"},
                              {"boundary", boundary},
                              {"step_cap", step_cap},
                              {"escape_margin", escape_margin},
                              {"seed", seed},
                              {"trials", trials}};
            } else if (c_exact->parsed()) {
                config = json{{"command", "exact"}, {"formula", formula}};
                if (c_exact->count("--p") || formula.find("prob") != std::string::npos ||
                    formula.find("time") != std::string::npos || formula == "exact-marginals") {
                    config["p"] = p_text;
                    config["p_mode"] = p_is_exact(p_text) ? "exact" : "float";
                }
                if (!inline_alpha.empty() || !alpha_file.empty())
                    config["alpha"] = alpha_from_options(inline_alpha, alpha_file);
                if (c_exact->count("--i")) config["i"] = opt_i;
                if (c_exact->count("--s")) config["s"] = opt_s;
                if (c_exact->count("--d")) config["d"] = opt_d;
                if (c_exact->count("--b")) config["b"] = opt_b;
                if (c_exact->count("--k")) config["k"] = opt_k;
                if (c_exact->count("--j")) config["j"] = opt_j;
                if (c_exact->count("--l")) config["l"] = opt_l;
                config["tol"] = tol;
            } else if (c_sample->parsed()) {
                config = json{{"command", "sample"}, {"family", family}, {"n", n},
                              {"seed", seed},        {"draws", draws},   {"stats", stats}};
            } else if (c_count->parsed()) {
                config = json{{"command", "count"}, {"what", what}, {"n", n}};
                if (c_count->count("--i")) config["i"] = opt_i;
                if (c_count->count("--j")) config["j"] = opt_j;
                if (c_count->count("--k")) config["k"] = opt_k;
                if (c_count->count("--m")) config["m"] = opt_m;
                if (c_count->count("--members")) config["members"] = parse_alpha_text(members_text);
                if (c_count->count("--formula")) config["formula"] = formula;
                if (alt_factor) config["alt_factor"] = true;
            } else if (c_verify->parsed()) {
                config = json{{"command", "verify"},
                              {"suite", suite},
                              {"n_max", n_max},
                              {"trials", c_verify->count("--trials") ? trials : uint64_t{0}},
                              {"seed", seed}};
            } else if (c_corr->parsed()) {
                config = json{{"command", "correlate"},
                              {"alpha", alpha_from_options(inline_alpha, alpha_file)},
                              {"p", p_text},
                              {"boundary", boundary},
                              {"step_cap", step_cap},
                              {"escape_margin", escape_margin},
                              {"seed", seed},
                              {"trials", trials},
                              {"subsets", subsets}};
            } else if (c_chern->parsed()) {
                config = json{{"command", "chernoff"},
                              {"alpha", alpha_from_options(inline_alpha, alpha_file)},
                              {"p", p_text},
                              {"boundary", boundary},
                              {"step_cap", step_cap},
                              {"escape_margin", escape_margin},
                              {"seed", seed},
                              {"trials", trials},
                              {"deltas", deltas}};
            } else if (c_cross->parsed()) {
                config = json{{"command", "cross-validate"},
                              {"n_max", n_max},
                              {"p_set", p_set},
                              {"trials", trials},
                              {"seed", seed}};
            } else if (c_heat->parsed()) {
                config = json{{"command", "heatmap"},
                              {"n", n},
                              {"p_steps", p_steps},
                              {"y_steps", y_steps}};
            }
        }
        const json result = run_config(config);
        emit(config, result, format, out_path, pgm_path);
        return g_exit_code;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
