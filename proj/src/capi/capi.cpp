#include "park/park.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "catalan.hpp"
#include "dyck.hpp"
#include "experiments.hpp"
#include "gambler.hpp"
#include "prefs.hpp"
#include "samplers.hpp"
#include "verify.hpp"
#include "walk.hpp"

using json = nlohmann::ordered_json;

struct park_prefs {
    park::PreferenceList list;
};

struct park_doc {
    std::string text;
    bool passed = true;
};

struct park_heatmap {
    park::HeatmapGrid grid;
};

namespace {

thread_local std::string g_last_error;

park_status fail(park_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

// map core exceptions onto status codes
template <typename Fn>
park_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(PARK_EINVAL, e.what());
    } catch (const std::domain_error& e) {
        return fail(PARK_EDOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(PARK_EINTERNAL, e.what());
    } catch (...) {
        return fail(PARK_EINTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

park_doc* make_doc(const json& j, bool passed = true) {
    auto* d = new park_doc;
    d->text = j.dump();
    d->passed = passed;
    return d;
}

park::StepProbability parse_p(const char* p) {
    if (p == nullptr) throw std::invalid_argument("probability string is null");
    return park::StepProbability::parse(p);
}

// double value plus the exact rational string when the scalar carries one
void emit_scalar(const park::Scalar& s, double* value_out, char** exact_out) {
    if (value_out) *value_out = s.value();
    if (exact_out) *exact_out = s.is_exact() ? dup_string(park::to_string(s.rational())) : nullptr;
}

park::WalkParameters to_core(const park_walk_params* p) {
    if (p == nullptr) throw std::invalid_argument("walk parameters are null");
    if (!(p->p >= 0.0 && p->p <= 1.0)) throw std::domain_error("p outside [0,1]");
    if (p->step_cap < 1) throw std::domain_error("step_cap must be >= 1");
    if (p->escape_margin < 0) throw std::domain_error("escape_margin must be >= 0");
    park::WalkParameters w;
    w.p = p->p;
    w.boundary = p->unbounded ? park::Boundary::unbounded : park::Boundary::open;
    w.step_cap = p->step_cap;
    w.escape_margin = p->escape_margin;
    w.record_trajectories = p->record_trajectories != 0;
    return w;
}

const park::PreferenceList& list_of(const park_prefs* p) {
    if (p == nullptr) throw std::invalid_argument("preference list is null");
    return p->list;
}

std::vector<park::Car> parse_members(const std::string& text) {
    std::vector<park::Car> members;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) {
                members.push_back(std::stoll(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    return members;
}

}  // namespace

extern "C" {

const char* park_status_name(park_status s) {
    switch (s) {
        case PARK_OK: return "ok";
        case PARK_EINVAL: return "invalid-argument";
        case PARK_EDOMAIN: return "domain-error";
        case PARK_ENOCONV: return "no-convergence";
        case PARK_ECHECK: return "check-failed";
        case PARK_EINTERNAL: return "internal-error";
    }
    return "?";
}

const char* park_last_error(void) { return g_last_error.c_str(); }

const char* park_version(void) { return "1.0.0"; }

void park_string_free(char* s) { std::free(s); }

park_status park_prefs_create(const int64_t* entries, size_t n, park_prefs** out) {
    return guarded([&] {
        if (entries == nullptr || out == nullptr) throw std::invalid_argument("null argument");
        std::vector<park::Spot> v(entries, entries + n);
        *out = new park_prefs{park::PreferenceList(std::move(v))};
        return PARK_OK;
    });
}

park_status park_prefs_parse(const char* text, park_prefs** out) {
    return guarded([&] {
        if (text == nullptr || out == nullptr) throw std::invalid_argument("null argument");
        std::vector<park::Spot> v;
        std::string cur;
        const std::string s = std::string(text) + ",";
        for (char c : s) {
            if (c == ',' || c == ' ' || c == '\n' || c == '\t' || c == '\r') {
                if (!cur.empty()) {
                    v.push_back(std::stoll(cur));
                    cur.clear();
                }
            } else {
                cur.push_back(c);
            }
        }
        *out = new park_prefs{park::PreferenceList(std::move(v))};
        return PARK_OK;
    });
}

void park_prefs_free(park_prefs* p) { delete p; }

size_t park_prefs_len(const park_prefs* p) { return p ? static_cast<size_t>(p->list.size()) : 0; }

int64_t park_prefs_entry(const park_prefs* p, size_t car_1based) {
    return p->list.pref(static_cast<park::Car>(car_1based));
}

park_status park_prefs_classify(const park_prefs* p, int* is_pf, int* is_id, int* is_wi) {
    return guarded([&] {
        const auto c = park::classify(list_of(p));
        if (is_pf) *is_pf = c.is_parking_function;
        if (is_id) *is_id = c.is_identity_outcome;
        if (is_wi) *is_wi = c.is_weakly_increasing;
        return PARK_OK;
    });
}

park_status park_prefs_mirror(const park_prefs* p, park_prefs** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        *out = new park_prefs{park::mirror(list_of(p))};
        return PARK_OK;
    });
}

park_status park_prefs_displacement(const park_prefs* p, int64_t* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto d = park::displacement(list_of(p));
        std::copy(d.begin(), d.end(), out);
        return PARK_OK;
    });
}

const char* park_doc_json(const park_doc* d) { return d ? d->text.c_str() : ""; }
int park_doc_passed(const park_doc* d) { return d && d->passed ? 1 : 0; }
void park_doc_free(park_doc* d) { delete d; }

park_status park_classical(const park_prefs* p, park_doc** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto r = park::classical_park(list_of(p));
        json j{{"n", list_of(p).size()},
               {"slots", r.slots},
               {"lucky", r.lucky},
               {"failed", r.failed},
               {"total_displacement", r.total_displacement}};
        *out = make_doc(j, r.failed.empty());
        return PARK_OK;
    });
}

park_status park_dyck_to_wipf(const char* path, park_prefs** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr) throw std::invalid_argument("null argument");
        *out = new park_prefs{park::dyck_to_wipf(park::DyckPath::parse(path))};
        return PARK_OK;
    });
}

park_status park_wipf_to_dyck(const park_prefs* p, char** path_out) {
    return guarded([&] {
        if (path_out == nullptr) throw std::invalid_argument("null out");
        *path_out = dup_string(park::wipf_to_dyck(list_of(p)).str());
        return PARK_OK;
    });
}

park_status park_dyck_returns(const char* path, int64_t* out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr) throw std::invalid_argument("null argument");
        *out = park::dyck_returns(park::DyckPath::parse(path));
        return PARK_OK;
    });
}

void park_walk_params_init(park_walk_params* params) {
    if (params == nullptr) return;
    params->p = 0.5;
    params->unbounded = 0;
    params->step_cap = 1'000'000;
    params->escape_margin = 0;
    params->record_trajectories = 0;
}

park_status park_simulate(const park_prefs* p, const park_walk_params* params, uint64_t seed,
                          uint64_t trials, park_sim_summary* summary, park_doc** doc) {
    return guarded([&] {
        const auto agg = park::batch_simulate(list_of(p), to_core(params), seed, trials);
        if (summary) {
            summary->trials = agg.trials;
            summary->all_park_count = agg.all_park_count;
            summary->cap_exceeded_trials = agg.cap_exceeded_trials;
            summary->all_park_freq = agg.all_park_freq;
            summary->cond_mean_steps = agg.cond_mean_steps;
            summary->cond_var_steps = agg.cond_var_steps;
        }
        if (doc) {
            json j{{"n", agg.n},
                   {"trials", agg.trials},
                   {"p", params->p},
                   {"boundary", params->unbounded ? "unbounded" : "open"},
                   {"seed", seed},
                   {"car_park_freq", agg.car_park_freq},
                   {"all_park_freq", agg.all_park_freq},
                   {"all_park_count", agg.all_park_count},
                   {"cond_mean_steps", agg.cond_mean_steps},
                   {"cond_var_steps", agg.cond_var_steps},
                   {"cap_exceeded_trials", agg.cap_exceeded_trials}};
            if (!agg.pair_freq.empty()) {
                json rows = json::array();
                for (park::Car i = 1; i <= agg.n; ++i) {
                    json row = json::array();
                    for (park::Car k = 1; k <= agg.n; ++k) row.push_back(agg.pair(i, k));
                    rows.push_back(std::move(row));
                }
                j["pair_freq"] = std::move(rows);
            }
            *doc = make_doc(j);
        }
        return PARK_OK;
    });
}

park_status park_open_prob_single(int64_t i, int64_t s, const char* p, double* value_out,
                                  char** exact_out) {
    return guarded([&] {
        emit_scalar(park::open_prob_single(i, s, parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_open_prob_all(const park_prefs* alpha, const char* p, double* value_out,
                               char** exact_out) {
    return guarded([&] {
        emit_scalar(park::open_prob_all(list_of(alpha), parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_open_time_single(int64_t i, int64_t s, const char* p, double* value_out,
                                  char** exact_out) {
    return guarded([&] {
        emit_scalar(park::open_expected_time_single(i, s, parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_open_time_all(const park_prefs* alpha, const char* p, double* value_out,
                               char** exact_out) {
    return guarded([&] {
        emit_scalar(park::open_expected_time_all(list_of(alpha), parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_open_time_all_half(const park_prefs* alpha, double* value_out, char** exact_out) {
    return guarded([&] {
        emit_scalar(park::open_expected_time_all_closed_half(list_of(alpha)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_unbounded_prob_single(int64_t d, const char* p, double tol, double* value_out,
                                       char** exact_out) {
    return guarded([&] {
        const auto res = park::unbounded_prob_single(d, parse_p(p), tol > 0 ? tol : 1e-12);
        emit_scalar(res.closed, value_out, exact_out);
        if (!res.series.converged && !res.series.skipped)
            return fail(PARK_ENOCONV, "cross-check series did not converge");
        return PARK_OK;
    });
}

park_status park_unbounded_prob_all(const park_prefs* alpha, const char* p, double* value_out,
                                    char** exact_out) {
    return guarded([&] {
        emit_scalar(park::unbounded_prob_all(list_of(alpha), parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_unbounded_time(int64_t d, const char* p, double* value_out, char** exact_out) {
    return guarded([&] {
        emit_scalar(park::unbounded_expected_time(d, parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_unbounded_variance(int64_t d, const char* p, double* value_out, char** exact_out) {
    return guarded([&] {
        emit_scalar(park::unbounded_time_variance(d, parse_p(p)), value_out, exact_out);
        return PARK_OK;
    });
}

park_status park_unbounded_prob_series(int64_t d, double p, double tol, double* value_out,
                                       int64_t* terms_out, double* tail_out) {
    return guarded([&] {
        if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p outside [0,1]");
        const auto res = park::unbounded_prob_series(d, p, tol > 0 ? tol : 1e-12);
        if (value_out) *value_out = res.value;
        if (terms_out) *terms_out = res.terms_used;
        if (tail_out) *tail_out = res.tail_bound;
        if (!res.converged) return fail(PARK_ENOCONV, "series did not converge within the budget");
        return PARK_OK;
    });
}

park_status park_time_via_paths(int64_t i, int64_t s, double p, double tol, double* value_out,
                                int64_t* terms_out, double* tail_out) {
    return guarded([&] {
        if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p outside [0,1]");
        const auto res = park::expected_time_via_paths(i, s, p, tol > 0 ? tol : 1e-12);
        if (value_out) *value_out = res.value;
        if (terms_out) *terms_out = res.terms_used;
        if (tail_out) *tail_out = res.tail_bound;
        if (!res.converged) return fail(PARK_ENOCONV, "series did not converge within the budget");
        return PARK_OK;
    });
}

park_status park_ruin_path_count(int64_t b, int64_t k, char** count_out) {
    return guarded([&] {
        if (count_out == nullptr) throw std::invalid_argument("null out");
        *count_out = dup_string(park::to_string(park::ruin_path_count(b, k)));
        return PARK_OK;
    });
}

park_status park_catalan_convolution(int64_t d, int64_t l, char** count_out) {
    return guarded([&] {
        if (count_out == nullptr) throw std::invalid_argument("null out");
        *count_out = dup_string(park::to_string(park::catalan_convolution(d, l)));
        return PARK_OK;
    });
}

park_status park_bounded_path_count(int64_t i, int64_t j, int64_t k, char** count_out) {
    return guarded([&] {
        if (count_out == nullptr) throw std::invalid_argument("null out");
        *count_out = dup_string(park::to_string(park::bounded_path_count(i, j, k)));
        return PARK_OK;
    });
}

park_status park_verify_time_solution(int64_t i, const char* p, double* max_residual_out,
                                      int* exact_zero_out) {
    return guarded([&] {
        const auto rep = park::verify_open_time_solution(i, parse_p(p));
        if (max_residual_out) *max_residual_out = rep.max_residual;
        if (exact_zero_out) *exact_zero_out = rep.exact_mode && rep.exact_zero;
        return PARK_OK;
    });
}

park_status park_catalan_number(int64_t n, char** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        *out = dup_string(park::to_string(park::catalan(n)));
        return PARK_OK;
    });
}

park_status park_catalan_triangle(int64_t n, int64_t k, char** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        *out = dup_string(park::to_string(park::catalan_triangle(n, k)));
        return PARK_OK;
    });
}

park_status park_wipf_entry_count(int64_t n, int64_t i, int64_t j, char** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        *out = dup_string(park::to_string(park::count_wipf_entry(n, i, j)));
        return PARK_OK;
    });
}

park_status park_last_entry_distribution(int64_t n, park_doc** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto d = park::last_entry_distribution(n);
        json counts = json::array();
        for (const auto& c : d.counts) counts.push_back(park::to_string(c));
        *out = make_doc(json{{"n", d.n}, {"counts", counts}, {"total", park::to_string(d.total)}});
        return PARK_OK;
    });
}

park_status park_expected_last_entry(int64_t n, char** mean_out, char** alt_out) {
    return guarded([&] {
        if (mean_out) *mean_out = dup_string(park::to_string(park::expected_last_entry(n)));
        if (alt_out) *alt_out = dup_string(park::to_string(park::expected_last_entry_alt(n)));
        return PARK_OK;
    });
}

park_status park_lucky_set_probability(int64_t n, const int64_t* members, size_t count,
                                       char** out) {
    return guarded([&] {
        if (out == nullptr || (members == nullptr && count > 0))
            throw std::invalid_argument("null argument");
        std::vector<park::Car> L(members, members + count);
        *out = dup_string(park::to_string(park::lucky_set_probability(n, L)));
        return PARK_OK;
    });
}

park_status park_lucky_count_distribution(int64_t n, int use_alt_factor, park_doc** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto masses = use_alt_factor ? park::lucky_count_distribution_alt(n)
                                           : park::lucky_count_distribution(n);
        json arr = json::array();
        park::BigRat total(0);
        for (const auto& m : masses) {
            arr.push_back(park::to_string(m));
            total += m;
        }
        *out = make_doc(json{{"n", n},
                             {"factor", use_alt_factor ? "n/k" : "k/n"},
                             {"masses", arr},
                             {"total_mass", park::to_string(total)}});
        return PARK_OK;
    });
}

park_status park_expected_lucky(int64_t n, char** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        *out = dup_string(park::to_string(park::expected_lucky(n)));
        return PARK_OK;
    });
}

park_status park_asymptotic(const char* formula, int64_t n, int64_t j, double* value_out,
                            char** exact_ratio_out) {
    return guarded([&] {
        if (formula == nullptr) throw std::invalid_argument("null formula");
        const auto f = park::parse_asymptotic_formula(formula);
        if (value_out) *value_out = park::asymptotic_estimate(f, n, j).value;
        if (exact_ratio_out)
            *exact_ratio_out = dup_string(park::to_string(park::asymptotic_exact_ratio(f, n, j)));
        return PARK_OK;
    });
}

park_status park_identity_checks(int64_t n_max, park_doc** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto rep = park::identity_checks(n_max);
        *out = make_doc(
            json{{"n_max", rep.n_max}, {"passed", rep.all_passed}, {"failures", rep.failures}},
            rep.all_passed);
        return rep.all_passed ? PARK_OK : fail(PARK_ECHECK, "an identity failed");
    });
}

park_status park_conditional_monotonicity(int64_t n, int64_t m, const int64_t* indices,
                                          size_t count, int* holds_out) {
    return guarded([&] {
        if (indices == nullptr || holds_out == nullptr)
            throw std::invalid_argument("null argument");
        std::vector<std::int64_t> idx(indices, indices + count);
        *holds_out = park::conditional_monotonicity_check(n, m, idx) ? 1 : 0;
        return PARK_OK;
    });
}

park_status park_sample(const char* family, int64_t n, uint64_t seed, uint64_t draw_index,
                        park_prefs** out) {
    return guarded([&] {
        if (family == nullptr || out == nullptr) throw std::invalid_argument("null argument");
        const park::SamplerSpec spec{park::parse_family(family), n, seed};
        *out = new park_prefs{park::sample(spec, draw_index)};
        return PARK_OK;
    });
}

park_status park_sampler_stats(int64_t n, uint64_t seed, uint64_t draws, park_doc** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto rep = park::empirical_wipf_checks(n, draws, seed);
        json j{{"family", "wipf"},
               {"n", rep.n},
               {"draws", rep.draws},
               {"last_entry_freq", rep.last_entry_freq},
               {"last_entry_exact", rep.last_entry_exact},
               {"mean_lucky", rep.mean_lucky},
               {"mean_lucky_exact", rep.mean_lucky_exact},
               {"mean_last", rep.mean_last},
               {"mean_last_exact", rep.mean_last_exact},
               {"within_ci", rep.within_ci}};
        *out = make_doc(j, rep.within_ci);
        return PARK_OK;
    });
}

park_status park_correlation_test(const park_prefs* alpha, const park_walk_params* params,
                                  uint64_t seed, uint64_t trials, const char* subsets,
                                  park_doc** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        std::vector<std::vector<park::Car>> subs;
        if (subsets != nullptr && *subsets != '\0') {
            const std::string text(subsets);
            std::size_t start = 0;
            while (start <= text.size()) {
                const auto end = text.find(';', start);
                const std::string part =
                    text.substr(start, end == std::string::npos ? std::string::npos : end - start);
                if (!part.empty()) subs.push_back(parse_members(part));
                if (end == std::string::npos) break;
                start = end + 1;
            }
        }
        const auto rep =
            park::correlation_test(list_of(alpha), to_core(params), seed, trials, subs);
        const auto entry_json = [](const park::CorrelationEntry& e) {
            return json{{"members", e.members},
                        {"joint", e.joint},
                        {"marginal_product", e.marginal_product},
                        {"se", e.se},
                        {"verdict", park::verdict_name(e.verdict)}};
        };
        json pairs = json::array(), subsets_j = json::array();
        for (const auto& e : rep.pairs) pairs.push_back(entry_json(e));
        for (const auto& e : rep.subsets) subsets_j.push_back(entry_json(e));
        *out = make_doc(json{{"trials", trials},
                             {"pairs", pairs},
                             {"subsets", subsets_j},
                             {"any_violation", rep.any_violation}},
                        !rep.any_violation);
        return PARK_OK;
    });
}

park_status park_chernoff_check(const park_prefs* alpha, const park_walk_params* params,
                                uint64_t seed, uint64_t trials, const double* deltas,
                                size_t delta_count, park_doc** out) {
    return guarded([&] {
        if (out == nullptr || deltas == nullptr) throw std::invalid_argument("null argument");
        const std::vector<double> ds(deltas, deltas + delta_count);
        const auto rep = park::chernoff_check(list_of(alpha), to_core(params), seed, trials, ds);
        json entries = json::array();
        for (const auto& e : rep.entries)
            entries.push_back(json{{"delta", e.delta},
                                   {"upper_bound", e.upper_bound},
                                   {"upper_freq", e.upper_freq},
                                   {"upper_ok", e.upper_ok},
                                   {"lower_bound", e.lower_bound},
                                   {"lower_freq", e.lower_freq},
                                   {"lower_ok", e.lower_ok}});
        *out = make_doc(json{{"mu", rep.mu},
                             {"marginals", rep.marginals},
                             {"trials", trials},
                             {"entries", entries},
                             {"passed", rep.passed}},
                        rep.passed);
        return rep.passed ? PARK_OK : fail(PARK_ECHECK, "a tail exceeded its bound");
    });
}

park_status park_cross_validate(int64_t n_max, const double* ps, size_t p_count, uint64_t trials,
                                uint64_t seed, park_doc** out) {
    return guarded([&] {
        if (out == nullptr || ps == nullptr) throw std::invalid_argument("null argument");
        const std::vector<double> pset(ps, ps + p_count);
        const auto rep = park::formula_cross_validation(n_max, pset, trials, seed);
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back(
                json{{"alpha", row.alpha},
                     {"p", row.p},
                     {"boundary", row.boundary == park::Boundary::open ? "open" : "unbounded"},
                     {"metric", row.metric},
                     {"mc", row.mc},
                     {"exact", row.exact},
                     {"sigma", row.sigma},
                     {"pass", row.pass}});
        *out = make_doc(json{{"trials", rep.trials},
                             {"cells", rep.rows.size()},
                             {"failures", rep.failures},
                             {"passed", rep.passed},
                             {"rows", rows}},
                        rep.passed);
        return rep.passed ? PARK_OK : fail(PARK_ECHECK, "a cell failed its 3-sigma check");
    });
}

park_status park_exact_marginals(const park_prefs* alpha, const char* p, double* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        const auto sp = parse_p(p);
        const auto m = park::exact_open_marginals(list_of(alpha), sp.value());
        std::copy(m.begin(), m.end(), out);
        return PARK_OK;
    });
}

park_status park_heatmap_compute(int64_t n, int64_t p_steps, int64_t y_steps, park_heatmap** out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null out");
        *out = new park_heatmap{park::heatmap(n, p_steps, y_steps)};
        return PARK_OK;
    });
}

size_t park_heatmap_p_count(const park_heatmap* h) { return h->grid.p_grid.size(); }
size_t park_heatmap_y_count(const park_heatmap* h) { return h->grid.y_grid.size(); }
double park_heatmap_p_at(const park_heatmap* h, size_t pi) { return h->grid.p_grid[pi]; }
double park_heatmap_y_at(const park_heatmap* h, size_t yi) { return h->grid.y_grid[yi]; }
uint64_t park_heatmap_cell(const park_heatmap* h, size_t pi, size_t yi) {
    return h->grid.cell(pi, yi);
}
uint64_t park_heatmap_total(const park_heatmap* h) { return h->grid.total; }
void park_heatmap_free(park_heatmap* h) { delete h; }

park_status park_verify_suite(const char* suite, int64_t n_max, uint64_t trials, uint64_t seed,
                              park_doc** out) {
    return guarded([&] {
        if (suite == nullptr || out == nullptr) throw std::invalid_argument("null argument");
        const auto rep = park::run_verify_suite(suite, n_max, trials, seed);
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json cj{{"name", c.name}, {"ok", c.ok}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        *out = make_doc(json{{"suite", rep.suite}, {"passed", rep.passed}, {"checks", checks}},
                        rep.passed);
        return rep.passed ? PARK_OK : fail(PARK_ECHECK, "verification suite failed");
    });
}

}  // extern "C"
