#include "verify.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "catalan.hpp"
#include "dyck.hpp"
#include "experiments.hpp"
#include "gambler.hpp"
#include "prefs.hpp"

namespace park {

namespace {

void add(VerifySuiteResult& r, const std::string& name, bool ok, const std::string& detail = "") {
    r.checks.push_back({name, ok, detail});
}

void every_list(std::int64_t n, const std::function<void(const std::vector<Spot>&)>& fn) {
    std::vector<Spot> v(static_cast<std::size_t>(n), 1);
    for (;;) {
        fn(v);
        std::int64_t i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == n) {
            v[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) return;
        ++v[static_cast<std::size_t>(i)];
    }
}

void suite_identities(VerifySuiteResult& r, std::int64_t n_max) {
    const auto rep = identity_checks(std::max<std::int64_t>(n_max, 1));
    std::ostringstream os;
    for (std::int64_t n : rep.failures) os << n << " ";
    add(r, "binomial-identities-n<=" + std::to_string(rep.n_max), rep.all_passed, os.str());
}

void suite_convolution(VerifySuiteResult& r) {
    bool ok = true;
    for (std::int64_t d = 1; d <= 8 && ok; ++d)
        for (std::int64_t l = 0; l <= 12 && ok; ++l)
            ok = ruin_path_count(d + 2 * l, d) == catalan_convolution(d, l);
    add(r, "ruin-recurrence-vs-closed-form", ok);
    bool cat_ok = true;
    for (std::int64_t l = 0; l <= 12; ++l)
        cat_ok = cat_ok && catalan_convolution(1, l) == catalan(l);
    add(r, "convolution-d1-is-catalan", cat_ok);
}

void suite_series(VerifySuiteResult& r) {
    bool ok = true;
    std::string detail;
    for (double p : {0.1, 0.25, 0.4}) {
        for (std::int64_t d = 1; d <= 6; ++d) {
            const auto res = unbounded_prob_series(d, p, 1e-12);
            const double closed = std::pow(p / (1.0 - p), double(d));
            if (!res.converged || std::fabs(res.value - closed) > 1e-10) {
                ok = false;
                detail = "p=" + std::to_string(p) + " d=" + std::to_string(d);
            }
        }
    }
    add(r, "unbounded-series-vs-closed-form", ok, detail);
}

void suite_time_solution(VerifySuiteResult& r) {
    bool exact_ok = true;
    for (std::int64_t i = 2; i <= 6; ++i)
        for (auto pq : {std::pair<int, int>{1, 3}, {1, 2}, {3, 4}}) {
            const auto rep = verify_open_time_solution(i, StepProbability(BigRat(pq.first, pq.second)));
            exact_ok = exact_ok && rep.exact_zero;
        }
    add(r, "residuals-exact-zero-rational", exact_ok);
    bool float_ok = true;
    for (std::int64_t i = 2; i <= 10; ++i)
        for (double p : {0.3, 0.5, 0.9})
            float_ok = float_ok && verify_open_time_solution(i, StepProbability(p)).max_residual < 1e-10;
    add(r, "residuals-small-float", float_ok);
}

void suite_dyck(VerifySuiteResult& r, std::int64_t n_max) {
    const std::int64_t lim = std::min<std::int64_t>(std::max<std::int64_t>(n_max, 1), 10);
    bool inverse_ok = true, returns_ok = true;
    for (std::int64_t n = 1; n <= lim; ++n) {
        for_each_dyck_path(n, [&](const DyckPath& path) {
            const auto alpha = dyck_to_wipf(path);
            if (!(wipf_to_dyck(alpha) == path)) inverse_ok = false;
            if (dyck_returns(path) !=
                static_cast<std::int64_t>(classical_park(alpha).lucky.size()))
                returns_ok = false;
        });
    }
    add(r, "dyck-bijection-inverse-n<=" + std::to_string(lim), inverse_ok);
    add(r, "returns-equal-lucky-count", returns_ok);
}

void suite_combinatorics_oracle(VerifySuiteResult& r, std::int64_t n_max) {
    const std::int64_t lim = std::min<std::int64_t>(std::max<std::int64_t>(n_max, 2), 10);

    bool entry_ok = true, lucky_set_ok = true, lucky_count_ok = true;
    for (std::int64_t n = 1; n <= lim; ++n) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> entry_tally;
        std::map<std::vector<Car>, std::int64_t> set_tally;
        std::vector<std::int64_t> count_tally(static_cast<std::size_t>(n) + 1, 0);
        std::int64_t total = 0;
        for_each_wipf(n, [&](const PreferenceList& alpha) {
            ++total;
            for (std::int64_t i = 1; i <= n; ++i) ++entry_tally[{i, alpha.pref(i)}];
            const auto lucky = classical_park(alpha).lucky;
            ++set_tally[lucky];
            ++count_tally[lucky.size()];
        });
        for (std::int64_t i = 1; i <= n && entry_ok; ++i)
            for (std::int64_t j = 1; j <= i && entry_ok; ++j)
                entry_ok = count_wipf_entry(n, i, j) == entry_tally[{i, j}];
        for (std::int64_t bits = 0; bits < (std::int64_t{1} << (n - 1)) && lucky_set_ok; ++bits) {
            std::vector<Car> L{1};
            for (std::int64_t t = 0; t < n - 1; ++t)
                if ((bits >> t) & 1) L.push_back(t + 2);
            lucky_set_ok = lucky_set_probability(n, L) ==
                           BigRat(set_tally.count(L) ? set_tally[L] : 0, total);
        }
        const auto masses = lucky_count_distribution(n);
        BigRat mass_sum(0);
        for (std::int64_t k = 1; k <= n && lucky_count_ok; ++k) {
            lucky_count_ok = masses[static_cast<std::size_t>(k - 1)] ==
                             BigRat(count_tally[static_cast<std::size_t>(k)], total);
            mass_sum += masses[static_cast<std::size_t>(k - 1)];
        }
        lucky_count_ok = lucky_count_ok && mass_sum == BigRat(1);
    }
    add(r, "wipf-entry-counts-vs-enumeration-n<=" + std::to_string(lim), entry_ok);
    add(r, "lucky-set-law-vs-enumeration", lucky_set_ok);
    add(r, "lucky-count-law-vs-enumeration", lucky_count_ok);

    bool recur_ok = true;
    for (std::int64_t n = 1; n <= 30 && recur_ok; ++n) {
        const auto d = last_entry_distribution(n);
        for (std::int64_t j = 1; j <= n && recur_ok; ++j)
            recur_ok = d.counts[static_cast<std::size_t>(j - 1)] == count_wipf_entry(n, n, j);
    }
    add(r, "last-entry-recurrence-vs-direct-count-n<=30", recur_ok);

    bool exp_ok = true;
    for (std::int64_t n = 1; n <= 50 && exp_ok; ++n)
        exp_ok = expected_lucky(n) == BigRat(3 * n, n + 2) &&
                 expected_last_entry(n) == BigRat(n * n + 2, n + 2);
    add(r, "expectations-closed-forms-n<=50", exp_ok);

    bool family_ok = true;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(lim, 6); ++n) {
        std::int64_t pf = 0, wi = 0, id = 0;
        every_list(n, [&](const std::vector<Spot>& v) {
            const auto c = classify(PreferenceList(v));
            pf += c.is_parking_function;
            wi += c.is_weakly_increasing;
            id += c.is_identity_outcome;
        });
        BigInt fact = 1;
        for (std::int64_t t = 2; t <= n; ++t) fact *= t;
        family_ok = family_ok && BigInt(pf) == pow_int(BigInt(n + 1), static_cast<std::uint64_t>(n - 1)) &&
                    BigInt(wi) == catalan(n) && BigInt(id) == fact;
    }
    add(r, "family-cardinalities-n<=6", family_ok);
}

void suite_discrepancies(VerifySuiteResult& r) {
    // the quoted last-entry closed form is the exact mean shifted by one
    bool shift_ok = true;
    for (std::int64_t n = 2; n <= 12 && shift_ok; ++n) {
        BigInt weighted = 0, total = 0;
        for_each_wipf(n, [&](const PreferenceList& alpha) {
            weighted += alpha.pref(n);
            ++total;
        });
        shift_ok = BigRat(weighted, total) == expected_last_entry_alt(n) + 1;
    }
    add(r, "last-entry-mean-equals-quoted-form-plus-one", shift_ok);

    const auto alt = lucky_count_distribution_alt(3);
    BigRat alt_mass(0);
    for (const auto& m : alt) alt_mass += m;
    add(r, "reciprocal-lucky-factor-mass-exceeds-one", alt_mass > BigRat(1), to_string(alt_mass));

    bool norm_ok = true;
    for (std::int64_t n = 1; n <= 12 && norm_ok; ++n) {
        BigRat mass(0);
        for (const auto& m : lucky_count_distribution(n)) mass += m;
        norm_ok = mass == BigRat(1);
    }
    add(r, "k-over-n-factor-normalizes", norm_ok);
}

void suite_montecarlo(VerifySuiteResult& r, std::int64_t n_max, std::uint64_t trials,
                      std::uint64_t seed) {
    const std::int64_t lim = std::min<std::int64_t>(std::max<std::int64_t>(n_max, 2), 8);
    const auto rep = formula_cross_validation(lim, {0.3, 0.5, 0.75}, trials ? trials : 20000, seed);
    std::ostringstream os;
    os << rep.rows.size() << " cells, " << rep.failures << " failures";
    add(r, "monte-carlo-vs-exact-panel", rep.passed, os.str());
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"identities", "convolution", "series",        "time-solution", "dyck",
            "combinatorics-oracle", "discrepancies", "montecarlo",    "all"};
}

VerifySuiteResult run_verify_suite(const std::string& suite, std::int64_t n_max,
                                   std::uint64_t trials, std::uint64_t seed) {
    VerifySuiteResult r;
    r.suite = suite;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "identities") { suite_identities(r, n_max > 0 ? n_max : 100); known = true; }
    if (all || suite == "convolution") { suite_convolution(r); known = true; }
    if (all || suite == "series") { suite_series(r); known = true; }
    if (all || suite == "time-solution") { suite_time_solution(r); known = true; }
    if (all || suite == "dyck") { suite_dyck(r, n_max > 0 ? n_max : 10); known = true; }
    if (all || suite == "combinatorics-oracle") {
        suite_combinatorics_oracle(r, n_max > 0 ? n_max : 10);
        known = true;
    }
    if (all || suite == "discrepancies") { suite_discrepancies(r); known = true; }
    if (all || suite == "montecarlo") {
        suite_montecarlo(r, n_max > 0 ? n_max : 6, trials, seed);
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown verify suite: " + suite);
    r.passed = true;
    for (const auto& c : r.checks) r.passed = r.passed && c.ok;
    return r;
}

}  // namespace park
