#include "samplers.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "catalan.hpp"
#include "dyck.hpp"
#include "rng.hpp"

namespace park {

Family parse_family(const std::string& name) {
    if (name == "pf") return Family::parking_function;
    if (name == "wipf") return Family::weakly_increasing;
    if (name == "pf-id") return Family::identity_outcome;
    throw std::invalid_argument("unknown family: " + name + " (expected pf, wipf, pf-id)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::parking_function: return "pf";
        case Family::weakly_increasing: return "wipf";
        case Family::identity_outcome: return "pf-id";
    }
    return "?";
}

namespace {

// uniform parking function via the circular protocol on Z_{n+1}: park the
// cars on a cycle of n+1 spots, then rotate so the one empty spot becomes
// the phantom spot n+1. Each parking function is hit by exactly n+1 draws.
PreferenceList sample_pf(std::int64_t n, SplitMix64& rng) {
    const std::int64_t m = n + 1;
    std::vector<std::int64_t> beta(static_cast<std::size_t>(n));
    for (auto& b : beta) b = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m)));

    // circular next-free pointers with path compression; index m is a sentinel
    std::vector<std::int64_t> parent(static_cast<std::size_t>(m) + 1);
    std::iota(parent.begin(), parent.end(), std::int64_t{0});
    const auto find = [&](std::int64_t s) {
        std::int64_t root = s;
        while (parent[static_cast<std::size_t>(root)] != root) root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(s)] != root) {
            const std::int64_t nxt = parent[static_cast<std::size_t>(s)];
            parent[static_cast<std::size_t>(s)] = root;
            s = nxt;
        }
        return root;
    };
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(m), 0);
    for (std::int64_t b : beta) {
        std::int64_t s = find(b);
        if (s == m) s = find(0);  // wrap
        occ[static_cast<std::size_t>(s)] = 1;
        parent[static_cast<std::size_t>(s)] = s + 1;
    }
    std::int64_t empty = -1;
    for (std::int64_t s = 0; s < m; ++s)
        if (!occ[static_cast<std::size_t>(s)]) { empty = s; break; }

    std::vector<Spot> alpha(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < alpha.size(); ++idx)
        alpha[idx] = ((beta[idx] - empty - 1) % m + m) % m + 1;
    return PreferenceList(std::move(alpha));
}

// uniform Dyck path by the cycle lemma: shuffle n+1 up steps and n down
// steps, rotate to start just after the last prefix-sum minimum, drop the
// leading up step. Every Dyck path corresponds to exactly 2n+1 arrangements.
PreferenceList sample_wipf(std::int64_t n, SplitMix64& rng) {
    const std::size_t len = static_cast<std::size_t>(2 * n + 1);
    std::vector<std::int8_t> seq(len);
    for (std::size_t t = 0; t < len; ++t) seq[t] = t <= static_cast<std::size_t>(n) ? 1 : -1;
    for (std::size_t t = len - 1; t > 0; --t) {
        const std::size_t u = static_cast<std::size_t>(rng.below(t + 1));
        std::swap(seq[t], seq[u]);
    }
    std::int64_t run = 0, best = 1, best_at = 0;
    for (std::size_t t = 0; t < len; ++t) {
        run += seq[t];
        if (run <= best) {
            best = run;
            best_at = static_cast<std::int64_t>(t);
        }
    }
    std::vector<bool> steps;
    steps.reserve(len - 1);
    for (std::size_t t = 1; t < len; ++t)
        steps.push_back(seq[(static_cast<std::size_t>(best_at) + 1 + t) % len] == 1);
    return dyck_to_wipf(DyckPath(std::move(steps)));
}

PreferenceList sample_pf_id(std::int64_t n, SplitMix64& rng) {
    std::vector<Spot> alpha(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i)
        alpha[static_cast<std::size_t>(i - 1)] =
            1 + static_cast<Spot>(rng.below(static_cast<std::uint64_t>(i)));
    return PreferenceList(std::move(alpha));
}

}  // namespace

PreferenceList sample(const SamplerSpec& spec, std::uint64_t draw_index) {
    if (spec.n < 1) throw std::domain_error("sampler needs n >= 1");
    SplitMix64 rng = make_stream(spec.seed, draw_index, 0x5A4D504Cull + static_cast<std::uint64_t>(spec.family));
    switch (spec.family) {
        case Family::parking_function: return sample_pf(spec.n, rng);
        case Family::weakly_increasing: return sample_wipf(spec.n, rng);
        case Family::identity_outcome: return sample_pf_id(spec.n, rng);
    }
    throw std::logic_error("unreachable");
}

EmpiricalWipfReport empirical_wipf_checks(std::int64_t n, std::uint64_t draws, std::uint64_t seed) {
    if (draws < 1) throw std::domain_error("draws must be >= 1");
    EmpiricalWipfReport rep;
    rep.n = n;
    rep.draws = draws;

    std::vector<std::uint64_t> last_counts(static_cast<std::size_t>(n), 0);
    std::uint64_t lucky_sum = 0, lucky_sq = 0, last_sum = 0, last_sq = 0;
    const SamplerSpec spec{Family::weakly_increasing, n, seed};
    for (std::uint64_t t = 0; t < draws; ++t) {
        const PreferenceList alpha = sample(spec, t);
        const Spot last = alpha.pref(n);
        ++last_counts[static_cast<std::size_t>(last - 1)];
        last_sum += static_cast<std::uint64_t>(last);
        last_sq += static_cast<std::uint64_t>(last * last);
        const auto lucky = classical_park(alpha).lucky.size();
        lucky_sum += lucky;
        lucky_sq += lucky * lucky;
    }

    const auto dist = last_entry_distribution(n);
    rep.within_ci = true;
    for (std::int64_t j = 1; j <= n; ++j) {
        const double freq = double(last_counts[static_cast<std::size_t>(j - 1)]) / double(draws);
        const double exact = to_double(BigRat(dist.counts[static_cast<std::size_t>(j - 1)], dist.total));
        rep.last_entry_freq.push_back(freq);
        rep.last_entry_exact.push_back(exact);
        const double se = std::sqrt(std::max(exact * (1.0 - exact), 1e-12) / double(draws));
        if (std::fabs(freq - exact) > 3.0 * se) rep.within_ci = false;
    }

    const auto mean_se = [&](std::uint64_t sum, std::uint64_t sq) {
        const double m = double(sum) / double(draws);
        const double var = double(sq) / double(draws) - m * m;
        return std::pair<double, double>(m, std::sqrt(std::max(var, 0.0) / double(draws)));
    };
    std::tie(rep.mean_lucky, rep.mean_lucky_se) = mean_se(lucky_sum, lucky_sq);
    std::tie(rep.mean_last, rep.mean_last_se) = mean_se(last_sum, last_sq);
    rep.mean_lucky_exact = to_double(expected_lucky(n));
    rep.mean_last_exact = to_double(expected_last_entry(n));
    if (std::fabs(rep.mean_lucky - rep.mean_lucky_exact) > 3.0 * rep.mean_lucky_se + 1e-9)
        rep.within_ci = false;
    if (std::fabs(rep.mean_last - rep.mean_last_exact) > 3.0 * rep.mean_last_se + 1e-9)
        rep.within_ci = false;
    return rep;
}

}  // namespace park
