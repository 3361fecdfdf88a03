#pragma once

#include <cstdint>

#include "prefs.hpp"
#include "scalar.hpp"

namespace park {

// ---- open boundary (absorbing walk on {0..i}, park at i, exit at 0) ----

// w_s: probability that a walk from s hits i before 0. s/i at p = 1/2,
// p^(i-s) (p^s - q^s) / (p^i - q^i) otherwise.
Scalar open_prob_single(std::int64_t i, std::int64_t s, const StepProbability& p);

// product of w over cars; requires an identity-outcome preference list
Scalar open_prob_all(const PreferenceList& alpha, const StepProbability& p);

// conditional expected hitting time g_s: (i^2 - s^2)/3 at p = 1/2, the
// (q/p)-ratio form otherwise
Scalar open_expected_time_single(std::int64_t i, std::int64_t s, const StepProbability& p);

Scalar open_expected_time_all(const PreferenceList& alpha, const StepProbability& p);

// (2n^3 + 3n^2 + n)/18 - (1/3) sum alpha_i^2; valid at p = 1/2 only
Scalar open_expected_time_all_closed_half(const PreferenceList& alpha);

// ---- unbounded model (walk on Z, park on first free spot in [n]) ----

// first-passage path count: walks of length b from k > 0 to 0 staying
// positive until the final step
BigInt ruin_path_count(std::int64_t b, std::int64_t k);

// closed form (d/(l+d)) binom(2l+d-1, l); equals ruin_path_count(d+2l, d)
BigInt catalan_convolution(std::int64_t d, std::int64_t l);

struct SeriesResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
    bool converged = false;
    bool skipped = false;  // p = 1/2: closed form returned, series not summed
};

// truncation of sum_l conv(d,l) p^(d+l) q^l with a certified geometric tail
SeriesResult unbounded_prob_series(std::int64_t d, double p, double tol,
                                   std::int64_t term_budget = 1'000'000);

struct UnboundedProb {
    Scalar closed;        // 1 for p >= 1/2, (p/q)^d below
    SeriesResult series;  // cross-check (skipped at p = 1/2)
};

UnboundedProb unbounded_prob_single(std::int64_t d, const StepProbability& p, double tol = 1e-12);

Scalar unbounded_prob_all(const PreferenceList& alpha, const StepProbability& p);

// d/(p-q) and 4dpq/(p-q)^3; both require 1/2 < p <= 1
Scalar unbounded_expected_time(std::int64_t d, const StepProbability& p);
Scalar unbounded_time_variance(std::int64_t d, const StepProbability& p);

Scalar unbounded_expected_time_all(const PreferenceList& alpha, const StepProbability& p);
Scalar unbounded_time_variance_all(const PreferenceList& alpha, const StepProbability& p);

// ---- combinatorial route to the open-boundary expected time ----

// walks from spot 1 landing in spot k+1 after k+2j steps (j left steps) whose
// intermediate positions stay inside [1, i-1]
BigInt bounded_path_count(std::int64_t i, std::int64_t j, std::int64_t k);

// walks start -> target with j left steps, intermediates confined to [lo, hi]
BigInt strip_path_count(std::int64_t lo, std::int64_t hi, std::int64_t start, std::int64_t target,
                        std::int64_t j);

// series over path counts for the conditional time from s in {1, i-1};
// cross-checks open_expected_time_single
SeriesResult expected_time_via_paths(std::int64_t i, std::int64_t s, double p, double tol = 1e-12,
                                     std::int64_t term_budget = 100'000);

// ---- linear-system verification of the expected-time solution ----

struct ResidualReport {
    double max_residual = 0.0;
    bool exact_mode = false;
    bool exact_zero = false;  // every residual is the rational 0
    std::int64_t equations = 0;
};

// plugs the closed form into g_s w_s = p w_{s+1} g_{s+1} + q w_{s-1} g_{s-1} + w_s
ResidualReport verify_open_time_solution(std::int64_t i, const StepProbability& p);

}  // namespace park
