#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefs.hpp"
#include "scalar.hpp"
#include "walk.hpp"

namespace park {

// ---- exact small-n reference chain (open boundary) ----
//
// Distribution over occupancy sets is tracked exactly; each blocked car is
// absorbed at the nearest free spot on either side (or the exit) with
// gambler's-ruin weights. Exponential in n; guarded at n <= 20.

// unconditional per-car parking probabilities
std::vector<double> exact_open_marginals(const PreferenceList& alpha, double p);
std::vector<BigRat> exact_open_marginals_exact(const PreferenceList& alpha, const BigRat& p);

// E[prod_{i in S} X_i]: mass of trajectories in which every car of S parks
double exact_open_subset_joint(const PreferenceList& alpha, double p, const std::vector<Car>& subset);
BigRat exact_open_subset_joint_exact(const PreferenceList& alpha, const BigRat& p,
                                     const std::vector<Car>& subset);

// ---- correlation ----

enum class CorrelationVerdict { consistent_negative, violation, inconclusive };
std::string verdict_name(CorrelationVerdict v);

struct CorrelationEntry {
    std::vector<Car> members;  // pair or subset
    double joint = 0.0;        // empirical E[prod X_i]
    double marginal_product = 0.0;
    double se = 0.0;  // combined standard error of (joint - product)
    CorrelationVerdict verdict = CorrelationVerdict::inconclusive;
};

struct CorrelationReport {
    std::vector<CorrelationEntry> pairs;
    std::vector<CorrelationEntry> subsets;
    bool any_violation = false;
};

// Verdicts at a 3-sigma margin: a positive excess beyond 3 se flags
// violation; a non-positive point estimate is consistent with negative
// correlation; anything else (including too few samples) is inconclusive.
CorrelationReport correlation_test(const PreferenceList& alpha, const WalkParameters& params,
                                   std::uint64_t seed, std::uint64_t trials,
                                   const std::vector<std::vector<Car>>& subsets);

// ---- Chernoff-style tail check ----

struct ChernoffEntry {
    double delta = 0.0;
    double upper_bound = 0.0, upper_freq = 0.0, upper_se = 0.0;
    double lower_bound = 0.0, lower_freq = 0.0, lower_se = 0.0;
    bool upper_ok = false, lower_ok = false;
};

struct ChernoffReport {
    double mu = 0.0;                // sum of exact marginals
    std::vector<double> marginals;  // exact Pr[X_i]
    std::vector<ChernoffEntry> entries;
    bool passed = false;
};

// empirical tails of N = sum X_i against (e^d/(1+d)^(1+d))^mu and
// (e^d/(1-d)^(1-d))^mu, with mu from the exact chain (open boundary only)
ChernoffReport chernoff_check(const PreferenceList& alpha, const WalkParameters& params,
                              std::uint64_t seed, std::uint64_t trials,
                              const std::vector<double>& deltas);

// ---- cumulative probability grid over PF_n(id) ----

struct HeatmapGrid {
    std::int64_t n = 0;
    std::vector<double> p_grid;
    std::vector<double> y_grid;
    std::vector<std::uint64_t> cells;  // row-major [p][y]: #alpha with prob <= y
    std::uint64_t total = 0;           // n!

    std::uint64_t cell(std::size_t pi, std::size_t yi) const {
        return cells[pi * y_grid.size() + yi];
    }
};

HeatmapGrid heatmap(std::int64_t n, std::int64_t p_steps, std::int64_t y_steps);

// ---- Monte Carlo vs exact formulas ----

struct CrossValidationRow {
    std::vector<Spot> alpha;
    double p = 0.0;
    Boundary boundary = Boundary::open;
    std::string metric;  // "prob", "mean", "var"
    double mc = 0.0;
    double exact = 0.0;
    double sigma = 0.0;  // standard error of the Monte Carlo estimate
    bool pass = false;
};

struct CrossValidationReport {
    std::vector<CrossValidationRow> rows;
    std::uint64_t trials = 0;
    std::int64_t failures = 0;
    bool passed = false;
};

// deterministic panel: identity-outcome draws filtered to keep every tested
// open-boundary parking probability above min_prob, so conditional time
// statistics always have samples
std::vector<PreferenceList> cross_validation_panel(std::int64_t n_max,
                                                   const std::vector<double>& ps,
                                                   std::uint64_t seed, std::int64_t count,
                                                   double min_prob = 0.05);

CrossValidationReport formula_cross_validation(std::int64_t n_max, const std::vector<double>& ps,
                                               std::uint64_t trials, std::uint64_t seed);

}  // namespace park
