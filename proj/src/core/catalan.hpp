#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "prefs.hpp"

namespace park {

BigInt catalan(std::int64_t n);

// C(n, k) = ((n-k+1)/(n+1)) binom(n+k, k); counts ballot-style prefixes
BigInt catalan_triangle(std::int64_t n, std::int64_t k);

// Catalan numbers and triangle entries precomputed up to a bound
struct CatalanTable {
    explicit CatalanTable(std::int64_t n_max);
    const BigInt& cat(std::int64_t n) const { return catalan_[static_cast<std::size_t>(n)]; }
    std::int64_t n_max() const { return static_cast<std::int64_t>(catalan_.size()) - 1; }

private:
    std::vector<BigInt> catalan_;
};

// number of weakly increasing parking functions of length n with alpha_i = j
BigInt count_wipf_entry(std::int64_t n, std::int64_t i, std::int64_t j);

struct LastEntryDistribution {
    std::int64_t n = 0;
    std::vector<BigInt> counts;  // counts[j-1] = f_n(j)
    BigInt total;                // C_n
};

// f_n(j) via the recurrence f_n(j) = f_n(j-1) + f_{n-1}(j), f_n(n) = f_n(n-1)
LastEntryDistribution last_entry_distribution(std::int64_t n);

// exact mean of the last entry, (n^2 + 2)/(n + 2)
BigRat expected_last_entry(std::int64_t n);

// closed form n(n-1)/(n+2); equals expected_last_entry(n) - 1 (kept for
// comparison, see the formula notes in the README)
BigRat expected_last_entry_alt(std::int64_t n);

// probability a uniform WIPF has lucky-car set exactly L (members of [n])
BigRat lucky_set_probability(std::int64_t n, const std::vector<Car>& lucky_set);

// masses[k-1] = Pr[#lucky = k] with the normalizing factor k/n
std::vector<BigRat> lucky_count_distribution(std::int64_t n);

// same shape with the reciprocal factor n/k; does not normalize (total mass
// exceeds 1 already at n = 3) and is exposed only for comparison
std::vector<BigRat> lucky_count_distribution_alt(std::int64_t n);

// exact expected number of lucky cars, 3n/(n+2)
BigRat expected_lucky(std::int64_t n);

enum class AsymptoticFormula {
    wipf_fraction,        // Pr[uniform PF is weakly increasing] ~ (1/(e sqrt(pi n))) (4/n)^n
    last_entry_fixed,     // Pr[alpha_n = j], j fixed
    last_entry_near_top,  // Pr[alpha_n = n - j] ~ (1/sqrt 2) (j-1)/4^n
    last_entry_growing,   // Pr[alpha_n = j], j growing with n
};

AsymptoticFormula parse_asymptotic_formula(const std::string& name);
std::string asymptotic_formula_name(AsymptoticFormula f);

struct AsymptoticEstimate {
    AsymptoticFormula formula;
    std::int64_t n = 0;
    std::int64_t j = 0;
    double value = 0.0;
};

// evaluates the stated asymptotic expression; no claim beyond evaluation
AsymptoticEstimate asymptotic_estimate(AsymptoticFormula f, std::int64_t n, std::int64_t j);

// the exact counterpart ratio (count / total) the estimate approximates
BigRat asymptotic_exact_ratio(AsymptoticFormula f, std::int64_t n, std::int64_t j);

struct IdentityCheckReport {
    std::int64_t n_max = 0;
    bool all_passed = false;
    std::vector<std::int64_t> failures;
};

// exact sweep of the two power-weighted binomial sums
//   sum_j j   binom(j+n-1, j) = (n-1) n   binom(2n-1, n-1) / (n+1)
//   sum_j j^2 binom(j+n-1, j) = (n-1) n^3 binom(2n-1, n-1) / ((n+1)(n+2))
IdentityCheckReport identity_checks(std::int64_t n_max);

// checks by enumeration that {alpha_{i_1} <= m, ..., alpha_{i_k} <= m}
// coincides with {alpha_{i_k} <= m} over weakly increasing parking functions
bool conditional_monotonicity_check(std::int64_t n, std::int64_t m,
                                    const std::vector<std::int64_t>& indices);

}  // namespace park
