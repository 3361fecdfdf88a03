#include "catalan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dyck.hpp"

namespace park {

BigInt catalan(std::int64_t n) {
    if (n < 0) throw std::domain_error("catalan: n must be >= 0");
    return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

BigInt catalan_triangle(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("catalan_triangle: need 0 <= k <= n");
    return exact_div(BigInt(n - k + 1) * binomial(n + k, k), BigInt(n + 1));
}

CatalanTable::CatalanTable(std::int64_t n_max) {
    if (n_max < 0) throw std::domain_error("CatalanTable: n_max must be >= 0");
    catalan_.reserve(static_cast<std::size_t>(n_max) + 1);
    catalan_.push_back(1);
    // C_{m+1} = C_m * 2(2m+1)/(m+2)
    for (std::int64_t m = 0; m < n_max; ++m)
        catalan_.push_back(exact_div(catalan_.back() * BigInt(2 * (2 * m + 1)), BigInt(m + 2)));
}

BigInt count_wipf_entry(std::int64_t n, std::int64_t i, std::int64_t j) {
    if (!(1 <= j && j <= i && i <= n)) throw std::domain_error("count_wipf_entry: need 1 <= j <= i <= n");
    const BigInt num =
        BigInt(i - j + 1) * BigInt(i - j + 2) * binomial(i + j - 2, j - 1) * binomial(2 * n - i - j + 1, n - i);
    return exact_div(num, BigInt(i) * BigInt(n - j + 2));
}

LastEntryDistribution last_entry_distribution(std::int64_t n) {
    if (n < 1) throw std::domain_error("last_entry_distribution: n must be >= 1");
    // build rows m = 1..n of f_m(j)
    std::vector<BigInt> row{BigInt(1)};  // f_1
    for (std::int64_t m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m));
        next[0] = 1;
        for (std::int64_t j = 2; j < m; ++j)
            next[static_cast<std::size_t>(j - 1)] =
                next[static_cast<std::size_t>(j - 2)] + row[static_cast<std::size_t>(j - 1)];
        next[static_cast<std::size_t>(m - 1)] = next[static_cast<std::size_t>(m - 2)];
        row = std::move(next);
    }
    LastEntryDistribution d;
    d.n = n;
    d.counts = std::move(row);
    d.total = 0;
    for (const BigInt& c : d.counts) d.total += c;
    return d;
}

BigRat expected_last_entry(std::int64_t n) {
    const LastEntryDistribution d = last_entry_distribution(n);
    BigInt weighted = 0;
    for (std::int64_t j = 1; j <= n; ++j) weighted += BigInt(j) * d.counts[static_cast<std::size_t>(j - 1)];
    return BigRat(weighted, d.total);
}

BigRat expected_last_entry_alt(std::int64_t n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    return BigRat(BigInt(n) * BigInt(n - 1), BigInt(n + 2));
}

BigRat lucky_set_probability(std::int64_t n, const std::vector<Car>& lucky_set) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    std::vector<Car> ls = lucky_set;
    std::sort(ls.begin(), ls.end());
    for (Car c : ls)
        if (c < 1 || c > n) throw std::domain_error("lucky set member outside [1, n]");
    if (ls.empty() || ls.front() != 1) return BigRat(0);
    BigInt prod = 1;
    for (std::size_t t = 0; t + 1 < ls.size(); ++t) prod *= catalan(ls[t + 1] - ls[t] - 1);
    prod *= catalan(n - ls.back());
    return BigRat(prod, catalan(n));
}

std::vector<BigRat> lucky_count_distribution(std::int64_t n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    const BigInt cn = catalan(n);
    std::vector<BigRat> masses;
    masses.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k)
        masses.push_back(BigRat(binomial(2 * n - k - 1, n - k) * k, cn * n));
    return masses;
}

std::vector<BigRat> lucky_count_distribution_alt(std::int64_t n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    const BigInt cn = catalan(n);
    std::vector<BigRat> masses;
    masses.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k)
        masses.push_back(BigRat(binomial(2 * n - k - 1, n - k) * n, cn * k));
    return masses;
}

BigRat expected_lucky(std::int64_t n) {
    const auto masses = lucky_count_distribution(n);
    BigRat e(0);
    for (std::int64_t k = 1; k <= n; ++k) e += BigRat(k) * masses[static_cast<std::size_t>(k - 1)];
    return e;
}

AsymptoticFormula parse_asymptotic_formula(const std::string& name) {
    if (name == "wipf-fraction") return AsymptoticFormula::wipf_fraction;
    if (name == "last-entry-fixed") return AsymptoticFormula::last_entry_fixed;
    if (name == "last-entry-near-top") return AsymptoticFormula::last_entry_near_top;
    if (name == "last-entry-growing") return AsymptoticFormula::last_entry_growing;
    throw std::invalid_argument("unknown asymptotic formula: " + name);
}

std::string asymptotic_formula_name(AsymptoticFormula f) {
    switch (f) {
        case AsymptoticFormula::wipf_fraction: return "wipf-fraction";
        case AsymptoticFormula::last_entry_fixed: return "last-entry-fixed";
        case AsymptoticFormula::last_entry_near_top: return "last-entry-near-top";
        case AsymptoticFormula::last_entry_growing: return "last-entry-growing";
    }
    return "?";
}

AsymptoticEstimate asymptotic_estimate(AsymptoticFormula f, std::int64_t n, std::int64_t j) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    AsymptoticEstimate e{f, n, j, 0.0};
    const double ln4 = std::log(4.0);
    const double pi = std::acos(-1.0);
    switch (f) {
        case AsymptoticFormula::wipf_fraction: {
            // (1/(e sqrt(pi n))) (4/n)^n, evaluated in log space
            const double lg = -1.0 - 0.5 * std::log(pi * n) + double(n) * (ln4 - std::log(double(n)));
            e.value = std::exp(lg);
            break;
        }
        case AsymptoticFormula::last_entry_fixed: {
            if (j < 1 || j > n) throw std::domain_error("need 1 <= j <= n");
            // sqrt(pi n)(n-j+1) e^lambda Poisson(lambda, j-1) with lambda = n+j-2
            // = sqrt(pi n)(n-j+1) lambda^(j-1) / ((j-1)! 4^n)
            const double lambda = double(n + j - 2);
            double lg = 0.5 * std::log(pi * n) + std::log(double(n - j + 1)) - double(n) * ln4;
            if (j > 1) lg += double(j - 1) * std::log(lambda) - std::lgamma(double(j));
            e.value = std::exp(lg);
            break;
        }
        case AsymptoticFormula::last_entry_near_top: {
            if (j < 1) throw std::domain_error("need j >= 1");
            if (j == 1) {
                e.value = 0.0;  // the (j-1) factor
                break;
            }
            const double lg = std::log(double(j - 1)) - 0.5 * std::log(2.0) - double(n) * ln4;
            e.value = std::exp(lg);
            break;
        }
        case AsymptoticFormula::last_entry_growing: {
            if (j < 2 || j > n) throw std::domain_error("need 2 <= j <= n");
            // (n+1) e^(n+j-1) (n-j+1) sqrt(2 pi n) / ((n+j-2) 4^n) * Poisson(lambda, j-1)
            // = e (n+1)(n-j+1) sqrt(2 pi n) lambda^(j-2) / ((j-1)! 4^n)
            const double lambda = double(n + j - 2);
            double lg = 1.0 + std::log(double(n + 1)) + std::log(double(n - j + 1)) +
                        0.5 * std::log(2.0 * pi * n) - double(n) * ln4 - std::lgamma(double(j));
            lg += double(j - 2) * std::log(lambda);
            e.value = std::exp(lg);
            break;
        }
    }
    return e;
}

BigRat asymptotic_exact_ratio(AsymptoticFormula f, std::int64_t n, std::int64_t j) {
    switch (f) {
        case AsymptoticFormula::wipf_fraction:
            return BigRat(catalan(n), pow_int(BigInt(n + 1), static_cast<std::uint64_t>(n - 1)));
        case AsymptoticFormula::last_entry_fixed:
        case AsymptoticFormula::last_entry_growing: {
            const auto d = last_entry_distribution(n);
            if (j < 1 || j > n) throw std::domain_error("need 1 <= j <= n");
            return BigRat(d.counts[static_cast<std::size_t>(j - 1)], d.total);
        }
        case AsymptoticFormula::last_entry_near_top: {
            const auto d = last_entry_distribution(n);
            if (j < 0 || n - j < 1) throw std::domain_error("need 1 <= n - j <= n");
            return BigRat(d.counts[static_cast<std::size_t>(n - j - 1)], d.total);
        }
    }
    throw std::logic_error("unreachable");
}

IdentityCheckReport identity_checks(std::int64_t n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be >= 1");
    IdentityCheckReport rep;
    rep.n_max = n_max;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        BigInt s1 = 0, s2 = 0;
        for (std::int64_t j = 0; j <= n - 1; ++j) {
            const BigInt b = binomial(j + n - 1, j);
            s1 += BigInt(j) * b;
            s2 += BigInt(j) * BigInt(j) * b;
        }
        const BigInt lead = BigInt(n - 1) * BigInt(n) * binomial(2 * n - 1, n - 1);
        const bool ok1 = s1 * BigInt(n + 1) == lead;
        const bool ok2 = s2 * BigInt(n + 1) * BigInt(n + 2) == lead * BigInt(n) * BigInt(n);
        if (!(ok1 && ok2)) rep.failures.push_back(n);
    }
    rep.all_passed = rep.failures.empty();
    return rep;
}

bool conditional_monotonicity_check(std::int64_t n, std::int64_t m,
                                    const std::vector<std::int64_t>& indices) {
    if (indices.empty()) throw std::domain_error("need at least one index");
    if (!std::is_sorted(indices.begin(), indices.end()))
        throw std::domain_error("indices must be sorted");
    for (std::int64_t idx : indices)
        if (idx < 1 || idx > n) throw std::domain_error("index outside [1, n]");
    if (m < indices.front() || m > n) throw std::domain_error("need i_1 <= m <= n");
    const std::int64_t last = indices.back();
    bool coincide = true;
    for_each_wipf(n, [&](const PreferenceList& alpha) {
        bool all_le = true;
        for (std::int64_t idx : indices)
            if (alpha.pref(idx) > m) { all_le = false; break; }
        const bool last_le = alpha.pref(last) <= m;
        if (all_le != last_le) coincide = false;
    });
    return coincide;
}

}  // namespace park
