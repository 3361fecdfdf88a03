#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// exhaustive enumeration over [n]^n, a direct recursive WIPF generator (the
// library goes through Dyck paths), brute-force confined-walk enumeration,
// and a chi-square quantile for goodness-of-fit gates.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// every list in [n]^n
inline void for_each_list(std::int64_t n,
                          const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 1);
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

// weakly increasing lists with v_i <= i, generated directly
inline void for_each_wipf_direct(std::int64_t n,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> v;
    const std::function<void()> rec = [&] {
        const std::int64_t i = static_cast<std::int64_t>(v.size()) + 1;
        if (i > n) {
            fn(v);
            return;
        }
        const std::int64_t lo = v.empty() ? 1 : v.back();
        for (std::int64_t x = lo; x <= i; ++x) {
            v.push_back(x);
            rec();
            v.pop_back();
        }
    };
    rec();
}

// reference protocol: first free spot to the right, failures recorded
struct RefPark {
    std::vector<std::int64_t> slots;  // 0 = empty
    std::vector<std::int64_t> lucky;
    std::vector<std::int64_t> failed;
    std::int64_t displacement = 0;
};

inline RefPark ref_park(const std::vector<std::int64_t>& alpha) {
    const std::int64_t n = static_cast<std::int64_t>(alpha.size());
    RefPark r;
    r.slots.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t car = 1; car <= n; ++car) {
        std::int64_t s = alpha[static_cast<std::size_t>(car - 1)];
        while (s <= n && r.slots[static_cast<std::size_t>(s - 1)] != 0) ++s;
        if (s > n) {
            r.failed.push_back(car);
            continue;
        }
        r.slots[static_cast<std::size_t>(s - 1)] = car;
        if (s == alpha[static_cast<std::size_t>(car - 1)]) r.lucky.push_back(car);
        r.displacement += s - alpha[static_cast<std::size_t>(car - 1)];
    }
    return r;
}

// number of +-1 walks start -> target, exactly `steps` steps, every
// intermediate position inside [lo, hi]; enumerates all 2^steps walks
inline std::int64_t strip_walks_brute(std::int64_t lo, std::int64_t hi, std::int64_t start,
                                      std::int64_t target, std::int64_t steps) {
    std::int64_t count = 0;
    const std::int64_t limit = std::int64_t{1} << steps;
    for (std::int64_t bits = 0; bits < limit; ++bits) {
        std::int64_t pos = start;
        bool ok = true;
        for (std::int64_t t = 0; t < steps; ++t) {
            pos += (bits >> t) & 1 ? 1 : -1;
            if (t + 1 < steps && (pos < lo || pos > hi)) {
                ok = false;
                break;
            }
        }
        if (ok && pos == target) ++count;
    }
    return count;
}

// Wilson-Hilferty approximation of the chi-square quantile; z is the normal
// quantile of the target significance (3.0902 for 1e-3)
inline double chisq_quantile(double df, double z = 3.0902) {
    const double t = 2.0 / (9.0 * df);
    const double c = 1.0 - t + z * std::sqrt(t);
    return df * c * c * c;
}

}  // namespace oracle
