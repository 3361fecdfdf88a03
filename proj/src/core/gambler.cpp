#include "gambler.hpp"

#include <cmath>
#include <stdexcept>

namespace park {

namespace {

void check_spot_range(std::int64_t i, std::int64_t s) {
    if (i < 1) throw std::domain_error("target spot must be >= 1");
    if (s < 1 || s > i) throw std::domain_error("start spot outside [1, i]");
}

// (1 - r^s) / (1 - r^i) with r the sub-unit ratio; see open_prob_single
double open_prob_float(std::int64_t i, std::int64_t s, double p) {
    if (s == i) return 1.0;
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    const double q = 1.0 - p;
    if (p > 0.5) {
        const double r = q / p;
        return (1.0 - std::pow(r, double(s))) / (1.0 - std::pow(r, double(i)));
    }
    const double rho = p / q;
    return std::pow(rho, double(i - s)) * (1.0 - std::pow(rho, double(s))) /
           (1.0 - std::pow(rho, double(i)));
}

BigRat open_prob_exact(std::int64_t i, std::int64_t s, const BigRat& p) {
    if (s == i) return BigRat(1);
    if (p == 0) return BigRat(0);
    if (p == 1) return BigRat(1);
    const BigRat q = BigRat(1) - p;
    const BigRat ps = pow_rat(p, static_cast<std::uint64_t>(s));
    const BigRat qs = pow_rat(q, static_cast<std::uint64_t>(s));
    const BigRat pi = pow_rat(p, static_cast<std::uint64_t>(i));
    const BigRat qi = pow_rat(q, static_cast<std::uint64_t>(i));
    return pow_rat(p, static_cast<std::uint64_t>(i - s)) * (ps - qs) / (pi - qi);
}

double open_time_float(std::int64_t i, std::int64_t s, double p) {
    if (s == i) return 0.0;
    const double q = 1.0 - p;
    // x (1 + r^x) / (1 - r^x) written with the sub-unit ratio on either side
    // of 1/2 so large i stays finite
    const double r = (p > 0.5) ? q / p : p / q;
    const auto term = [&](std::int64_t x) {
        const double rx = std::pow(r, double(x));
        return double(x) * (1.0 + rx) / (1.0 - rx);
    };
    return (term(i) - term(s)) / std::fabs(p - q);
}

BigRat open_time_exact(std::int64_t i, std::int64_t s, const BigRat& p) {
    if (s == i) return BigRat(0);
    const BigRat q = BigRat(1) - p;
    if (p == 0 || p == 1) {
        // r^x degenerates; the ratio form collapses to |i - s|
        return BigRat(i - s);
    }
    const BigRat r = q / p;
    const auto term = [&](std::int64_t x) {
        const BigRat rx = pow_rat(r, static_cast<std::uint64_t>(x));
        return BigRat(x) * (BigRat(1) + rx) / (BigRat(1) - rx);
    };
    return (term(i) - term(s)) / (p - q);
}

}  // namespace

Scalar open_prob_single(std::int64_t i, std::int64_t s, const StepProbability& p) {
    check_spot_range(i, s);
    if (p.is_exact()) {
        if (p.rational() == BigRat(1, 2)) return Scalar(BigRat(s, i));
        return Scalar(open_prob_exact(i, s, p.rational()));
    }
    if (p.is_half()) return Scalar(double(s) / double(i));
    return Scalar(open_prob_float(i, s, p.value()));
}

Scalar open_prob_all(const PreferenceList& alpha, const StepProbability& p) {
    if (!classify(alpha).is_identity_outcome)
        throw std::domain_error("open_prob_all requires an identity-outcome preference list");
    if (p.is_exact()) {
        BigRat prod(1);
        for (Car i = 1; i <= alpha.size(); ++i)
            prod *= open_prob_single(i, alpha.pref(i), p).rational();
        return Scalar(prod);
    }
    double prod = 1.0;
    for (Car i = 1; i <= alpha.size(); ++i)
        prod *= open_prob_single(i, alpha.pref(i), p).value();
    return Scalar(prod);
}

Scalar open_expected_time_single(std::int64_t i, std::int64_t s, const StepProbability& p) {
    check_spot_range(i, s);
    if (p.is_exact()) {
        if (p.rational() == BigRat(1, 2)) return Scalar(BigRat(i * i - s * s, 3));
        return Scalar(open_time_exact(i, s, p.rational()));
    }
    if (p.is_half()) return Scalar(double(i * i - s * s) / 3.0);
    return Scalar(open_time_float(i, s, p.value()));
}

Scalar open_expected_time_all(const PreferenceList& alpha, const StepProbability& p) {
    if (!classify(alpha).is_identity_outcome)
        throw std::domain_error("open_expected_time_all requires an identity-outcome preference list");
    if (p.is_exact()) {
        BigRat sum(0);
        for (Car i = 1; i <= alpha.size(); ++i)
            sum += open_expected_time_single(i, alpha.pref(i), p).rational();
        return Scalar(sum);
    }
    double sum = 0.0;
    for (Car i = 1; i <= alpha.size(); ++i)
        sum += open_expected_time_single(i, alpha.pref(i), p).value();
    return Scalar(sum);
}

Scalar open_expected_time_all_closed_half(const PreferenceList& alpha) {
    const std::int64_t n = alpha.size();
    BigRat sum_sq(0);
    for (Spot a : alpha.entries()) sum_sq += BigRat(a) * BigRat(a);
    return Scalar(BigRat(2 * n * n * n + 3 * n * n + n, 18) - sum_sq / 3);
}

BigInt ruin_path_count(std::int64_t b, std::int64_t k) {
    if (b < 0 || k < 0) throw std::domain_error("ruin_path_count: negative input");
    if (b == 0) return k == 0 ? 1 : 0;
    if (k == 0 || k > b || ((b - k) & 1)) return 0;
    // forward DP over heights >= 1; final step is the only arrival at 0
    std::vector<BigInt> v(static_cast<std::size_t>(b + 2), BigInt(0));
    v[static_cast<std::size_t>(k)] = 1;
    for (std::int64_t t = 0; t < b - 1; ++t) {
        std::vector<BigInt> next(v.size(), BigInt(0));
        for (std::size_t h = 1; h + 1 < v.size(); ++h) {
            if (v[h] == 0) continue;
            if (h + 1 < v.size()) next[h + 1] += v[h];
            if (h >= 2) next[h - 1] += v[h];
        }
        v = std::move(next);
    }
    return v[1];
}

BigInt catalan_convolution(std::int64_t d, std::int64_t l) {
    if (d < 1 || l < 0) throw std::domain_error("catalan_convolution: d >= 1 and l >= 0 required");
    return exact_div(BigInt(d) * binomial(2 * l + d - 1, l), BigInt(l + d));
}

SeriesResult unbounded_prob_series(std::int64_t d, double p, double tol, std::int64_t term_budget) {
    if (d < 0) throw std::domain_error("displacement must be >= 0");
    if (tol <= 0) throw std::domain_error("tolerance must be positive");
    SeriesResult r;
    if (d == 0) {
        r.value = 1.0;
        r.converged = true;
        return r;
    }
    const double q = 1.0 - p;
    const double four_pq = 4.0 * p * q;
    // term ratios settle below 4pq once l passes this point
    const std::int64_t l_geo = std::max<std::int64_t>(0, ((d - 4) * (d + 1) + 5) / 6);
    double term = std::pow(p, double(d));  // l = 0
    double sum = term;
    std::int64_t l = 0;
    while (l < term_budget) {
        if (l >= l_geo && four_pq < 1.0 && term * four_pq / (1.0 - four_pq) <= tol) {
            r.converged = true;
            r.tail_bound = term * four_pq / (1.0 - four_pq);
            break;
        }
        const double ratio = p * q * double(2 * l + d + 1) * double(2 * l + d) /
                             (double(l + 1) * double(l + d + 1));
        term *= ratio;
        sum += term;
        ++l;
        if (term == 0.0) {
            r.converged = true;
            r.tail_bound = 0.0;
            break;
        }
    }
    r.value = sum;
    r.terms_used = l + 1;
    if (!r.converged) r.tail_bound = term;
    return r;
}

UnboundedProb unbounded_prob_single(std::int64_t d, const StepProbability& p, double tol) {
    if (d < 0) throw std::domain_error("displacement must be >= 0");
    UnboundedProb out;
    if (d == 0) {
        out.closed = p.is_exact() ? Scalar(BigRat(1)) : Scalar(1.0);
        out.series.value = 1.0;
        out.series.converged = true;
        return out;
    }
    const bool below_half = p.is_exact() ? (p.rational() < BigRat(1, 2)) : (p.value() < 0.5);
    if (p.is_half() || !below_half) {
        out.closed = p.is_exact() ? Scalar(BigRat(1)) : Scalar(1.0);
    } else if (p.is_exact()) {
        out.closed = Scalar(pow_rat(p.rational() / p.rational_q(), static_cast<std::uint64_t>(d)));
    } else {
        out.closed = Scalar(std::pow(p.value() / p.q(), double(d)));
    }
    if (p.is_half()) {
        // the series sums to 1 but only sub-geometrically; skip it
        out.series.value = 1.0;
        out.series.skipped = true;
        return out;
    }
    out.series = unbounded_prob_series(d, p.value(), tol);
    if (out.series.converged &&
        std::fabs(out.series.value - out.closed.value()) > tol + 64 * 1e-16 * d)
        throw std::logic_error("unbounded series disagrees with the closed form");
    return out;
}

Scalar unbounded_prob_all(const PreferenceList& alpha, const StepProbability& p) {
    if (!classify(alpha).is_identity_outcome)
        throw std::domain_error("unbounded_prob_all requires an identity-outcome preference list");
    std::int64_t total_d = 0;
    for (Car i = 1; i <= alpha.size(); ++i) total_d += i - alpha.pref(i);
    const bool below_half = p.is_exact() ? (p.rational() < BigRat(1, 2)) : (p.value() < 0.5);
    if (p.is_half() || !below_half) return p.is_exact() ? Scalar(BigRat(1)) : Scalar(1.0);
    if (p.is_exact())
        return Scalar(pow_rat(p.rational() / p.rational_q(), static_cast<std::uint64_t>(total_d)));
    return Scalar(std::pow(p.value() / p.q(), double(total_d)));
}

namespace {

void check_supercritical(const StepProbability& p) {
    const bool ok = p.is_exact() ? (p.rational() > BigRat(1, 2) && p.rational() <= 1)
                                 : (p.value() > 0.5 && !p.is_half());
    if (!ok)
        throw std::domain_error(
            "unbounded conditional time statistics are defined only for 1/2 < p <= 1");
}

}  // namespace

Scalar unbounded_expected_time(std::int64_t d, const StepProbability& p) {
    if (d < 0) throw std::domain_error("displacement must be >= 0");
    check_supercritical(p);
    if (p.is_exact()) return Scalar(BigRat(d) / (p.rational() - p.rational_q()));
    return Scalar(double(d) / (p.value() - p.q()));
}

Scalar unbounded_time_variance(std::int64_t d, const StepProbability& p) {
    if (d < 0) throw std::domain_error("displacement must be >= 0");
    check_supercritical(p);
    if (p.is_exact()) {
        const BigRat diff = p.rational() - p.rational_q();
        return Scalar(BigRat(4 * d) * p.rational() * p.rational_q() / (diff * diff * diff));
    }
    const double diff = p.value() - p.q();
    return Scalar(4.0 * double(d) * p.value() * p.q() / (diff * diff * diff));
}

namespace {

std::int64_t total_displacement_of(const PreferenceList& alpha) {
    if (!classify(alpha).is_identity_outcome)
        throw std::domain_error("requires an identity-outcome preference list");
    std::int64_t t = 0;
    for (Car i = 1; i <= alpha.size(); ++i) t += i - alpha.pref(i);
    return t;
}

}  // namespace

Scalar unbounded_expected_time_all(const PreferenceList& alpha, const StepProbability& p) {
    return unbounded_expected_time(total_displacement_of(alpha), p);
}

Scalar unbounded_time_variance_all(const PreferenceList& alpha, const StepProbability& p) {
    return unbounded_time_variance(total_displacement_of(alpha), p);
}

BigInt bounded_path_count(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i < 2) throw std::domain_error("segment height must be >= 2");
    if (j < 0 || k < 0 || k > i - 1) throw std::domain_error("bounded_path_count: bad (j, k)");
    // rows over the number of left steps; spot s = k+1, interior [1, i-1]
    std::vector<BigInt> prev(static_cast<std::size_t>(i), BigInt(1));  // j = 0
    for (std::int64_t jj = 1; jj <= j; ++jj) {
        std::vector<BigInt> cur(static_cast<std::size_t>(i), BigInt(0));
        for (std::int64_t kk = 0; kk <= i - 1; ++kk) {
            const std::int64_t s = kk + 1;
            BigInt v = 0;
            if (s - 1 >= 1) v += cur[static_cast<std::size_t>(kk - 1)];
            if (s + 1 <= i - 1) v += prev[static_cast<std::size_t>(kk + 1)];
            cur[static_cast<std::size_t>(kk)] = v;
        }
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(k)];
}

BigInt strip_path_count(std::int64_t lo, std::int64_t hi, std::int64_t start, std::int64_t target,
                        std::int64_t j) {
    if (lo > hi || start < lo || start > hi || j < 0)
        throw std::domain_error("strip_path_count: bad arguments");
    const std::int64_t net = target - start;
    const std::int64_t steps = (net >= 0 ? net : -net) + 2 * j;
    if (steps == 0) return target == start ? 1 : 0;
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    std::vector<BigInt> v(width, BigInt(0));
    v[static_cast<std::size_t>(start - lo)] = 1;
    for (std::int64_t t = 0; t < steps - 1; ++t) {
        std::vector<BigInt> next(width, BigInt(0));
        for (std::size_t x = 0; x < width; ++x) {
            if (v[x] == 0) continue;
            if (x + 1 < width) next[x + 1] += v[x];
            if (x >= 1) next[x - 1] += v[x];
        }
        v = std::move(next);
    }
    if (target == hi + 1) return v[width - 1];
    if (target == lo - 1) return v[0];
    if (target >= lo && target <= hi) return v[static_cast<std::size_t>(target - lo)];
    return 0;
}

SeriesResult expected_time_via_paths(std::int64_t i, std::int64_t s, double p, double tol,
                                     std::int64_t term_budget) {
    if (i < 2) throw std::domain_error("segment height must be >= 2");
    if (s != 1 && s != i - 1) throw std::domain_error("path series derived for s in {1, i-1}");
    if (tol <= 0) throw std::domain_error("tolerance must be positive");
    const double q = 1.0 - p;
    const double w = open_prob_single(i, s, StepProbability(p)).value();
    const std::int64_t net = i - s;
    const double cos_strip = std::cos(std::acos(-1.0) / double(i));
    const double r_asym = 4.0 * p * q * cos_strip * cos_strip;

    SeriesResult r;
    if (w == 0.0) {
        // conditioning event has probability 0 (p = 0); nothing to sum
        r.converged = false;
        return r;
    }
    double sum = 0.0;
    double prev_term = -1.0;
    double ratio_seen = 0.0;
    for (std::int64_t j = 0; j < term_budget; ++j) {
        const double cnt = static_cast<double>(strip_path_count(1, i - 1, s, i, j));
        const double term =
            cnt * std::pow(p, double(j + net)) * std::pow(q, double(j)) * double(2 * j + net);
        sum += term;
        if (term == 0.0) {
            r.converged = true;
            r.tail_bound = 0.0;
            r.terms_used = j + 1;
            break;
        }
        if (prev_term > 0.0) ratio_seen = std::max(ratio_seen * 0.5, term / prev_term);
        prev_term = term;
        const double extra = double(2 * j + 2 + net) / double(2 * j + net);
        const double r_bound = std::max(ratio_seen, r_asym * extra);
        if (j >= 8 && r_bound < 1.0) {
            const double tail = term * r_bound / (1.0 - r_bound);
            if (tail <= tol * w) {
                r.converged = true;
                r.tail_bound = tail / w;
                r.terms_used = j + 1;
                break;
            }
        }
        r.terms_used = j + 1;
    }
    r.value = sum / w;
    return r;
}

ResidualReport verify_open_time_solution(std::int64_t i, const StepProbability& p) {
    if (i < 2) throw std::domain_error("segment height must be >= 2");
    ResidualReport rep;
    rep.equations = i - 1;
    rep.exact_mode = p.is_exact();
    if (p.is_exact()) {
        const BigRat pr = p.rational();
        const BigRat qr = p.rational_q();
        const auto w = [&](std::int64_t s) {
            return s == 0 ? BigRat(0) : open_prob_single(i, s, p).rational();
        };
        const auto g = [&](std::int64_t s) {
            return (s == 0 || s == i) ? BigRat(0) : open_expected_time_single(i, s, p).rational();
        };
        BigRat mx(0);
        bool all_zero = true;
        for (std::int64_t s = 1; s <= i - 1; ++s) {
            BigRat res = g(s) * w(s) - pr * w(s + 1) * g(s + 1) - qr * w(s - 1) * g(s - 1) - w(s);
            if (res < 0) res = -res;
            if (res != 0) all_zero = false;
            if (res > mx) mx = res;
        }
        rep.exact_zero = all_zero;
        rep.max_residual = to_double(mx);
        return rep;
    }
    const double pv = p.value();
    const double qv = 1.0 - pv;
    const auto w = [&](std::int64_t s) {
        return s == 0 ? 0.0 : open_prob_single(i, s, p).value();
    };
    const auto g = [&](std::int64_t s) {
        return (s == 0 || s == i) ? 0.0 : open_expected_time_single(i, s, p).value();
    };
    double mx = 0.0;
    for (std::int64_t s = 1; s <= i - 1; ++s) {
        const double res =
            std::fabs(g(s) * w(s) - pv * w(s + 1) * g(s + 1) - qv * w(s - 1) * g(s - 1) - w(s));
        mx = std::max(mx, res);
    }
    rep.max_residual = mx;
    return rep;
}

}  // namespace park
