#include "walk.hpp"

#include <cmath>
#include <stdexcept>

namespace park {

std::int64_t default_escape_margin(double p) {
    const double q = 1.0 - p;
    const double hi = std::max(p, q), lo = std::min(p, q);
    if (lo == 0.0) return 1;
    if (hi == lo) return 1;  // unused at p = 1/2
    const double m = std::ceil(std::log(1e9) / std::log(hi / lo));
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(m));
}

namespace {

struct FreeSpan {
    Spot leftmost = 0;   // leftmost unoccupied spot, 0 if none
    Spot rightmost = 0;  // rightmost unoccupied spot, 0 if none
};

FreeSpan free_span(const std::vector<std::uint8_t>& occupied) {
    FreeSpan f;
    const std::int64_t n = static_cast<std::int64_t>(occupied.size());
    for (std::int64_t s = 1; s <= n; ++s)
        if (!occupied[static_cast<std::size_t>(s - 1)]) { f.leftmost = s; break; }
    for (std::int64_t s = n; s >= 1; --s)
        if (!occupied[static_cast<std::size_t>(s - 1)]) { f.rightmost = s; break; }
    return f;
}

}  // namespace

TrajectoryRecord walk_one_car(Spot start, const std::vector<std::uint8_t>& occupied,
                              const WalkParameters& params, SplitMix64& rng) {
    const std::int64_t n = static_cast<std::int64_t>(occupied.size());
    if (start < 1 || start > n) throw std::domain_error("start spot outside [1, n]");

    TrajectoryRecord rec;
    rec.start = start;
    if (!occupied[static_cast<std::size_t>(start - 1)]) {
        rec.terminal = Terminal::parked;
        rec.parked_spot = start;
        return rec;  // lucky car, zero steps
    }

    const double p = params.p;
    const bool unbounded = params.boundary == Boundary::unbounded;
    FreeSpan span;
    std::int64_t margin = 0;
    if (unbounded) {
        span = free_span(occupied);
        margin = params.escape_margin > 0 ? params.escape_margin : default_escape_margin(p);
    }

    Spot pos = start;
    if (params.record_trajectories) rec.positions.push_back(pos);
    while (rec.steps_taken < params.step_cap) {
        pos += rng.bernoulli(p) ? 1 : -1;
        ++rec.steps_taken;
        if (params.record_trajectories) rec.positions.push_back(pos);

        if (pos >= 1 && pos <= n && !occupied[static_cast<std::size_t>(pos - 1)]) {
            rec.terminal = Terminal::parked;
            rec.parked_spot = pos;
            return rec;
        }
        if (!unbounded) {
            if (pos == 0 || pos == n + 1) {
                rec.terminal = Terminal::escaped;
                return rec;
            }
            continue;
        }
        // unbounded: a drifting car below (above) every reachable free spot
        // returns with probability < 1e-9 once it is margin away
        if (p < 0.5 && span.leftmost != 0 && pos <= span.leftmost - margin) {
            rec.terminal = Terminal::escaped;
            return rec;
        }
        if (p > 0.5 && span.rightmost != 0 && pos >= span.rightmost + margin) {
            rec.terminal = Terminal::escaped;
            return rec;
        }
    }
    rec.terminal = Terminal::cap_exceeded;
    return rec;
}

ProtocolOutcome run_protocol(const PreferenceList& alpha, const WalkParameters& params,
                             std::uint64_t seed, std::uint64_t trial_index) {
    const std::int64_t n = alpha.size();
    ProtocolOutcome out;
    out.occupancy.assign(static_cast<std::size_t>(n), 0);
    out.slots.assign(static_cast<std::size_t>(n), 0);
    out.parked_flags.assign(static_cast<std::size_t>(n), 0);
    out.steps_per_car.assign(static_cast<std::size_t>(n), 0);
    const bool unbounded = params.boundary == Boundary::unbounded;

    for (Car car = 1; car <= n; ++car) {
        SplitMix64 rng = make_stream(seed, trial_index, static_cast<std::uint64_t>(car));
        TrajectoryRecord rec = walk_one_car(alpha.pref(car), out.occupancy, params, rng);
        rec.car = car;
        out.steps_per_car[static_cast<std::size_t>(car - 1)] = rec.steps_taken;
        out.total_steps += rec.steps_taken;
        if (rec.terminal == Terminal::parked) {
            out.occupancy[static_cast<std::size_t>(rec.parked_spot - 1)] = 1;
            out.slots[static_cast<std::size_t>(rec.parked_spot - 1)] = car;
            out.parked_flags[static_cast<std::size_t>(car - 1)] = 1;
        } else if (rec.terminal == Terminal::cap_exceeded) {
            ++out.cap_exceeded_count;
        }
        const bool finished = rec.terminal == Terminal::parked;
        if (params.record_trajectories) out.trajectories.push_back(std::move(rec));
        // an unbounded walk that does not park never completes its search,
        // so no later car enters the street
        if (unbounded && !finished) break;
    }
    out.all_parked = true;
    for (std::uint8_t f : out.parked_flags)
        if (!f) { out.all_parked = false; break; }
    return out;
}

BatchAggregate batch_simulate(const PreferenceList& alpha, const WalkParameters& params,
                              std::uint64_t seed, std::uint64_t trials) {
    if (trials < 1) throw std::domain_error("trials must be >= 1");
    const std::int64_t n = alpha.size();
    BatchAggregate agg;
    agg.n = n;
    agg.trials = trials;

    std::vector<std::uint64_t> car_counts(static_cast<std::size_t>(n), 0);
    const bool track_pairs = n <= BatchAggregate::kPairLimit;
    std::vector<std::uint64_t> pair_counts;
    if (track_pairs) pair_counts.assign(static_cast<std::size_t>(n * n), 0);

    // integer accumulators keep the merge exact and order-independent
    unsigned __int128 sum_steps = 0, sum_steps2 = 0;
    unsigned __int128 sum_steps3 = 0, sum_steps4 = 0;
    std::uint64_t all_count = 0, cap_trials = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        const ProtocolOutcome o = run_protocol(alpha, params, seed, t);
        for (std::int64_t c = 0; c < n; ++c)
            if (o.parked_flags[static_cast<std::size_t>(c)]) ++car_counts[static_cast<std::size_t>(c)];
        if (track_pairs) {
            for (std::int64_t a = 0; a < n; ++a) {
                if (!o.parked_flags[static_cast<std::size_t>(a)]) continue;
                for (std::int64_t b = 0; b < n; ++b)
                    if (o.parked_flags[static_cast<std::size_t>(b)])
                        ++pair_counts[static_cast<std::size_t>(a * n + b)];
            }
        }
        if (o.cap_exceeded_count > 0) ++cap_trials;
        if (o.all_parked) {
            ++all_count;
            const auto s = static_cast<unsigned __int128>(o.total_steps);
            sum_steps += s;
            sum_steps2 += s * s;
            sum_steps3 += s * s * s;
            sum_steps4 += s * s * s * s;
        }
    }

    agg.car_park_freq.resize(static_cast<std::size_t>(n));
    for (std::int64_t c = 0; c < n; ++c)
        agg.car_park_freq[static_cast<std::size_t>(c)] =
            double(car_counts[static_cast<std::size_t>(c)]) / double(trials);
    agg.all_park_count = all_count;
    agg.all_park_freq = double(all_count) / double(trials);
    agg.cap_exceeded_trials = cap_trials;
    if (track_pairs) {
        agg.pair_freq.resize(static_cast<std::size_t>(n * n));
        for (std::size_t idx = 0; idx < pair_counts.size(); ++idx)
            agg.pair_freq[idx] = double(pair_counts[idx]) / double(trials);
    }
    if (all_count > 0) {
        const double k = double(all_count);
        const double m1 = double(sum_steps) / k;
        const double m2 = double(sum_steps2) / k;
        const double m3 = double(sum_steps3) / k;
        const double m4 = double(sum_steps4) / k;
        agg.cond_mean_steps = m1;
        const double var = m2 - m1 * m1;
        agg.cond_var_steps = all_count > 1 ? var * k / (k - 1.0) : 0.0;
        // central fourth moment from raw moments
        agg.cond_m4_steps = m4 - 4 * m3 * m1 + 6 * m2 * m1 * m1 - 3 * m1 * m1 * m1 * m1;
    }
    return agg;
}

}  // namespace park
