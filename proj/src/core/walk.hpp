#pragma once

#include <cstdint>
#include <vector>

#include "prefs.hpp"
#include "rng.hpp"

namespace park {

enum class Boundary { open, unbounded };

struct WalkParameters {
    double p = 0.5;
    Boundary boundary = Boundary::open;
    std::int64_t step_cap = 1'000'000;
    std::int64_t escape_margin = 0;  // 0: derive from p (unbounded only)
    bool record_trajectories = false;
};

// margin m with (drift ratio)^m < 1e-9; only meaningful for p != 1/2
std::int64_t default_escape_margin(double p);

enum class Terminal { parked, escaped, cap_exceeded };

struct TrajectoryRecord {
    Car car = 0;
    Spot start = 0;
    std::vector<Spot> positions;  // filled only when tracing is on
    std::int64_t steps_taken = 0;
    Terminal terminal = Terminal::parked;
    Spot parked_spot = 0;  // valid when terminal == parked
};

struct ProtocolOutcome {
    std::vector<std::uint8_t> occupancy;  // occupancy[s-1]
    std::vector<Car> slots;               // slots[s-1] = car label, 0 = empty
    std::vector<std::uint8_t> parked_flags;
    std::vector<std::int64_t> steps_per_car;
    bool all_parked = false;
    std::int64_t total_steps = 0;
    std::int64_t cap_exceeded_count = 0;
    std::vector<TrajectoryRecord> trajectories;  // only when tracing is on
};

// one car's random walk over the given occupancy; occupancy is not modified
TrajectoryRecord walk_one_car(Spot start, const std::vector<std::uint8_t>& occupied,
                              const WalkParameters& params, SplitMix64& rng);

// full protocol run; per-car streams are keyed by (seed, trial_index, car) so
// results do not depend on scheduling. Under the unbounded boundary a car
// that never parks never finishes its search, so later cars do not start.
ProtocolOutcome run_protocol(const PreferenceList& alpha, const WalkParameters& params,
                             std::uint64_t seed, std::uint64_t trial_index);

struct BatchAggregate {
    std::int64_t n = 0;
    std::uint64_t trials = 0;
    std::vector<double> car_park_freq;
    double all_park_freq = 0.0;
    std::uint64_t all_park_count = 0;
    // conditional on every car parking
    double cond_mean_steps = 0.0;
    double cond_var_steps = 0.0;
    double cond_m4_steps = 0.0;  // fourth central moment, for variance CIs
    std::uint64_t cap_exceeded_trials = 0;
    // joint park frequencies; row-major n x n, filled when n <= kPairLimit
    std::vector<double> pair_freq;
    static constexpr std::int64_t kPairLimit = 64;

    double pair(Car i, Car j) const {
        return pair_freq[static_cast<std::size_t>((i - 1) * n + (j - 1))];
    }
};

BatchAggregate batch_simulate(const PreferenceList& alpha, const WalkParameters& params,
                              std::uint64_t seed, std::uint64_t trials);

}  // namespace park
