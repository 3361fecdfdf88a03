#pragma once

#include <cstdint>
#include <vector>

namespace park {

using Car = std::int64_t;   // car labels, 1-based
using Spot = std::int64_t;  // parking spots, 1-based

// Preference list alpha in [n]^n; entries validated on construction.
class PreferenceList {
public:
    explicit PreferenceList(std::vector<Spot> prefs);

    std::int64_t size() const { return static_cast<std::int64_t>(prefs_.size()); }
    Spot pref(Car car) const { return prefs_[static_cast<std::size_t>(car - 1)]; }
    const std::vector<Spot>& entries() const { return prefs_; }

    bool operator==(const PreferenceList&) const = default;

private:
    std::vector<Spot> prefs_;
};

struct Classification {
    bool is_parking_function = false;
    bool is_identity_outcome = false;  // alpha_i <= i for all i
    bool is_weakly_increasing = false;
};

Classification classify(const PreferenceList& alpha);

struct ClassicalResult {
    std::vector<Car> slots;           // slots[s-1] = car parked in spot s, 0 = empty
    std::vector<Car> lucky;           // cars that parked at their preference, sorted
    std::vector<Car> failed;          // cars that exited without parking, sorted
    std::int64_t total_displacement;  // sum of (spot - preference) over parked cars
};

// Deterministic rightward protocol. Failed cars are recorded, not an error.
ClassicalResult classical_park(const PreferenceList& alpha);

// d_i = i - alpha_i; requires an identity-outcome input
std::vector<std::int64_t> displacement(const PreferenceList& alpha);

// entry-wise involution alpha_i -> n - alpha_i + 1
PreferenceList mirror(const PreferenceList& alpha);

}  // namespace park
