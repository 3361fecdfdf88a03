#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "prefs.hpp"

namespace park {

// Balanced U/D lattice path that never dips below the axis.
class DyckPath {
public:
    explicit DyckPath(std::vector<bool> up_steps);      // true = U
    static DyckPath parse(std::string_view text);       // "UUDD..."

    std::int64_t semilength() const { return static_cast<std::int64_t>(steps_.size()) / 2; }
    const std::vector<bool>& steps() const { return steps_; }
    std::string str() const;

    bool operator==(const DyckPath&) const = default;

private:
    std::vector<bool> steps_;
};

// i-th entry = 1 + number of D steps before the i-th U step
PreferenceList dyck_to_wipf(const DyckPath& path);

// inverse bijection; requires a weakly increasing parking function
DyckPath wipf_to_dyck(const PreferenceList& alpha);

// touches of height 0 after the start (endpoint counts); equals the number of
// lucky cars of the corresponding weakly increasing parking function
std::int64_t dyck_returns(const DyckPath& path);

// all Dyck paths of semilength n, lexicographic with U < D
void for_each_dyck_path(std::int64_t n, const std::function<void(const DyckPath&)>& fn);

// all weakly increasing parking functions of length n, in the order induced by
// the Dyck-path enumeration (which is lexicographic on the entries as well)
void for_each_wipf(std::int64_t n, const std::function<void(const PreferenceList&)>& fn);

}  // namespace park
