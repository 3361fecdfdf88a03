#include "prefs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace park {

PreferenceList::PreferenceList(std::vector<Spot> prefs) : prefs_(std::move(prefs)) {
    const auto n = static_cast<Spot>(prefs_.size());
    if (n == 0) throw std::invalid_argument("preference list is empty");
    for (Spot v : prefs_) {
        if (v < 1 || v > n) throw std::invalid_argument("preference entry outside [1, n]");
    }
}

Classification classify(const PreferenceList& alpha) {
    const std::int64_t n = alpha.size();
    Classification c;

    // prefix-count criterion: |{k : alpha_k <= i}| >= i for all i
    std::vector<std::int64_t> count(static_cast<std::size_t>(n) + 1, 0);
    for (Spot v : alpha.entries()) ++count[static_cast<std::size_t>(v)];
    std::int64_t cum = 0;
    c.is_parking_function = true;
    for (std::int64_t i = 1; i <= n; ++i) {
        cum += count[static_cast<std::size_t>(i)];
        if (cum < i) {
            c.is_parking_function = false;
            break;
        }
    }

    c.is_identity_outcome = true;
    for (Car i = 1; i <= n; ++i) {
        if (alpha.pref(i) > i) {
            c.is_identity_outcome = false;
            break;
        }
    }

    c.is_weakly_increasing =
        c.is_identity_outcome && std::is_sorted(alpha.entries().begin(), alpha.entries().end());
    return c;
}

namespace {

// "next free spot >= s" with path compression
class NextFree {
public:
    explicit NextFree(std::int64_t n) : parent_(static_cast<std::size_t>(n) + 2) {
        std::iota(parent_.begin(), parent_.end(), Spot{0});
    }

    Spot find(Spot s) {
        Spot root = s;
        while (parent_[static_cast<std::size_t>(root)] != root)
            root = parent_[static_cast<std::size_t>(root)];
        while (parent_[static_cast<std::size_t>(s)] != root) {
            Spot next = parent_[static_cast<std::size_t>(s)];
            parent_[static_cast<std::size_t>(s)] = root;
            s = next;
        }
        return root;
    }

    void occupy(Spot s) { parent_[static_cast<std::size_t>(s)] = s + 1; }

private:
    std::vector<Spot> parent_;
};

}  // namespace

ClassicalResult classical_park(const PreferenceList& alpha) {
    const std::int64_t n = alpha.size();
    ClassicalResult r;
    r.slots.assign(static_cast<std::size_t>(n), 0);
    r.total_displacement = 0;
    NextFree nf(n);
    for (Car car = 1; car <= n; ++car) {
        const Spot want = alpha.pref(car);
        const Spot got = nf.find(want);
        if (got > n) {
            r.failed.push_back(car);
            continue;
        }
        r.slots[static_cast<std::size_t>(got - 1)] = car;
        nf.occupy(got);
        if (got == want) r.lucky.push_back(car);
        r.total_displacement += got - want;
    }
    return r;
}

std::vector<std::int64_t> displacement(const PreferenceList& alpha) {
    if (!classify(alpha).is_identity_outcome)
        throw std::domain_error("displacement requires an identity-outcome preference list");
    std::vector<std::int64_t> d;
    d.reserve(static_cast<std::size_t>(alpha.size()));
    for (Car i = 1; i <= alpha.size(); ++i) d.push_back(i - alpha.pref(i));
    return d;
}

PreferenceList mirror(const PreferenceList& alpha) {
    const std::int64_t n = alpha.size();
    std::vector<Spot> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Spot v : alpha.entries()) out.push_back(n - v + 1);
    return PreferenceList(std::move(out));
}

}  // namespace park
