#include "dyck.hpp"

#include <stdexcept>

namespace park {

DyckPath::DyckPath(std::vector<bool> up_steps) : steps_(std::move(up_steps)) {
    if (steps_.empty()) throw std::domain_error("empty path");
    std::int64_t h = 0;
    for (bool up : steps_) {
        h += up ? 1 : -1;
        if (h < 0) throw std::invalid_argument("path dips below the axis");
    }
    if (h != 0) throw std::invalid_argument("path is not balanced");
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<bool> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U' || c == 'u') steps.push_back(true);
        else if (c == 'D' || c == 'd') steps.push_back(false);
        else throw std::invalid_argument("path may contain only U and D");
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
    std::string s;
    s.reserve(steps_.size());
    for (bool up : steps_) s.push_back(up ? 'U' : 'D');
    return s;
}

PreferenceList dyck_to_wipf(const DyckPath& path) {
    std::vector<Spot> alpha;
    alpha.reserve(static_cast<std::size_t>(path.semilength()));
    std::int64_t downs = 0;
    for (bool up : path.steps()) {
        if (up) alpha.push_back(downs + 1);
        else ++downs;
    }
    return PreferenceList(std::move(alpha));
}

DyckPath wipf_to_dyck(const PreferenceList& alpha) {
    if (!classify(alpha).is_weakly_increasing)
        throw std::domain_error("wipf_to_dyck requires a weakly increasing parking function");
    const std::int64_t n = alpha.size();
    std::vector<bool> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    std::int64_t downs = 0;
    for (Car i = 1; i <= n; ++i) {
        while (downs < alpha.pref(i) - 1) {
            steps.push_back(false);
            ++downs;
        }
        steps.push_back(true);
    }
    while (downs < n) {
        steps.push_back(false);
        ++downs;
    }
    return DyckPath(std::move(steps));
}

std::int64_t dyck_returns(const DyckPath& path) {
    std::int64_t h = 0, returns = 0;
    for (bool up : path.steps()) {
        h += up ? 1 : -1;
        if (h == 0) ++returns;
    }
    return returns;
}

namespace {

void gen_paths(std::vector<bool>& steps, std::int64_t ups_left, std::int64_t height,
               const std::function<void(const DyckPath&)>& fn) {
    if (ups_left == 0 && height == 0) {
        fn(DyckPath(steps));
        return;
    }
    if (ups_left > 0) {
        steps.push_back(true);
        gen_paths(steps, ups_left - 1, height + 1, fn);
        steps.pop_back();
    }
    if (height > 0) {
        steps.push_back(false);
        gen_paths(steps, ups_left, height - 1, fn);
        steps.pop_back();
    }
}

}  // namespace

void for_each_dyck_path(std::int64_t n, const std::function<void(const DyckPath&)>& fn) {
    if (n < 1) throw std::domain_error("semilength must be positive");
    std::vector<bool> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    gen_paths(steps, n, 0, fn);
}

void for_each_wipf(std::int64_t n, const std::function<void(const PreferenceList&)>& fn) {
    for_each_dyck_path(n, [&](const DyckPath& p) { fn(dyck_to_wipf(p)); });
}

}  // namespace park
