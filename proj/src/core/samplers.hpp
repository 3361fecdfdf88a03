#pragma once

#include <cstdint>
#include <string>

#include "prefs.hpp"

namespace park {

enum class Family {
    parking_function,   // uniform over PF_n
    weakly_increasing,  // uniform over PF_n^up (Catalan many)
    identity_outcome,   // uniform over PF_n(id) (n! many)
};

Family parse_family(const std::string& name);  // "pf", "wipf", "pf-id"
std::string family_name(Family f);

struct SamplerSpec {
    Family family = Family::parking_function;
    std::int64_t n = 1;
    std::uint64_t seed = 0;
};

// draws are indexed, not stateful: (spec, draw_index) determines the output
PreferenceList sample(const SamplerSpec& spec, std::uint64_t draw_index);

struct EmpiricalWipfReport {
    std::int64_t n = 0;
    std::uint64_t draws = 0;
    std::vector<double> last_entry_freq;   // empirical Pr[alpha_n = j]
    std::vector<double> last_entry_exact;  // f_n(j) / C_n
    double mean_lucky = 0.0, mean_lucky_exact = 0.0, mean_lucky_se = 0.0;
    double mean_last = 0.0, mean_last_exact = 0.0, mean_last_se = 0.0;
    bool within_ci = false;  // every comparison inside 3 standard errors
};

// draws WIPFs and compares last-entry / lucky-car statistics to exact values
EmpiricalWipfReport empirical_wipf_checks(std::int64_t n, std::uint64_t draws, std::uint64_t seed);

}  // namespace park
