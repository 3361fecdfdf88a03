#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "numeric.hpp"

namespace park {

// Step probability p, carrying an exact rational representation when it was
// supplied as one ("2/3"); plain decimals stay in float mode. Formula
// evaluators pick exact arithmetic whenever the rational is present.
class StepProbability {
public:
    explicit StepProbability(double p) : value_(p) { check(p); }

    explicit StepProbability(BigRat p) : value_(to_double(p)), exact_(std::move(p)) {
        if (*exact_ < 0 || *exact_ > 1) throw std::domain_error("p outside [0,1]");
    }

    // "a/b" -> exact, "0.75" -> float, "1" -> exact 1/1
    static StepProbability parse(std::string_view text);

    bool is_exact() const { return exact_.has_value(); }
    double value() const { return value_; }
    double q() const { return 1.0 - value_; }
    const BigRat& rational() const { return *exact_; }
    BigRat rational_q() const { return BigRat(1) - *exact_; }

    bool is_half() const {
        if (exact_) return *exact_ == BigRat(1, 2);
        return std::fabs(value_ - 0.5) < kHalfCrossover;
    }

    std::string describe() const {
        if (exact_) return to_string(*exact_);
        return std::to_string(value_);
    }

    // below this distance from 1/2 the p != 1/2 closed forms are 0/0-unstable
    static constexpr double kHalfCrossover = 1e-9;

private:
    static void check(double p) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p outside [0,1]");
    }

    double value_;
    std::optional<BigRat> exact_;
};

// Dual-mode scalar: exact rational when every input admitted it, double
// otherwise. Probabilities and expected times both flow through this.
class Scalar {
public:
    Scalar() : value_(0.0) {}
    explicit Scalar(double v) : value_(v) {}
    explicit Scalar(BigRat v) : value_(to_double(v)), exact_(std::move(v)) {}

    bool is_exact() const { return exact_.has_value(); }
    double value() const { return value_; }
    const BigRat& rational() const { return *exact_; }

    std::string str() const {
        if (exact_) return to_string(*exact_);
        return format_double(value_);
    }

    static std::string format_double(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

private:
    double value_;
    std::optional<BigRat> exact_;
};

inline StepProbability StepProbability::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) throw std::domain_error("p denominator is zero");
        return StepProbability(BigRat(num, den));
    }
    if (text.find('.') == std::string_view::npos && text.find('e') == std::string_view::npos &&
        text.find('E') == std::string_view::npos) {
        // bare integer: still an exact ratio (0 or 1)
        return StepProbability(BigRat(BigInt(std::string(text)), 1));
    }
    std::size_t used = 0;
    const std::string owned(text);
    const double v = std::stod(owned, &used);
    if (used != owned.size()) throw std::invalid_argument("cannot parse probability: " + owned);
    return StepProbability(v);
}

}  // namespace park
