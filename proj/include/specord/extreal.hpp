#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "specord/errors.hpp"

namespace specord {

// The extended real line [-inf, +inf], the value scale of observable
// functions and the index scale of spectral families.  Backed by a double
// that is either finite or +-infinity; NaN is rejected at construction so
// every comparison below is total and exact.
class ExtendedReal {
public:
    ExtendedReal() : v_(0.0) {}

    static ExtendedReal finite(double x) {
        if (!std::isfinite(x))
            throw NonFiniteValue("ExtendedReal::finite: value is not finite");
        return ExtendedReal(x);
    }
    static ExtendedReal neg_inf() {
        return ExtendedReal(-std::numeric_limits<double>::infinity());
    }
    static ExtendedReal pos_inf() {
        return ExtendedReal(std::numeric_limits<double>::infinity());
    }

    bool is_finite() const { return std::isfinite(v_); }
    bool is_neg_inf() const { return v_ == -std::numeric_limits<double>::infinity(); }
    bool is_pos_inf() const { return v_ == std::numeric_limits<double>::infinity(); }

    // Finite payload; calling this on an infinity is a logic error.
    double value() const {
        if (!is_finite())
            throw NonFiniteValue("ExtendedReal::value: not finite");
        return v_;
    }

    // Raw double including the infinities, for formatting and interval math.
    double raw() const { return v_; }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ >= b.v_; }

    std::string str() const;

private:
    explicit ExtendedReal(double v) : v_(v) {}
    double v_;
};

// Infimum with the empty-set convention inf {} = +inf.
inline ExtendedReal ext_inf(std::span<const ExtendedReal> values) {
    ExtendedReal best = ExtendedReal::pos_inf();
    for (const auto& v : values)
        if (v < best) best = v;
    return best;
}

// Supremum with the empty-set convention sup {} = -inf.
inline ExtendedReal ext_sup(std::span<const ExtendedReal> values) {
    ExtendedReal best = ExtendedReal::neg_inf();
    for (const auto& v : values)
        if (v > best) best = v;
    return best;
}

inline ExtendedReal ext_inf(const std::vector<ExtendedReal>& values) {
    return ext_inf(std::span<const ExtendedReal>(values));
}
inline ExtendedReal ext_sup(const std::vector<ExtendedReal>& values) {
    return ext_sup(std::span<const ExtendedReal>(values));
}

// Translation by a finite real; fixes both infinities.
inline ExtendedReal ext_add(const ExtendedReal& a, double t) {
    if (!std::isfinite(t))
        throw NonFiniteValue("ext_add: translation must be finite");
    if (!a.is_finite()) return a;
    return ExtendedReal::finite(a.value() + t);
}

// Scaling by a strictly positive real; fixes both infinities.  Negative or
// zero scale would flip or collapse the order, callers must compose with
// ext_negate instead.
inline ExtendedReal ext_scale(const ExtendedReal& a, double s) {
    if (!std::isfinite(s) || s <= 0.0)
        throw Error("ext_scale: scale must be finite and > 0");
    if (!a.is_finite()) return a;
    return ExtendedReal::finite(a.value() * s);
}

// Order-reversing negation, swapping the infinities.
inline ExtendedReal ext_negate(const ExtendedReal& a) {
    if (a.is_neg_inf()) return ExtendedReal::pos_inf();
    if (a.is_pos_inf()) return ExtendedReal::neg_inf();
    return ExtendedReal::finite(-a.value());
}

// |a - b| <= tol with infinities compared exactly.
inline bool ext_close(const ExtendedReal& a, const ExtendedReal& b, double tol) {
    if (!a.is_finite() || !b.is_finite()) return a == b;
    return std::abs(a.value() - b.value()) <= tol;
}

inline std::string ExtendedReal::str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v_);
    return buf;
}

}  // namespace specord
