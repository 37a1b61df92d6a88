#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace borel {

using Complex = std::complex<double>;

/// A complex number stored as mantissa * exp(log_scale).
///
/// Transform evaluators hand these to the Laplace quadrature so that values
/// like e^{1440} (whose damped integrand e^{-u} f(zu) is perfectly ordinary)
/// never have to exist as raw doubles. mantissa == 0 means exactly zero.
struct ScaledComplex {
    Complex mantissa{0.0, 0.0};
    double log_scale = 0.0;

    static ScaledComplex zero() noexcept { return {}; }
    static ScaledComplex from(Complex v) noexcept { return {v, 0.0}; }

    bool is_zero() const noexcept { return mantissa == Complex{0.0, 0.0}; }

    /// log|value|; -inf for zero.
    double log_abs() const noexcept {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return log_scale + std::log(std::abs(mantissa));
    }

    /// Collapse to a plain complex. Overflows to inf / underflows to 0 when
    /// the value leaves the double range; callers that care must check.
    Complex value() const noexcept {
        if (is_zero()) return {0.0, 0.0};
        const double lm = log_abs();
        if (lm < -745.0) return {0.0, 0.0};
        const double mag = std::exp(lm);
        const double ph = std::arg(mantissa);
        return {mag * std::cos(ph), mag * std::sin(ph)};
    }
};

/// exp(w) as a scaled value: never overflows, phase kept in the mantissa.
inline ScaledComplex scaled_exp(Complex w) noexcept {
    return {Complex{std::cos(w.imag()), std::sin(w.imag())}, w.real()};
}

inline bool is_finite(Complex v) noexcept {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace borel
