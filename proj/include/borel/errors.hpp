#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace borel {

/// Failure taxonomy shared by every module. Each value maps onto one of the
/// documented error conditions of the public operations.
enum class ErrorCode {
    tail_not_small,     // truncated series cannot certify its tail at this point
    pole_nearby,        // rational denominator magnitude below the pole guard
    catalog_miss,       // unknown builtin id
    singular_system,    // Pade linear system has no usable pivot
    non_finite,         // coefficient or sample is NaN/inf
    overflow,           // n! * c_n (or a running product) left the double range
    depth_exceeded,     // adaptive quadrature hit the subdivision cap
    outside_disk,       // b_extension target not inside the summability disk
    not_summable_here,  // Borel probe failed to certify a sum
    contour_invalid,    // contour fails the polygon winding test
    no_convergence,     // trapezoid doubling hit its cap
    bad_input,          // precondition violation
};

inline const char* error_code_name(ErrorCode c) noexcept {
    switch (c) {
        case ErrorCode::tail_not_small: return "TailNotSmall";
        case ErrorCode::pole_nearby: return "PoleNearby";
        case ErrorCode::catalog_miss: return "CatalogMiss";
        case ErrorCode::singular_system: return "SingularSystem";
        case ErrorCode::non_finite: return "NonFinite";
        case ErrorCode::overflow: return "Overflow";
        case ErrorCode::depth_exceeded: return "DepthExceeded";
        case ErrorCode::outside_disk: return "OutsideDisk";
        case ErrorCode::not_summable_here: return "NotSummableHere";
        case ErrorCode::contour_invalid: return "ContourInvalid";
        case ErrorCode::no_convergence: return "NoConvergence";
        case ErrorCode::bad_input: return "BadInput";
    }
    return "Unknown";
}

class BorelError : public std::runtime_error {
public:
    BorelError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    BorelError(ErrorCode code, const std::string& message, std::complex<double> at)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), at_(at) {}

    ErrorCode code() const noexcept { return code_; }

    /// Point (t or u) where the failure happened, when known.
    const std::optional<std::complex<double>>& at() const noexcept { return at_; }

private:
    ErrorCode code_;
    std::optional<std::complex<double>> at_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw BorelError(code, message);
}

[[noreturn]] inline void fail_at(ErrorCode code, const std::string& message, std::complex<double> at) {
    throw BorelError(code, message, at);
}

} // namespace borel
