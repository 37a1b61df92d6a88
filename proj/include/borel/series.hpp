#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "borel/errors.hpp"
#include "borel/quadrature.hpp"
#include "borel/scaled.hpp"

namespace borel {

// ---------------------------------------------------------------------------
// Coefficient sequences
// ---------------------------------------------------------------------------

/// A lazily evaluable complex coefficient sequence a_0, a_1, ...
///
/// Immutable after construction; the term function must be deterministic and
/// finite up to every index actually queried. Copies are cheap and share any
/// memo tables the closure owns.
class CoeffSeq {
public:
    using TermFn = std::function<Complex(std::size_t)>;

    CoeffSeq() : CoeffSeq([](std::size_t) { return Complex{0.0, 0.0}; }, "zero") {}

    explicit CoeffSeq(TermFn terms, std::string label = {},
                      std::optional<std::size_t> max_index_hint = {})
        : terms_(std::make_shared<TermFn>(std::move(terms))),
          label_(std::move(label)),
          max_index_hint_(max_index_hint) {}

    Complex operator()(std::size_t n) const { return (*terms_)(n); }

    const std::string& label() const noexcept { return label_; }
    std::optional<std::size_t> max_index_hint() const noexcept { return max_index_hint_; }

    /// Finitely many explicit coefficients, zero beyond the list.
    static CoeffSeq from_values(std::vector<Complex> values, std::string label = {}) {
        auto data = std::make_shared<const std::vector<Complex>>(std::move(values));
        return CoeffSeq(
            [data](std::size_t n) { return n < data->size() ? (*data)[n] : Complex{0.0, 0.0}; },
            std::move(label));
    }

private:
    std::shared_ptr<const TermFn> terms_;
    std::string label_;
    std::optional<std::size_t> max_index_hint_;
};

namespace detail {

/// Memoized powers c^0, c^1, ... built by iterated multiplication.
class PowerTable {
public:
    explicit PowerTable(Complex base) : base_(base) { powers_.push_back({1.0, 0.0}); }

    Complex get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (powers_.size() <= n) powers_.push_back(powers_.back() * base_);
        return powers_[n];
    }

private:
    std::mutex mutex_;
    Complex base_;
    std::vector<Complex> powers_;
};

} // namespace detail

/// Termwise map a_n -> a_n * c^n, so circle sweeps reduce to ray probes.
/// Powers of c come from a shared iterated-multiplication table.
inline CoeffSeq rotate_scale(const CoeffSeq& seq, Complex c) {
    auto powers = std::make_shared<detail::PowerTable>(c);
    return CoeffSeq([seq, powers](std::size_t n) { return seq(n) * powers->get(n); },
                    seq.label().empty() ? std::string{} : seq.label() + "*c^n",
                    seq.max_index_hint());
}

// ---------------------------------------------------------------------------
// Radius of convergence
// ---------------------------------------------------------------------------

enum class RadiusMethod { cauchy_hadamard, known_closed_form };

struct RadiusEstimate {
    double value = 0.0;  // may be +inf
    int n_used = 0;
    RadiusMethod method = RadiusMethod::cauchy_hadamard;
};

/// 1 / max_{n in [N/2, N]} |a_n|^{1/n}. Zero coefficients are skipped so
/// lacunary series do not corrupt the sup; an all-zero window gives +inf.
inline RadiusEstimate radius_cauchy_hadamard(const CoeffSeq& seq, int n_top) {
    if (n_top < 16) fail(ErrorCode::bad_input, "radius_cauchy_hadamard needs N >= 16");
    const int n_low = n_top / 2;
    double sup = 0.0;
    for (int n = n_low; n <= n_top; ++n) {
        const Complex a = seq(static_cast<std::size_t>(n));
        if (!is_finite(a))
            fail(ErrorCode::non_finite, "non-finite coefficient a_" + std::to_string(n));
        const double mag = std::abs(a);
        if (mag == 0.0) continue;
        sup = std::max(sup, std::exp(std::log(mag) / n));
    }
    RadiusEstimate est;
    est.value = sup == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / sup;
    est.n_used = n_top - n_low + 1;
    est.method = RadiusMethod::cauchy_hadamard;
    return est;
}

// ---------------------------------------------------------------------------
// Cesaro mean
// ---------------------------------------------------------------------------

/// (1/Lambda) * integral_0^Lambda psi(t) dt under the engine quadrature
/// contract. If psi has an ordinary limit this converges to the same limit.
inline Complex cesaro_mean(const std::function<Complex(double)>& samples, double big_lambda,
                           int panels = 16, const QuadOptions& quad = {}) {
    if (!(big_lambda > 0.0)) fail(ErrorCode::bad_input, "cesaro_mean needs Lambda > 0");
    if (panels < 16) fail(ErrorCode::bad_input, "cesaro_mean needs panels >= 16");
    QuadOptions opt = quad;
    opt.min_panels = panels;
    return integrate(samples, 0.0, big_lambda, opt) / big_lambda;
}

// ---------------------------------------------------------------------------
// Entire functions given by Taylor coefficients
// ---------------------------------------------------------------------------

/// f = sum c_n z^n with the c_n supplied lazily.
struct EntireFnSpec {
    CoeffSeq taylor_coeffs;
    std::string label;
};

/// a_n = f^(n)(0) = n! * c_n.
///
/// Computed by the running product a_n = a_{n-1} * n * (c_n / c_{n-1}) where
/// possible; after a zero coefficient it falls back to a cached factorial
/// accumulator. Overflow is an explicit error, never a silent saturation:
/// past n ~ 170 callers must supply a_n/n! directly via a TransformEvaluator.
inline CoeffSeq moment_taylor_seq(const EntireFnSpec& spec) {
    struct State {
        std::mutex mutex;
        std::vector<Complex> a;
        std::vector<Complex> c;
        double factorial = 1.0;
    };
    auto state = std::make_shared<State>();
    CoeffSeq coeffs = spec.taylor_coeffs;

    auto term = [state, coeffs](std::size_t n) -> Complex {
        std::lock_guard<std::mutex> lock(state->mutex);
        while (state->a.size() <= n) {
            const std::size_t k = state->a.size();
            const Complex ck = coeffs(k);
            if (!is_finite(ck))
                fail(ErrorCode::non_finite, "non-finite Taylor coefficient c_" + std::to_string(k));
            Complex ak;
            if (k == 0) {
                ak = ck;
            } else {
                state->factorial *= static_cast<double>(k);
                const Complex prev_c = state->c.back();
                if (prev_c != Complex{0.0, 0.0}) {
                    ak = state->a.back() * static_cast<double>(k) * (ck / prev_c);
                } else if (ck == Complex{0.0, 0.0}) {
                    ak = {0.0, 0.0};
                } else {
                    if (!std::isfinite(state->factorial))
                        fail(ErrorCode::overflow,
                             "n! * c_n exceeds the floating range at n=" + std::to_string(k));
                    ak = state->factorial * ck;
                }
            }
            if (!is_finite(ak))
                fail(ErrorCode::overflow,
                     "n! * c_n exceeds the floating range at n=" + std::to_string(k));
            state->c.push_back(ck);
            state->a.push_back(ak);
        }
        return state->a[n];
    };
    return CoeffSeq(term, spec.label.empty() ? "moment-taylor" : spec.label + " moments",
                    spec.taylor_coeffs.max_index_hint());
}

} // namespace borel
