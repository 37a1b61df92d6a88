#pragma once

#include <cmath>
#include <functional>

#include "borel/errors.hpp"
#include "borel/scaled.hpp"

namespace borel {

/// Contract of the engine's quadrature: relative tolerance 1e-10 with an
/// absolute floor of 1e-14; each panel bisects until the two-half sum agrees
/// with the parent estimate, max depth 40 (DepthExceeded beyond).
struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 40;
    double max_panel_width = 8.0;  // initial composite panels before adapting
    int min_panels = 8;
};

namespace detail {

inline Complex quad_sample(const std::function<Complex(double)>& f, double u) {
    const Complex v = f(u);
    if (!is_finite(v))
        fail_at(ErrorCode::non_finite, "non-finite integrand sample at u=" + std::to_string(u), {u, 0.0});
    return v;
}

// Simpson on [a,b] given endpoint and midpoint samples.
inline Complex simpson(double a, double b, Complex fa, Complex fm, Complex fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline Complex adapt_panel(const std::function<Complex(double)>& f, double a, double b,
                           Complex fa, Complex fm, Complex fb, Complex whole,
                           const QuadOptions& opt, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = quad_sample(f, lm);
    const Complex frm = quad_sample(f, rm);
    const Complex left = simpson(a, m, fa, flm, fm);
    const Complex right = simpson(m, b, fm, frm, fb);
    const Complex halves = left + right;
    const double err = std::abs(halves - whole);
    if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(halves)))
        return halves + (halves - whole) / 15.0;
    if (depth >= opt.max_depth)
        fail_at(ErrorCode::depth_exceeded,
                "adaptive quadrature exceeded depth " + std::to_string(opt.max_depth) +
                    " near u=" + std::to_string(m),
                {m, 0.0});
    return adapt_panel(f, a, m, fa, flm, fm, left, opt, depth + 1) +
           adapt_panel(f, m, b, fm, frm, fb, right, opt, depth + 1);
}

} // namespace detail

/// Adaptive composite Simpson for a complex integrand on a real interval.
inline Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                         const QuadOptions& opt = {}) {
    if (!(b >= a) || !std::isfinite(a) || !std::isfinite(b))
        fail(ErrorCode::bad_input, "bad integration interval");
    if (a == b) return {0.0, 0.0};
    const double width = b - a;
    int panels = opt.min_panels;
    if (width / opt.max_panel_width > panels)
        panels = static_cast<int>(std::ceil(width / opt.max_panel_width));
    const double h = width / panels;

    Complex total{0.0, 0.0};
    Complex f_right = detail::quad_sample(f, a);
    for (int k = 0; k < panels; ++k) {
        const double x0 = a + k * h;
        const double x1 = (k == panels - 1) ? b : a + (k + 1) * h;
        const Complex fa = f_right;
        const Complex fm = detail::quad_sample(f, 0.5 * (x0 + x1));
        const Complex fb = detail::quad_sample(f, x1);
        f_right = fb;
        const Complex coarse = detail::simpson(x0, x1, fa, fm, fb);
        total += detail::adapt_panel(f, x0, x1, fa, fm, fb, coarse, opt, 0);
    }
    return total;
}

} // namespace borel
