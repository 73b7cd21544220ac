#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace yapa {

/// Raised when an iterative numeric routine fails to reach its tolerance.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename F>
double simpson(F& f, double a, double fa, double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson_rec(F& f, double a, double fa, double b, double fb,
                            double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw NumericalError("adaptive_simpson: subdivision limit reached on [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
template <typename F>
double adaptive_simpson(F f, double a, double b, double tol, int max_depth = 48) {
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
    return detail::adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace yapa
