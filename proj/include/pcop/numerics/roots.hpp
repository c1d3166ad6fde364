#pragma once

#include <functional>

namespace pcop {

struct RootOptions {
    double x_tol = 1e-12;  ///< stop once the bracket is narrower than this
    double f_tol = 0.0;    ///< stop once |f| is at most this
    int max_iterations = 300;
};

/// Brent's method: inverse quadratic / secant steps with bisection fallback.
/// Requires f(lo)*f(hi) <= 0, otherwise throws NoBracket.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const RootOptions& opts);

/// Returns x with |f(x)| <= tol or a final bracket no wider than tol.
inline double find_root(const std::function<double(double)>& f, double lo, double hi,
                        double tol) {
    return find_root(f, lo, hi, RootOptions{tol, tol, 300});
}

}  // namespace pcop
