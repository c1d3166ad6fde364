#pragma once

#include <functional>
#include <span>
#include <vector>

namespace pcop {

/// Tolerances for the adaptive Gauss-Kronrod integrators.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 400;

    void validate() const;

    static QuadratureSpec one_d() { return {1e-10, 1e-10, 400}; }
    static QuadratureSpec two_d() { return {1e-8, 1e-8, 200}; }
};

struct Interval {
    double lo;
    double hi;

    void validate() const;
    double width() const { return hi - lo; }
};

struct Rect {
    Interval x;
    Interval y;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    int subdivisions = 0;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// Globally adaptive 21-point Gauss-Kronrod integration over a finite interval.
/// Interior breakpoints (kinks, discontinuities) seed the initial partition.
/// Throws NonConvergence when the subdivision budget is spent first.
QuadResult integrate_1d(const Integrand1D& f, Interval iv,
                        const QuadratureSpec& spec = QuadratureSpec::one_d(),
                        std::span<const double> breakpoints = {});

/// Iterated adaptive integration: an outer adaptive rule in x whose integrand
/// is an inner adaptive integral in y. Breakpoints apply per axis.
QuadResult integrate_2d(const Integrand2D& f, Rect rect,
                        const QuadratureSpec& spec = QuadratureSpec::two_d(),
                        std::span<const double> breaks_x = {},
                        std::span<const double> breaks_y = {});

/// Single non-adaptive 15-point Gauss-Kronrod panel; used for short cells
/// where the integrand is known to be smooth.
double gauss_kronrod_15(const Integrand1D& f, double lo, double hi);

/// Appends the 15 Kronrod nodes and weights of [lo, hi], for fixed rules built
/// from many panels.
void append_kronrod_15_nodes(double lo, double hi, std::vector<double>& nodes,
                             std::vector<double>& weights);

}  // namespace pcop
