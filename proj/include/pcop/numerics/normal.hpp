#pragma once

#include <cmath>
#include <numbers>

namespace pcop {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

inline double normal_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

/// Standard normal CDF. Absolute error is at the level of double rounding.
inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * std::numbers::sqrt2 * 0.5);
}

/// Inverse of normal_cdf on (0,1); throws DomainError otherwise.
double normal_quantile(double p);

}  // namespace pcop
