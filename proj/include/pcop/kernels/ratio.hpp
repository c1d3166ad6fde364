#pragma once

#include <cstddef>

namespace pcop::kernels {

/// Coefficients of the first-order correction ratio sqrt(eps)*u1/u0 written as a
/// polynomial in standardized log-returns a = xi1/s1, b = xi2/s2.
struct RatioPoly {
    double rho = 0.0;
    double inv_d = 1.0;  // 1/(1 - rho^2)
    double c30 = 0.0, c20 = 0.0;
    double c03 = 0.0, c02 = 0.0;
    double c12 = 0.0, c21 = 0.0;
    double c11 = 0.0;
};

inline double perturbed_ratio(const RatioPoly& k, double a, double b) {
    const double A = -(a - k.rho * b) * k.inv_d;
    const double B = -(b - k.rho * a) * k.inv_d;
    const double AA = A * A;
    const double BB = B * B;
    const double rd = k.rho * k.inv_d;
    const double p30 = A * (AA - 3.0 * k.inv_d);
    const double p20 = AA - k.inv_d;
    const double p03 = B * (BB - 3.0 * k.inv_d);
    const double p02 = BB - k.inv_d;
    const double p12 = A * BB - A * k.inv_d + 2.0 * rd * B;
    const double p21 = AA * B - B * k.inv_d + 2.0 * rd * A;
    const double p11 = A * B + rd;
    return k.c30 * p30 + k.c20 * p20 + k.c03 * p03 + k.c02 * p02 + k.c12 * p12 + k.c21 * p21 +
           k.c11 * p11;
}

namespace scalar {
void perturbed_ratio_batch(const RatioPoly& k, const double* a, const double* b, double* out,
                           std::size_t n);
}

#ifdef PCOP_HAVE_AVX2
namespace avx2 {
void perturbed_ratio_batch(const RatioPoly& k, const double* a, const double* b, double* out,
                           std::size_t n);
}
#endif

/// Evaluates perturbed_ratio over n points with the fastest available variant.
void perturbed_ratio_batch(const RatioPoly& k, const double* a, const double* b, double* out,
                           std::size_t n);

}  // namespace pcop::kernels
