#pragma once

#include <cstddef>

namespace pcop::kernels {

/// One time row of a local-vol grid on uniform log-moneyness nodes
/// y_i = y0 + i / inv_dy, i < n. Lookups clamp y to the node range.
struct LvRow {
    const double* vol = nullptr;
    double y0 = 0.0;
    double inv_dy = 1.0;
    int n = 0;
};

inline double lv_lookup(const LvRow& r, double y) {
    double u = (y - r.y0) * r.inv_dy;
    u = u < 0.0 ? 0.0 : u;
    u = u > r.n - 1.0 ? r.n - 1.0 : u;
    double i = __builtin_floor(u);
    i = i > r.n - 2.0 ? r.n - 2.0 : i;
    const int k = static_cast<int>(i);
    const double w = u - i;
    return r.vol[k] + w * (r.vol[k + 1] - r.vol[k]);
}

/// Constants of one log-Euler step for two correlated assets.
struct StepParams {
    double dt = 0.0;
    double sqrt_dt = 0.0;
    double rho = 0.0;
    double rho_c = 1.0;  // sqrt(1 - rho^2)
};

inline double log_euler(double y, double v, double z, const StepParams& p) {
    return y + (v * p.sqrt_dt * z - 0.5 * v * v * p.dt);
}

namespace scalar {
void advance_paths(const LvRow& s, const LvRow& x, const StepParams& p, double* ys, double* yx,
                   const double* z1, const double* z2, std::size_t n);
}

#ifdef PCOP_HAVE_AVX2
namespace avx2 {
void advance_paths(const LvRow& s, const LvRow& x, const StepParams& p, double* ys, double* yx,
                   const double* z1, const double* z2, std::size_t n);
}
#endif

/// One step for n paths in log-moneyness: asset S driven by z1, asset X by
/// rho z1 + rho_c z2. Scalar and AVX2 variants agree bitwise.
void advance_paths(const LvRow& s, const LvRow& x, const StepParams& p, double* ys, double* yx,
                   const double* z1, const double* z2, std::size_t n);

}  // namespace pcop::kernels
