#pragma once

#include "pcop/market/surface.hpp"
#include "pcop/model/perturbed.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pcop {

/// Straight line vol = a * LMMR + b fitted to a smile.
struct RegressionSeed {
    double a = 0.0;
    double b = 0.0;
};

struct CalibrationResult {
    MarginalParams params;
    int beta_iterations = 0;
    int nr_iterations = 0;
    std::pair<double, double> price_residuals{0.0, 0.0};  // model - market (call, put)
    RegressionSeed seed;
    double call_strike = 0.0;
    double put_strike = 0.0;
};

struct CalibrationOptions {
    std::optional<double> call_strike;  // default: 25 delta call
    std::optional<double> put_strike;   // default: 25 delta put
    int max_iterations = 100;
    double residual_tol = 1e-10;  // relative to the forward
};

struct FlatRates {
    double domestic = 0.0;  // r
    double foreign = 0.0;   // q (dividend or foreign yield)
};

RegressionSeed regress_vol_line(const VolSurface& s);

/// (sigma_bar, R) from the seed line: sigma_bar = b - a b^2 / 2, R = -a sigma_bar^3.
std::pair<double, double> seed_params(const RegressionSeed& seed);

/// ln S + (r - q) tau - sigma^2 tau / 2.
double initial_beta(double spot, const FlatRates& rates, double sigma_bar, double tau);

/// E[e^{beta + xi}] under the perturbed marginal, over the truncation domain.
double model_forward(const MarginalParams& m, double tau);

struct BetaFit {
    double beta = 0.0;
    int iterations = 0;
};

/// Shifts beta until model_forward matches target_forward to 1e-12 relative.
BetaFit fit_beta(const MarginalParams& m, double tau, double target_forward);

/// DF * E[(e^{beta+xi} - K)^+] (or the put) under the perturbed marginal.
double marginal_vanilla_price(const MarginalParams& m, double tau, double strike, double discount,
                              OptionType type);

/// Exact fit of (sigma_bar, R) to the 25 delta call and put of the surface.
CalibrationResult calibrate_marginal(const VolSurface& s, const CalibrationOptions& opts = {});

/// First-order price P0 + sqrt(eps) P1 with Black greeks in the spot.
double appendix_vanilla_price(const MarginalParams& m, double tau, double strike, double discount,
                              double spot, const FlatRates& rates, OptionType type);

/// sigma_bar - R / (2 sigma_bar) - (R / sigma_bar^3) * lmmr.
double implied_vol_line(const MarginalParams& m, double lmmr);

/// Model-implied smile with quotes at the 25 delta strikes plus the given extra
/// LMMR nodes, so calibrating to it reproduces the parameters. Extra nodes whose
/// OTM price underflows (beyond the truncated support) are dropped.
VolSurface make_model_surface(const MarginalParams& m, double tau, double forward, double discount,
                              const std::vector<double>& extra_lmmrs = {-0.3, 0.0, 0.3});

}  // namespace pcop
