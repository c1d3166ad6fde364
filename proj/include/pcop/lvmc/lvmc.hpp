#pragma once

#include "pcop/market/surface.hpp"
#include "pcop/pricing/quanto.hpp"

#include <cstdint>
#include <vector>

namespace pcop {

/// Local vols on uniform time rows and uniform log-moneyness nodes y = ln(K/F).
/// Bilinear in (t, y), flat outside the node ranges.
class LocalVolGrid {
  public:
    LocalVolGrid() = default;
    LocalVolGrid(double forward, std::vector<double> times, std::vector<double> ys,
                 std::vector<double> vols);

    double forward() const { return forward_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& ys() const { return ys_; }
    /// Row-major: vols()[j * ys().size() + i] at (times()[j], ys()[i]).
    const std::vector<double>& vols() const { return vols_; }

    double local_vol(double t, double strike) const;
    /// Row at time t, blended linearly between the neighbouring time rows.
    void row_at(double t, std::vector<double>& out) const;

  private:
    double forward_ = 0.0;
    std::vector<double> times_;
    std::vector<double> ys_;
    std::vector<double> vols_;
};

struct DupireOptions {
    int strike_nodes = 201;
    int time_rows = 21;
    double span_stdevs = 5.0;
};

/// Dupire local vol from one smile slice, read as stationary in log-moneyness:
/// total variance w(y, t) = sigma(y)^2 t. Derivatives in y by central
/// differences with the node spacing as step. Throws NegativeVariance when
/// the denominator is not positive.
LocalVolGrid dupire_local_vol(const VolSurface& surface, const DupireOptions& opts = {});

struct McConfig {
    std::uint64_t paths = 200000;
    int steps_per_year = 100;
    std::uint64_t seed = 20240601;
    bool antithetic = false;
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const;
};

struct McResult {
    double pv = 0.0;      // value / K
    double stderr_pv = 0.0;
    double value = 0.0;
    double stderr_value = 0.0;
    std::uint64_t paths = 0;
    int steps = 0;
};

/// DF E[payoff(S_T) X_T] under two correlated local-vol processes, each a
/// martingale started at its grid's forward. Log-Euler steps; normals from
/// Philox streams keyed by path index, so results do not depend on threads.
McResult mc_price_quanto(const QuantoSpec& spec, const LocalVolGrid& lv_s, const LocalVolGrid& lv_x,
                         double rho, const McConfig& cfg = {});

/// DF E[payoff(S_T)] under one local-vol process.
McResult mc_price_vanilla(double strike, double maturity, double discount, OptionType type,
                          const LocalVolGrid& lv, const McConfig& cfg = {});

}  // namespace pcop
