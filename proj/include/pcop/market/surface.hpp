#pragma once

#include "pcop/market/black.hpp"

#include <vector>

namespace pcop {

struct VolQuote {
    double strike = 0.0;
    double vol = 0.0;
};

/// Single-maturity smile, linear in LMMR = ln(K/F)/T between quotes and flat outside.
class VolSurface {
  public:
    VolSurface() = default;
    VolSurface(double forward, double maturity, double discount, std::vector<VolQuote> quotes);

    double forward() const { return forward_; }
    double maturity() const { return maturity_; }
    double discount() const { return discount_; }
    const std::vector<VolQuote>& quotes() const { return quotes_; }

    double lmmr(double strike) const;
    double vol_at(double strike) const;
    /// Price of the out-of-the-money option at strike (put below the forward).
    double otm_price(double strike) const;
    double price(double strike, OptionType type) const;

    /// LMMR coordinates of quote nodes where the interpolant's slope changes
    /// (including the end nodes when the end segments are not flat).
    std::vector<double> kink_lmmrs() const;

  private:
    double forward_ = 0.0;
    double maturity_ = 0.0;
    double discount_ = 1.0;
    std::vector<VolQuote> quotes_;
    std::vector<double> x_;  // LMMR of each quote
};

inline double vol_at(const VolSurface& s, double strike) { return s.vol_at(strike); }

struct EmpiricalPoint {
    double density = 0.0;
    double cdf = 0.0;
    double survival = 0.0;
};

/// Breeden-Litzenberger marginal of xi = ln S_T implied by a surface. Densities and
/// CDFs come from central finite differences (bump 1e-4 K) of out-of-the-money prices.
class EmpiricalMarginal {
  public:
    static constexpr double kRelBump = 1e-4;

    explicit EmpiricalMarginal(VolSurface surface);

    const VolSurface& surface() const { return surface_; }
    double density(double xi) const;
    double cdf(double xi) const;
    /// 1 - cdf, accurate in the upper tail.
    double survival(double xi) const;
    /// density, cdf and survival from one stencil.
    EmpiricalPoint point(double xi) const;

    /// Points in xi where the density has finite-difference spikes from vol kinks.
    const std::vector<double>& breakpoints() const { return breaks_; }
    double mean() const { return mean_; }
    double stdev() const { return stdev_; }
    /// mean -+ 10 standard deviations.
    double lower() const { return mean_ - 10.0 * stdev_; }
    double upper() const { return mean_ + 10.0 * stdev_; }

    /// Most negative density found on a scan through the spikes and a fine grid.
    double min_density() const { return min_density_; }
    /// True when finite differences produced density below -1e-8 (butterfly arbitrage).
    bool negative_density() const { return min_density_ < -1e-8; }

  private:
    VolSurface surface_;
    std::vector<double> breaks_;
    double mean_ = 0.0;
    double stdev_ = 0.0;
    double min_density_ = 0.0;
};

double empirical_density(const VolSurface& s, double xi);
double empirical_cdf(const VolSurface& s, double xi);

struct SkewTemplate {
    double atm_vol = 0.1;
    double slope = 0.0;      // vol per unit LMMR (a)
    double curvature = 0.0;  // vol per unit LMMR^2 (smile)
};

/// Quotes at LMMR in {-0.3, -0.15, 0, 0.15, 0.3} with vol = atm + a x + c x^2, floored at 1%.
VolSurface make_linear_skew_surface(double forward, double maturity, double discount,
                                    const SkewTemplate& t);

/// Strike whose forward delta (with the smile vol at that strike) equals delta_target.
/// Calls need delta in (0,1), puts in (-1,0). NoBracket if unattainable.
double strike_for_delta(const VolSurface& s, double delta_target, OptionType type);

}  // namespace pcop
