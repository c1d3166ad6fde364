#pragma once

#include "pcop/market/surface.hpp"

#include <string>
#include <vector>

namespace pcop {

struct UnderlyingConfig {
    double spot = 0.0;
    double atm_vol = 0.0;
    double skew_slope = 0.0;  // vol per unit LMMR
    double curvature = 0.0;   // vol per unit LMMR^2
    double foreign_rate = 0.0;
};

/// One two-asset scenario on linear-skew smiles with flat rates.
struct ScenarioConfig {
    std::string name;
    UnderlyingConfig u1;
    UnderlyingConfig u2;
    double rho = 0.0;
    double maturity = 1.0;
    double domestic_rate = 0.0;
    std::vector<double> strikes;

    /// Throws InvalidParameters on non-positive spots, vols or maturity, |rho| > 0.99,
    /// or non-positive strikes.
    void validate() const;

    double discount() const;
    /// spot e^{(r_d - r_f) T}
    double forward(const UnderlyingConfig& u) const;
    VolSurface surface(const UnderlyingConfig& u) const;
};

/// Slope and curvature for template letter L, R or S: L has slope -|slope|,
/// R +|slope|, S zero slope with the given curvature. InvalidParameters otherwise.
UnderlyingConfig apply_skew_template(UnderlyingConfig base, char letter, double slope, double curvature);

}  // namespace pcop
