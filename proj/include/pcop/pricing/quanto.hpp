#pragma once

#include "pcop/market/black.hpp"
#include "pcop/market/surface.hpp"
#include "pcop/model/perturbed.hpp"

#include <memory>
#include <variant>

namespace pcop {

/// Option on S paid in units of X: DF * E[(S_T - K)^+ X_T] for a call.
struct QuantoSpec {
    double strike = 0.0;
    double maturity = 0.0;
    double discount = 1.0;
    OptionType type = OptionType::Call;

    void validate() const;
};

struct GaussianCopula {
    double rho = 0.0;
};

struct PerturbedCopula {
    JointParams params;
};

using CopulaChoice = std::variant<GaussianCopula, PerturbedCopula>;

double copula_rho(const CopulaChoice& c);

struct PriceResult {
    double pv = 0.0;     // per unit notional: value / K
    double value = 0.0;  // DF * E[payoff * X_T]
    double quad_error = 0.0;
    CopulaChoice copula_used;
    double quanto_forward = 0.0;  // E[S_T X_T]
};

/// Bivariate normal density at the normal scores of (z1, z2) over the product
/// of the univariate densities.
double gaussian_copula_density(double z1, double z2, double rho);

/// Same, from the normal scores directly.
double gaussian_copula_density_scores(double n1, double n2, double rho);

/// f_cop(F1(xi1), F2(xi2)) f1(xi1) f2(xi2) with empirical marginals.
double joint_pdf(double xi1, double xi2, const CopulaChoice& copula, const EmpiricalMarginal& m1,
                 const EmpiricalMarginal& m2);

/// DF * E[(S - K)^+ X] for jointly lognormal S, X: F_X times the Black price at
/// the quanto-adjusted forward F_S e^{rho sigma_S sigma_X tau}.
double closed_form_quanto(double fwd_s, double fwd_x, double sigma_s, double sigma_x, double rho,
                          double tau, double strike, double discount, OptionType type = OptionType::Call);

/// Quadrature engine for one pair of surfaces. Holds the empirical marginals so
/// that repeated prices and quanto forwards reuse them.
class QuantoPricer {
  public:
    QuantoPricer(const VolSurface& s, const VolSurface& x);

    const EmpiricalMarginal& marginal_s() const { return *ms_; }
    const EmpiricalMarginal& marginal_x() const { return *mx_; }
    double maturity() const { return ms_->surface().maturity(); }

    PriceResult price(const QuantoSpec& spec, const CopulaChoice& copula) const;

    /// Fixed tensor-product Gauss-Kronrod rule; smooth in the copula parameters.
    double quanto_forward(const CopulaChoice& copula) const;

    /// rho such that the perturbed quanto forward equals target.
    double imply_perturbed_corr(double target, const JointParams& tmpl) const;

  private:
    void check_copula(const CopulaChoice& copula) const;

    std::shared_ptr<const EmpiricalMarginal> ms_;
    std::shared_ptr<const EmpiricalMarginal> mx_;
};

PriceResult price_quanto(const QuantoSpec& spec, const CopulaChoice& copula, const VolSurface& s,
                         const VolSurface& x);
double quanto_forward(const CopulaChoice& copula, const VolSurface& s, const VolSurface& x);
double imply_perturbed_corr(double target, const JointParams& tmpl, const VolSurface& s,
                            const VolSurface& x);

}  // namespace pcop
