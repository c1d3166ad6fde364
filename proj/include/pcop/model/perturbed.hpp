#pragma once

#include "pcop/kernels/ratio.hpp"

#include <memory>
#include <vector>

namespace pcop {

/// Perturbed-marginal state of one underlying.
struct MarginalParams {
    double sigma = 0.0;   // effective volatility per sqrt(year)
    double r_skew = 0.0;  // skew coefficient, year^{-3/2} scale of sigma^3
    double beta = 0.0;    // log-mean shift

    /// Throws InvalidParameters unless sigma > 0, |r_skew| < 5 sigma^3, beta finite.
    void validate() const;
};

struct JointParams {
    MarginalParams m1;
    MarginalParams m2;
    double rho = 0.0;
    double tau = 1.0;

    void validate() const;
};

struct CrossCoeffs {
    double r12 = 0.0;
    double r21 = 0.0;
    double q12 = 0.0;
    double q21 = 0.0;
};

struct DensityNormalizers {
    double w_joint = 1.0;
    double w_marg1 = 1.0;
    double w_marg2 = 1.0;
};

/// Partial derivatives of u0 with respect to the initial points x1, x2.
struct U0Partials {
    double d11 = 0.0;
    double d22 = 0.0;
    double d12 = 0.0;
    double d111 = 0.0;
    double d222 = 0.0;
    double d122 = 0.0;  // d/dx1 d^2/dx2^2
    double d112 = 0.0;  // d^2/dx1^2 d/dx2
};

inline constexpr double kMaxAbsRho = 0.99;
inline constexpr double kSkewGuard = 5.0;
inline constexpr double kTruncationSd = 10.0;
inline constexpr double kNormalizerLo = 0.5;
inline constexpr double kNormalizerHi = 2.0;

CrossCoeffs derive_cross_coeffs(const JointParams& p);

/// Bivariate normal density of the log-returns (standard deviations sigma_i sqrt(tau)).
double u0_density(double xi1, double xi2, const JointParams& p);
U0Partials u0_partials(double xi1, double xi2, const JointParams& p);

/// First-order correction sqrt(eps)*u1.
double u1_correction(double xi1, double xi2, const JointParams& p, const CrossCoeffs& c);

/// sqrt(eps)*u1/u0 as a polynomial (no division of small numbers).
kernels::RatioPoly ratio_poly(const JointParams& p);

/// Plain normal density of one log-return, mean 0 and deviation sigma sqrt(tau).
double marginal_p(double xi, const MarginalParams& m, double tau);
/// -tau R (d^3 - d^2) p / p for one underlying.
double marginal_ratio(double xi, const MarginalParams& m, double tau);

/// Perturbed marginal of one underlying with its normalizer and cumulative table.
/// Construction does all the work; afterwards every method is const and thread-safe.
class PerturbedMarginal {
  public:
    PerturbedMarginal(const MarginalParams& m, double tau);

    double sigma() const { return sigma_; }
    double r_skew() const { return r_skew_; }
    double tau() const { return tau_; }
    double scale() const { return s_; }
    double normalizer() const { return w_; }
    double lower() const { return -kTruncationSd * s_; }
    double upper() const { return kTruncationSd * s_; }

    double density(double xi) const;
    double cdf(double xi) const;
    /// 1 - cdf, accurate in the upper tail.
    double survival(double xi) const;
    /// Inverse of cdf; DomainError unless 0 < z < 1.
    double quantile(double z) const;
    /// Quantile at level 1 - sv, keeping relative precision in the upper tail.
    double quantile_from_survival(double sv) const;

    /// (1 + tanh r)/W_i at standardized y; density = phi(y)/s times this.
    double tilt_std(double y) const;

  private:
    double density_std(double y) const;
    double solve_quantile(bool upper, double target) const;
    double left_mass(std::size_t cell, double y) const;
    double right_mass(std::size_t cell, double y) const;
    std::size_t cell_of(double y) const;

    double sigma_;
    double r_skew_;
    double tau_;
    double s_;
    double c3_ = 0.0;
    double c2_ = 0.0;
    double w_ = 1.0;
    bool gaussian_ = true;
    // Unnormalized mass below / above node k. The two tables keep the
    // lower and upper tails accurate to relative precision.
    std::vector<double> cum_;
    std::vector<double> cum_right_;
    double total_ = 1.0;
};

/// Perturbed joint density and copula for one parameter set.
class PerturbedJoint {
  public:
    explicit PerturbedJoint(const JointParams& p);
    PerturbedJoint(const JointParams& p, std::shared_ptr<const PerturbedMarginal> m1,
                   std::shared_ptr<const PerturbedMarginal> m2);

    const JointParams& params() const { return p_; }
    const CrossCoeffs& cross() const { return cross_; }
    const kernels::RatioPoly& poly() const { return poly_; }
    DensityNormalizers normalizers() const;
    const PerturbedMarginal& marginal1() const { return *m1_; }
    const PerturbedMarginal& marginal2() const { return *m2_; }

    double joint_density(double xi1, double xi2) const;
    /// Natural log of joint_density; finite where the density underflows a double.
    double log_joint_density(double xi1, double xi2) const;
    double copula_density(double z1, double z2) const;
    /// Copula density given the log-returns directly (skips the quantiles).
    double copula_density_at(double xi1, double xi2) const;

  private:
    void init();

    JointParams p_;
    CrossCoeffs cross_;
    kernels::RatioPoly poly_;
    std::shared_ptr<const PerturbedMarginal> m1_;
    std::shared_ptr<const PerturbedMarginal> m2_;
    double s1_ = 1.0;
    double s2_ = 1.0;
    double w_ = 1.0;
    bool gaussian_ = true;
};

/// Shared, cached instances keyed on parameter values (beta is ignored).
std::shared_ptr<const PerturbedMarginal> perturbed_marginal(const MarginalParams& m, double tau);
std::shared_ptr<const PerturbedJoint> perturbed_joint(const JointParams& p);

double joint_density(double xi1, double xi2, const JointParams& p);
double marginal_density(double xi, const MarginalParams& m, double tau);
double marginal_cdf(double xi, const MarginalParams& m, double tau);
double marginal_quantile(double z, const MarginalParams& m, double tau);
double copula_density(double z1, double z2, const JointParams& p);
DensityNormalizers normalizers(const JointParams& p);

/// log(1 + tanh r), stable for any r.
double log_one_plus_tanh(double r);

}  // namespace pcop
