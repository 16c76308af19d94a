#pragma once

#include <Eigen/Core>

#include <functional>
#include <string>

namespace bifrac {

/// Small-lag expansion data of a bivariate stationary covariance:
///   C11(t) = sigma1_sq - c11 |t|^alpha11 + O(|t|^{alpha11+beta11})
///   C22(t) = sigma2_sq - c22 |t|^alpha22 + O(|t|^{alpha22+beta22})
///   C12(t) = rho s1 s2 (1 - c12 |t|^alpha12 + O(|t|^{alpha12+beta12}))
struct LocalExpansion {
    double sigma1_sq = 1.0;
    double sigma2_sq = 1.0;
    double rho = 0.5;
    double c11 = 1.0, c22 = 1.0, c12 = 1.0;
    double alpha11 = 1.0, alpha22 = 1.0, alpha12 = 1.0;
    double beta11 = 1.0, beta22 = 1.0, beta12 = 1.0;

    /// Throws std::domain_error on a field-range violation. rho == 0 is
    /// accepted as the degenerate independent-components case.
    void validate_fields() const;

    bool equality_case() const;
};

struct ValidityResult {
    bool valid = true;
    std::string reason;
};

/// Checks the cross-smoothness validity condition:
/// (alpha11+alpha22)/2 < alpha12, or equality together with
/// c12^2 rho^2 s1^2 s2^2 < c11 c22.
ValidityResult check_validity(const LocalExpansion& exp);

/// Parameters of the full bivariate Matern model. Marginal smoothness must
/// stay in (0,1) so the sample paths are nonsmooth.
struct MaternParams {
    double nu11 = 0.2, nu22 = 0.7, nu12 = 0.45;
    double a11 = 1.0, a22 = 1.0, a12 = 1.0;
    double sigma1 = 1.0, sigma2 = 1.0;
    double rho = 0.5;
};

/// Matern correlation M(h | nu, a) = 2^{1-nu}/Gamma(nu) (a|h|)^nu K_nu(a|h|),
/// with M(0) = 1 by continuity.
double matern_correlation(double h, double nu, double a);

/// First expansion coefficient of 1 - M(h|nu,a) at the origin:
/// b1 = Gamma(1-nu) a^{2nu} / (2^{2nu} Gamma(1+nu)). Requires nu in (0,1).
double matern_b1(double nu, double a);

/// Small-lag expansion of the bivariate Matern model; alpha = 2 nu,
/// beta = 2 - 2 nu. Throws std::domain_error when the resulting expansion
/// fails the validity condition.
LocalExpansion local_expansion(const MaternParams& params);

/// Pointwise spectral check rho^2 f12^2 <= f11 f22 on a log-spaced frequency
/// grid plus the large-frequency decay-exponent comparison.
ValidityResult check_matern_validity(const MaternParams& params,
                                     int freq_grid_size = 256);

/// Hausdorff dimension of the joint trajectory {(t, X1(t), X2(t))}:
/// min{(2 + a2 - a1)/a2, 3 - (a1+a2)/2} after relabeling so a1 <= a2.
double trajectory_dimension(double alpha11, double alpha22);

/// Graph dimension 2 - alpha/2 of a single component.
double component_graph_dimension(double alpha);

/// Bivariate stationary covariance model: lag t -> 2x2 matrix C(t), with its
/// local expansion attached. Immutable after construction.
class CovarianceModel {
public:
    virtual ~CovarianceModel() = default;
    virtual Eigen::Matrix2d evaluate(double t) const = 0;
    const LocalExpansion& expansion() const { return exp_; }

protected:
    explicit CovarianceModel(LocalExpansion exp) : exp_(std::move(exp)) {}
    LocalExpansion exp_;
};

class MaternModel final : public CovarianceModel {
public:
    /// Throws when either the expansion-level or spectral validity fails.
    explicit MaternModel(const MaternParams& params);
    Eigen::Matrix2d evaluate(double t) const override;
    const MaternParams& params() const { return params_; }

private:
    MaternParams params_;
};

/// User-supplied evaluator plus a declared expansion. The constructor
/// cross-checks the evaluator's small-lag behavior against the declaration
/// (relative tolerance 1e-2 at h = 1e-4).
class GenericModel final : public CovarianceModel {
public:
    using Evaluator = std::function<Eigen::Matrix2d(double)>;
    GenericModel(Evaluator eval, LocalExpansion exp);
    Eigen::Matrix2d evaluate(double t) const override;

private:
    Evaluator eval_;
};

} // namespace bifrac
