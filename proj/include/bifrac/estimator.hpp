#pragma once

#include "bifrac/simulate.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace bifrac {

/// Second-difference filter weights (1, -2, 1); annihilates affine trends.
inline constexpr double kFilterCoeffs[3] = {1.0, -2.0, 1.0};

struct DegeneratePath : std::runtime_error {
    DegeneratePath(const std::string& what, int component_)
        : std::runtime_error(what), component(component_) {}
    int component;
};

/// Regression weights L_1..L_m with sum L_u = 0 and sum L_u ln u = 1.
struct WeightVector {
    Eigen::VectorXd L;
    int m() const { return static_cast<int>(L.size()); }
};

/// Dilated second differences X((j-u)/n) - 2 X(j/n) + X((j+u)/n) for
/// j = u+1..n-u (interior points only; length n - 2u). The scaling prefactor
/// of the filtered process depends on the unknown index and cancels in the
/// estimator, so it is omitted here.
Eigen::VectorXd filtered_increments(const SamplePath& path, int u, int component);

/// Mean of squared increments at dilation u (divisor n - 2u).
double zbar(const SamplePath& path, int u, int component);

/// Ordinary least squares weights: L_u = (ln u - mean) / sum (ln v - mean)^2.
WeightVector ols_weights(int m);

/// Generalized least squares weights for a Matern covariance, built from the
/// increment-covariance matrix Omega at the plugged-in smoothness nu (from a
/// prior OLS pass) and the design (1, ln u). nu_plugin is clamped to
/// [0.01, 0.99]. Throws std::runtime_error when Omega is singular.
WeightVector gls_weights(int m, int n, double nu_plugin);

/// alpha-hat = sum_u L_u ln zbar_u. Throws DegeneratePath when any zbar is 0.
double estimate_alpha(const SamplePath& path, int component, const WeightVector& weights);

struct JointEstimate {
    double alpha11_hat = 0.0;
    double alpha22_hat = 0.0;
    double nu11_hat = 0.0;
    double nu22_hat = 0.0;
    double dim_hat = 0.0;  // plug-in trajectory dimension, inputs clamped to [0.02, 1.98]
};

JointEstimate estimate_joint(const SamplePath& path, const WeightVector& w1,
                             const WeightVector& w2);

/// 50 when n >= 500, else max(2, n/10).
int default_dilations(int n);

} // namespace bifrac
