#pragma once

#include "bifrac/covariance.hpp"
#include "bifrac/estimator.hpp"

#include <Eigen/Dense>

namespace bifrac {

/// Limiting covariance of filtered increments at dilations (u, v) and
/// integer lag h: -c * sum_{j,k} a_j a_k |h + k v - j u|^alpha.
double sigma0_marginal(int h, int u, int v, double alpha, double c);

/// Cross version; identically 0 when (alpha11+alpha22)/2 < alpha12,
/// otherwise the marginal form with coefficient rho s1 s2 c12 and exponent
/// alpha12.
double sigma0_cross(int h, int u, int v, const LocalExpansion& exp);

struct Phi0Entry {
    double value = 0.0;
    int truncation = 0;      // lags |h| <= truncation were summed
    double tail_bound = 0.0; // analytic bound on the dropped tail
};

/// phi0 entry 2 sum_h sigma0(h)^2 for components (i, j), with the truncation
/// H chosen from the |h|^{mean(alpha)-4} tail decay so the dropped mass is
/// below tol.
Phi0Entry phi0_entry(int u, int v, int i, int j, const LocalExpansion& exp, double tol);

/// 2m x 2m limiting covariance of sqrt(n) (Zbar - E Zbar) in block form
/// [[Phi11, Phi12], [Phi12^T, Phi22]]. The cross blocks are exactly zero in
/// the strict-inequality case.
struct Phi0Matrix {
    Eigen::MatrixXd matrix;
    int m = 0;
    int max_truncation = 0;
    double max_tail_bound = 0.0;

    Eigen::MatrixXd block(int i, int j) const {
        return matrix.block((i - 1) * m, (j - 1) * m, m, m);
    }
};

Phi0Matrix phi0_matrix(const LocalExpansion& exp, int m, double tol = 1.0e-10);

/// Limiting variance constant of the increment statistics:
/// tau = c (8 - 2^{alpha+1}) u^alpha.
double tau(int u, double alpha, double c);

/// Limiting 2x2 covariance of sqrt(n) (alpha-hat - alpha).
struct AsymptoticLaw {
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
    double correlation = 0.0;
};

AsymptoticLaw asymptotic_law(const LocalExpansion& exp, const WeightVector& L1,
                             const WeightVector& L2, double tol = 1.0e-10);

/// min{1+x1, 1+x2, x1+x2}, the remainder-driven decay exponent.
double psi_rate(double x1, double x2);

/// Predicted decay exponents (value e means the quantity decays as n^{-e}).
struct RateExponents {
    double bias1 = 1.0, bias2 = 1.0;   // min(1, beta_ii)
    double mse11 = 1.0, mse22 = 1.0;   // min(1, psi(beta_ii, beta_ii))
    double cross = 1.0;                // equality case: min(1, psi(beta11, beta22))
    bool cross_faster_than_n1 = false; // strict case: cross term is o(1/n)
    double cross_strict_prediction = 1.0;  // leading strict-case exponent
};

RateExponents rate_exponents(const LocalExpansion& exp);

} // namespace bifrac
