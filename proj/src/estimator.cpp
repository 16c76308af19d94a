#include "bifrac/estimator.hpp"

#include "bifrac/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bifrac {

namespace {

const Eigen::VectorXd& component_values(const SamplePath& path, int component) {
    if (component == 1) return path.x1;
    if (component == 2) return path.x2;
    throw std::domain_error("component must be 1 or 2");
}

}  // namespace

Eigen::VectorXd filtered_increments(const SamplePath& path, int u, int component) {
    if (u < 1) throw std::domain_error("filtered_increments: dilation must be >= 1");
    if (2 * u >= path.n)
        throw std::domain_error("filtered_increments: need 2u < n");
    const Eigen::VectorXd& x = component_values(path, component);
    const int len = path.n - 2 * u;
    Eigen::VectorXd d(len);
    // x[j-1] holds X(j/n); valid j run from u+1 to n-u
    for (int j = u + 1; j <= path.n - u; ++j)
        d[j - u - 1] = x[j - u - 1] - 2.0 * x[j - 1] + x[j + u - 1];
    return d;
}

double zbar(const SamplePath& path, int u, int component) {
    const Eigen::VectorXd d = filtered_increments(path, u, component);
    return d.squaredNorm() / d.size();
}

WeightVector ols_weights(int m) {
    if (m < 2) throw std::domain_error("ols_weights: m must be >= 2");
    Eigen::VectorXd logs(m);
    for (int u = 1; u <= m; ++u) logs[u - 1] = std::log(static_cast<double>(u));
    const double mean = logs.mean();
    const double ss = (logs.array() - mean).square().sum();
    WeightVector w;
    w.L = (logs.array() - mean) / ss;
    return w;
}

WeightVector gls_weights(int m, int n, double nu_plugin) {
    if (m < 2) throw std::domain_error("gls_weights: m must be >= 2");
    if (2 * m >= n) throw std::domain_error("gls_weights: need 2m < n");
    const double nu = std::clamp(nu_plugin, 0.01, 0.99);
    const double ex = 2.0 * nu;

    // |t|^{2nu} lookup for all integer offsets that can occur
    std::vector<double> pw(n + 2 * m + 1);
    for (int t = 0; t < static_cast<int>(pw.size()); ++t)
        pw[t] = std::pow(static_cast<double>(t), ex);

    const double den = std::pow(2.0, ex + 1.0) - 8.0;  // sum a_j a_k |k-j|^{2nu}

    auto filtered_cov = [&](int d, int u, int v) {
        double s = 0.0;
        for (int j = -1; j <= 1; ++j)
            for (int k = -1; k <= 1; ++k)
                s += kFilterCoeffs[j + 1] * kFilterCoeffs[k + 1] * pw[std::abs(d + k * v - j * u)];
        return s;
    };

    Eigen::MatrixXd omega(m, m);
    for (int u = 1; u <= m; ++u) {
        for (int v = u; v <= m; ++v) {
            // sum over h = u..n-u, l = v..n-v of s(h-l)^2, grouped by d = h-l
            double acc = 0.0;
            for (int d = u - (n - v); d <= (n - u) - v; ++d) {
                const int lo = std::max(u, v + d);
                const int hi = std::min(n - u, n - v + d);
                if (hi < lo) continue;
                const double s = filtered_cov(d, u, v);
                acc += static_cast<double>(hi - lo + 1) * s * s;
            }
            const double norm = 2.0 / (static_cast<double>(n - 2 * u + 1) * (n - 2 * v + 1));
            const double val = norm * acc / (den * den * pw[u] * pw[v]);
            omega(u - 1, v - 1) = val;
            omega(v - 1, u - 1) = val;
        }
    }

    Eigen::MatrixXd design(m, 2);
    for (int u = 1; u <= m; ++u) {
        design(u - 1, 0) = 1.0;
        design(u - 1, 1) = std::log(static_cast<double>(u));
    }

    Eigen::LDLT<Eigen::MatrixXd> ldlt(omega);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("gls_weights: singular Omega; use smaller m or larger n");
    const Eigen::MatrixXd wdesign = ldlt.solve(design);       // Omega^{-1} G
    const Eigen::Matrix2d gram = design.transpose() * wdesign; // G^T Omega^{-1} G
    if (std::abs(gram.determinant()) < 1.0e-300)
        throw std::runtime_error("gls_weights: singular design; use smaller m or larger n");
    const Eigen::MatrixXd coef = gram.inverse() * wdesign.transpose();  // 2 x m
    WeightVector w;
    w.L = coef.row(1).transpose();  // slope row
    return w;
}

double estimate_alpha(const SamplePath& path, int component, const WeightVector& weights) {
    const int m = weights.m();
    double alpha = 0.0;
    for (int u = 1; u <= m; ++u) {
        const double z = zbar(path, u, component);
        if (z <= 0.0)
            throw DegeneratePath("estimate_alpha: zero increment statistic at dilation " +
                                     std::to_string(u),
                                 component);
        alpha += weights.L[u - 1] * std::log(z);
    }
    return alpha;
}

JointEstimate estimate_joint(const SamplePath& path, const WeightVector& w1,
                             const WeightVector& w2) {
    JointEstimate est;
    est.alpha11_hat = estimate_alpha(path, 1, w1);
    est.alpha22_hat = estimate_alpha(path, 2, w2);
    est.nu11_hat = est.alpha11_hat / 2.0;
    est.nu22_hat = est.alpha22_hat / 2.0;
    const double a1 = std::clamp(est.alpha11_hat, 0.02, 1.98);
    const double a2 = std::clamp(est.alpha22_hat, 0.02, 1.98);
    est.dim_hat = trajectory_dimension(a1, a2);
    return est;
}

int default_dilations(int n) {
    if (n >= 500) return 50;
    return std::max(2, n / 10);
}

} // namespace bifrac
