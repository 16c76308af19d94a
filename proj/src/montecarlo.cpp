#include "bifrac/montecarlo.hpp"

#include "bifrac/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bifrac {

namespace {

constexpr double kLogFloor = 1.0e-15;
constexpr double kKs01 = 1.62762;  // asymptotic KS critical constant at level 0.01

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

std::uint64_t stream_base(std::uint64_t base_seed, int n) {
    return base_seed ^ (0x100000001b3ULL * static_cast<std::uint64_t>(n));
}

RateFit fit_or_empty(std::vector<std::pair<double, double>> pts) {
    RateFit fit;
    fit.dropped_points = 0;
    std::vector<std::pair<double, double>> kept;
    for (auto& p : pts) {
        const double v = std::max(std::abs(p.second), kLogFloor);
        if (v <= kLogFloor) {
            ++fit.dropped_points;
            continue;
        }
        kept.emplace_back(p.first, v);
    }
    if (kept.size() < 3) return fit;
    RateFit f = fit_decay_rate(kept);
    f.dropped_points = fit.dropped_points;
    return f;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!model) throw std::domain_error("ExperimentConfig: model required");
    if (n_list.empty() || !std::is_sorted(n_list.begin(), n_list.end()) ||
        std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
        throw std::domain_error("ExperimentConfig: n_list must be strictly increasing");
    if (replications < 2) throw std::domain_error("ExperimentConfig: need R >= 2");
    if (2 * m >= n_list.front())
        throw std::domain_error("ExperimentConfig: need 2m < min(n_list)");
}

RateFit fit_decay_rate(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw std::domain_error("fit_decay_rate: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [n, value] : points) {
        if (!(value > 0.0))
            throw std::domain_error("fit_decay_rate: values must be positive");
        const double x = std::log(n), y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double k = static_cast<double>(points.size());
    const double vxx = sxx - sx * sx / k;
    const double vxy = sxy - sx * sy / k;
    const double vyy = syy - sy * sy / k;
    RateFit fit;
    fit.slope = vxy / vxx;
    fit.intercept = (sy - fit.slope * sx) / k;
    fit.r_squared = vyy > 0.0 ? vxy * vxy / (vxx * vyy) : 1.0;
    fit.used_points = static_cast<int>(points.size());
    return fit;
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
    config.validate();
    const LocalExpansion& exp = config.model->expansion();
    const double scale = config.nu_scale ? 0.5 : 1.0;

    ExperimentSummary summary;
    summary.truth = {scale * exp.alpha11, scale * exp.alpha22};

    const WeightVector ols = ols_weights(config.m);

    for (int n : config.n_list) {
        const PathSimulator sim(*config.model, n);
        PerNSummary per;
        per.n = n;
        for (int r = 0; r < config.replications; ++r) {
            const SamplePath path =
                sim.draw({stream_base(config.base_seed, n), static_cast<std::uint64_t>(r)});
            try {
                JointEstimate est = estimate_joint(path, ols, ols);
                if (config.kind == EstimatorKind::GLS) {
                    const WeightVector g1 = gls_weights(config.m, n, est.nu11_hat);
                    const WeightVector g2 = gls_weights(config.m, n, est.nu22_hat);
                    est = estimate_joint(path, g1, g2);
                }
                per.estimates.push_back(
                    {scale * est.alpha11_hat, scale * est.alpha22_hat});
            } catch (const DegeneratePath&) {
                ++per.excluded;
            }
        }
        per.included = static_cast<int>(per.estimates.size());
        if (per.included >= 2) {
            double s1 = 0, s2 = 0;
            for (auto& e : per.estimates) {
                s1 += e[0];
                s2 += e[1];
            }
            per.mean = {s1 / per.included, s2 / per.included};
            double v1 = 0, v2 = 0, cc = 0;
            for (auto& e : per.estimates) {
                v1 += (e[0] - per.mean[0]) * (e[0] - per.mean[0]);
                v2 += (e[1] - per.mean[1]) * (e[1] - per.mean[1]);
                cc += (e[0] - per.mean[0]) * (e[1] - per.mean[1]);
            }
            per.variance = {v1 / (per.included - 1), v2 / (per.included - 1)};
            per.cross_covariance = cc / (per.included - 1);
            per.bias = {per.mean[0] - summary.truth[0], per.mean[1] - summary.truth[1]};
            for (int i = 0; i < 2; ++i) {
                const double hw = 1.96 * std::sqrt(per.variance[i]);
                per.ci_lo[i] = per.mean[i] - hw;
                per.ci_hi[i] = per.mean[i] + hw;
            }
        }
        summary.per_n.push_back(std::move(per));
    }

    for (int i = 0; i < 2; ++i) {
        std::vector<std::pair<double, double>> bias_pts, var_pts;
        for (auto& per : summary.per_n) {
            bias_pts.emplace_back(per.n, per.bias[i]);
            var_pts.emplace_back(per.n, per.variance[i]);
        }
        summary.bias_fit[i] = fit_or_empty(bias_pts);
        summary.variance_fit[i] = fit_or_empty(var_pts);
    }
    std::vector<std::pair<double, double>> cross_pts;
    for (auto& per : summary.per_n) cross_pts.emplace_back(per.n, per.cross_covariance);
    summary.cross_fit = fit_or_empty(cross_pts);
    return summary;
}

DiagnosticsReport normality_diagnostics(
    const std::vector<std::array<double, 2>>& estimates, int n,
    const AsymptoticLaw& law, const std::array<double, 2>& truth) {
    const int reps = static_cast<int>(estimates.size());
    if (reps < 200)
        throw std::domain_error("normality_diagnostics: need at least 200 replicates");

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(law.covariance);
    if (eig.eigenvalues().minCoeff() <= 0.0)
        throw std::runtime_error("normality_diagnostics: singular law covariance");
    const Eigen::Matrix2d inv_sqrt =
        eig.eigenvectors() *
        eig.eigenvalues().array().rsqrt().matrix().asDiagonal() *
        eig.eigenvectors().transpose();

    const double root_n = std::sqrt(static_cast<double>(n));
    std::vector<Eigen::Vector2d> std_pts(reps);
    Eigen::Vector2d raw_mean = Eigen::Vector2d::Zero();
    for (int r = 0; r < reps; ++r) {
        Eigen::Vector2d d(estimates[r][0] - truth[0], estimates[r][1] - truth[1]);
        std_pts[r] = inv_sqrt * (root_n * d);
        raw_mean += Eigen::Vector2d(estimates[r][0], estimates[r][1]);
    }
    raw_mean /= reps;

    DiagnosticsReport report;
    report.ks_threshold = kKs01 / std::sqrt(static_cast<double>(reps));
    for (int i = 0; i < 2; ++i) {
        std::vector<double> z(reps);
        for (int r = 0; r < reps; ++r) z[r] = std_pts[r][i];
        std::sort(z.begin(), z.end());
        double d = 0.0;
        for (int r = 0; r < reps; ++r) {
            const double f = normal_cdf(z[r]);
            d = std::max(d, std::max((r + 1.0) / reps - f, f - static_cast<double>(r) / reps));
        }
        report.ks_stat[i] = d;
        report.ks_pass[i] = d < report.ks_threshold;
    }

    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (auto& p : std_pts) mean += p;
    mean /= reps;
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    double raw_v1 = 0, raw_v2 = 0, raw_cc = 0;
    for (int r = 0; r < reps; ++r) {
        const Eigen::Vector2d c = std_pts[r] - mean;
        cov += c * c.transpose();
        const double d1 = estimates[r][0] - raw_mean[0];
        const double d2 = estimates[r][1] - raw_mean[1];
        raw_v1 += d1 * d1;
        raw_v2 += d2 * d2;
        raw_cc += d1 * d2;
    }
    cov /= (reps - 1);
    report.standardized_cov = cov;
    report.max_cov_deviation = (cov - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
    report.raw_correlation = raw_cc / std::sqrt(raw_v1 * raw_v2);
    return report;
}

} // namespace bifrac
