#pragma once

#include "bifrac/asymptotics.hpp"
#include "bifrac/covariance.hpp"
#include "bifrac/estimator.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace bifrac {

enum class EstimatorKind { OLS, GLS };

struct ExperimentConfig {
    std::shared_ptr<const CovarianceModel> model;
    std::vector<int> n_list;      // strictly increasing
    int replications = 300;
    int m = 50;                   // 2m < min(n_list)
    EstimatorKind kind = EstimatorKind::GLS;
    std::uint64_t base_seed = 1;
    double tol = 1.0e-10;
    bool nu_scale = true;  // summarize on nu = alpha/2 scale; else alpha scale

    void validate() const;  // throws std::domain_error
};

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int used_points = 0;
    int dropped_points = 0;  // values at the log floor, excluded from the fit
};

/// Least-squares fit of ln(value) on ln(n). Needs >= 3 points with positive
/// values.
RateFit fit_decay_rate(const std::vector<std::pair<double, double>>& points);

struct PerNSummary {
    int n = 0;
    int included = 0;
    int excluded = 0;  // replicates lost to DegeneratePath
    std::array<double, 2> mean{};
    std::array<double, 2> bias{};
    std::array<double, 2> variance{};
    double cross_covariance = 0.0;
    std::array<double, 2> ci_lo{};  // normal-approximation 95% interval
    std::array<double, 2> ci_hi{};
    std::vector<std::array<double, 2>> estimates;  // per replicate, reporting scale
};

struct ExperimentSummary {
    std::array<double, 2> truth{};  // on the reporting scale
    std::vector<PerNSummary> per_n;
    std::array<RateFit, 2> bias_fit;
    std::array<RateFit, 2> variance_fit;
    RateFit cross_fit;
};

/// Simulates and estimates over the n grid. Deterministic in base_seed;
/// replicate r at sample size n uses the stream (base_seed ^ hash(n), r).
ExperimentSummary run_experiment(const ExperimentConfig& config);

struct DiagnosticsReport {
    std::array<double, 2> ks_stat{};
    double ks_threshold = 0.0;  // level-0.01 critical value
    std::array<bool, 2> ks_pass{};
    double max_cov_deviation = 0.0;  // standardized covariance vs identity
    double raw_correlation = 0.0;
    Eigen::Matrix2d standardized_cov = Eigen::Matrix2d::Zero();
};

/// Standardizes sqrt(n) (alpha_hat - alpha) by the law's covariance (symmetric
/// inverse square root) and reports Kolmogorov-Smirnov marginals against the
/// standard normal plus the empirical covariance against the identity.
DiagnosticsReport normality_diagnostics(
    const std::vector<std::array<double, 2>>& estimates, int n,
    const AsymptoticLaw& law, const std::array<double, 2>& truth);

} // namespace bifrac
