#pragma once

#include "bifrac/covariance.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bifrac {

/// Observations live at j/n, j = 1..n, on the fixed interval [0,1].
struct SamplePath {
    int n = 0;
    Eigen::VectorXd x1;
    Eigen::VectorXd x2;
};

struct SeedSpec {
    std::uint64_t base_seed = 0;
    std::uint64_t replicate_index = 0;
};

struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Assembles the 2n x 2n joint covariance in component-major block layout
/// [[S11, S12], [S12^T, S22]] with S_ij(p,q) = C_ij((q-p)/n).
Eigen::MatrixXd build_joint_covariance(const CovarianceModel& model, int n);

/// Dense Cholesky factorization shared across an ensemble. On failure the
/// diagonal gets jitter delta * mean-variance with delta escalating through
/// {1e-12, 1e-10, 1e-8} before NotPositiveDefinite is thrown.
class PathSimulator {
public:
    PathSimulator(const CovarianceModel& model, int n);

    SamplePath draw(const SeedSpec& seed) const;

    int n() const { return n_; }
    double applied_jitter() const { return jitter_; }

private:
    int n_;
    Eigen::MatrixXd chol_;  // lower triangular factor
    double jitter_ = 0.0;
};

/// One exact N(0, Sigma) draw, deterministic in the seed.
SamplePath simulate_path(const CovarianceModel& model, int n, const SeedSpec& seed);

/// R independent draws; path r uses SeedSpec{base_seed, r}. The factorization
/// is computed once.
std::vector<SamplePath> simulate_ensemble(const CovarianceModel& model, int n,
                                          int replications, std::uint64_t base_seed);

} // namespace bifrac
