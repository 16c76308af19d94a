#include "bifrac/simulate.hpp"

#include "bifrac/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bifrac {

Eigen::MatrixXd build_joint_covariance(const CovarianceModel& model, int n) {
    if (n < 8) throw std::domain_error("build_joint_covariance: n must be >= 8");
    // each block is Toeplitz: one model evaluation per distinct lag
    std::vector<Eigen::Matrix2d> c(n);
    for (int k = 0; k < n; ++k) c[k] = model.evaluate(static_cast<double>(k) / n);

    Eigen::MatrixXd sigma(2 * n, 2 * n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const Eigen::Matrix2d& ck = c[std::abs(q - p)];
            sigma(p, q) = ck(0, 0);
            sigma(n + p, n + q) = ck(1, 1);
            sigma(p, n + q) = ck(0, 1);
            sigma(n + p, q) = ck(0, 1);
        }
    }
    return sigma;
}

PathSimulator::PathSimulator(const CovarianceModel& model, int n) : n_(n) {
    Eigen::MatrixXd sigma = build_joint_covariance(model, n);
    const double mean_var = sigma.diagonal().mean();
    for (double delta : {0.0, 1.0e-12, 1.0e-10, 1.0e-8}) {
        Eigen::MatrixXd trial = sigma;
        if (delta > 0.0)
            trial.diagonal().array() += delta * mean_var;
        Eigen::LLT<Eigen::MatrixXd> llt(trial);
        if (llt.info() == Eigen::Success) {
            chol_ = llt.matrixL();
            jitter_ = delta * mean_var;
            return;
        }
    }
    throw NotPositiveDefinite(
        "PathSimulator: joint covariance not positive definite after maximum jitter");
}

SamplePath PathSimulator::draw(const SeedSpec& seed) const {
    const CounterRng rng(seed.base_seed, seed.replicate_index);
    Eigen::VectorXd z(2 * n_);
    for (int k = 0; k < 2 * n_; ++k) z[k] = rng.normal(static_cast<std::uint64_t>(k));
    const Eigen::VectorXd x = chol_.triangularView<Eigen::Lower>() * z;
    SamplePath path;
    path.n = n_;
    path.x1 = x.head(n_);
    path.x2 = x.tail(n_);
    return path;
}

SamplePath simulate_path(const CovarianceModel& model, int n, const SeedSpec& seed) {
    return PathSimulator(model, n).draw(seed);
}

std::vector<SamplePath> simulate_ensemble(const CovarianceModel& model, int n,
                                          int replications, std::uint64_t base_seed) {
    if (replications < 1)
        throw std::domain_error("simulate_ensemble: replications must be >= 1");
    const PathSimulator sim(model, n);
    std::vector<SamplePath> out;
    out.reserve(replications);
    for (int r = 0; r < replications; ++r)
        out.push_back(sim.draw({base_seed, static_cast<std::uint64_t>(r)}));
    return out;
}

} // namespace bifrac
