#include "bifrac/covariance.hpp"

#include "bifrac/specialfn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bifrac {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::domain_error(what);
}

// 1-D Matern spectral density with variance scale s:
// f(xi) = s * Gamma(nu+1/2)/(Gamma(nu) sqrt(pi)) * a^{2nu} (a^2+xi^2)^{-nu-1/2}
double matern_spectral(double xi, double nu, double a, double s) {
    const double norm =
        gamma_fn(nu + 0.5) / (gamma_fn(nu) * std::sqrt(M_PI)) * std::pow(a, 2.0 * nu);
    return s * norm * std::pow(a * a + xi * xi, -nu - 0.5);
}

}  // namespace

void LocalExpansion::validate_fields() const {
    require(alpha11 > 0.0 && alpha11 < 2.0, "LocalExpansion: alpha11 must be in (0,2)");
    require(alpha22 > 0.0 && alpha22 < 2.0, "LocalExpansion: alpha22 must be in (0,2)");
    require(alpha12 > 0.0, "LocalExpansion: alpha12 must be positive");
    require(c11 > 0.0 && c22 > 0.0 && c12 > 0.0, "LocalExpansion: c coefficients must be positive");
    require(sigma1_sq > 0.0 && sigma2_sq > 0.0, "LocalExpansion: variances must be positive");
    require(std::abs(rho) < 1.0, "LocalExpansion: |rho| must be < 1");
    require(beta11 > 0.0 && beta22 > 0.0 && beta12 > 0.0, "LocalExpansion: beta exponents must be positive");
}

bool LocalExpansion::equality_case() const {
    // the case split is structural, not numeric
    return std::abs((alpha11 + alpha22) / 2.0 - alpha12) < 1.0e-12;
}

ValidityResult check_validity(const LocalExpansion& exp) {
    exp.validate_fields();
    if (exp.rho == 0.0) return {true, ""};  // independent components
    const double mean = (exp.alpha11 + exp.alpha22) / 2.0;
    if (mean < exp.alpha12 && !exp.equality_case()) return {true, ""};
    if (exp.equality_case()) {
        const double lhs = exp.c12 * exp.c12 * exp.rho * exp.rho * exp.sigma1_sq * exp.sigma2_sq;
        const double rhs = exp.c11 * exp.c22;
        if (lhs < rhs) return {true, ""};
        std::ostringstream os;
        os << "equality case requires c12^2 rho^2 s1^2 s2^2 < c11 c22, got " << lhs
           << " >= " << rhs;
        return {false, os.str()};
    }
    std::ostringstream os;
    os << "(alpha11+alpha22)/2 = " << mean << " exceeds alpha12 = " << exp.alpha12;
    return {false, os.str()};
}

double matern_correlation(double h, double nu, double a) {
    require(a > 0.0, "matern_correlation: scale must be positive");
    require(nu > 0.0 && nu <= 3.0, "matern_correlation: nu must be in (0,3]");
    const double x = a * std::abs(h);
    if (x == 0.0) return 1.0;
    if (x > 700.0) return 0.0;  // K_nu underflows
    return std::pow(2.0, 1.0 - nu) / gamma_fn(nu) * std::pow(x, nu) * bessel_k(nu, x);
}

double matern_b1(double nu, double a) {
    require(nu > 0.0 && nu < 1.0, "matern_b1: nu must be in (0,1)");
    require(a > 0.0, "matern_b1: scale must be positive");
    // stated for a=1; Matern depends on h only through a*h, so b1 scales as a^{2nu}
    return gamma_fn(1.0 - nu) / (std::pow(2.0, 2.0 * nu) * gamma_fn(1.0 + nu)) *
           std::pow(a, 2.0 * nu);
}

LocalExpansion local_expansion(const MaternParams& p) {
    require(p.nu11 > 0.0 && p.nu11 < 1.0, "local_expansion: nu11 must be in (0,1)");
    require(p.nu22 > 0.0 && p.nu22 < 1.0, "local_expansion: nu22 must be in (0,1)");
    require(p.nu12 > 0.0 && p.nu12 < 1.0, "local_expansion: nu12 must be in (0,1)");
    require(p.sigma1 > 0.0 && p.sigma2 > 0.0, "local_expansion: sigmas must be positive");
    LocalExpansion e;
    e.sigma1_sq = p.sigma1 * p.sigma1;
    e.sigma2_sq = p.sigma2 * p.sigma2;
    e.rho = p.rho;
    e.alpha11 = 2.0 * p.nu11;
    e.alpha22 = 2.0 * p.nu22;
    e.alpha12 = 2.0 * p.nu12;
    e.c11 = e.sigma1_sq * matern_b1(p.nu11, p.a11);
    e.c22 = e.sigma2_sq * matern_b1(p.nu22, p.a22);
    e.c12 = matern_b1(p.nu12, p.a12);  // rho s1 s2 factored out of C12
    e.beta11 = 2.0 - 2.0 * p.nu11;
    e.beta22 = 2.0 - 2.0 * p.nu22;
    e.beta12 = 2.0 - 2.0 * p.nu12;
    const ValidityResult v = check_validity(e);
    if (!v.valid) throw std::domain_error("local_expansion: invalid model: " + v.reason);
    return e;
}

ValidityResult check_matern_validity(const MaternParams& p, int freq_grid_size) {
    require(freq_grid_size >= 128, "check_matern_validity: freq_grid_size must be >= 128");
    const double s1 = p.sigma1 * p.sigma1;
    const double s2 = p.sigma2 * p.sigma2;
    if (p.rho != 0.0) {
        // tail exponents: f12^2 decays as xi^{-4 nu12 - 2}, f11 f22 as
        // xi^{-2(nu11+nu22) - 2}
        if (2.0 * p.nu12 < p.nu11 + p.nu22 - 1.0e-12) {
            std::ostringstream os;
            os << "spectral tail: 2 nu12 = " << 2.0 * p.nu12 << " < nu11 + nu22 = "
               << p.nu11 + p.nu22;
            return {false, os.str()};
        }
    }
    const double lo = std::log(1.0e-4);
    const double hi = std::log(1.0e6);
    for (int i = 0; i < freq_grid_size; ++i) {
        const double xi = std::exp(lo + (hi - lo) * i / (freq_grid_size - 1));
        const double f11 = matern_spectral(xi, p.nu11, p.a11, s1);
        const double f22 = matern_spectral(xi, p.nu22, p.a22, s2);
        const double f12 = matern_spectral(xi, p.nu12, p.a12, p.sigma1 * p.sigma2);
        const double lhs = p.rho * p.rho * f12 * f12;
        if (lhs > f11 * f22 * (1.0 + 1.0e-12)) {
            std::ostringstream os;
            os << "spectral inequality violated at frequency " << xi << ": rho^2 f12^2 = "
               << lhs << " > f11 f22 = " << f11 * f22;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

double trajectory_dimension(double alpha11, double alpha22) {
    require(alpha11 > 0.0 && alpha11 < 2.0 && alpha22 > 0.0 && alpha22 < 2.0,
            "trajectory_dimension: exponents must be in (0,2)");
    const double a1 = std::min(alpha11, alpha22);
    const double a2 = std::max(alpha11, alpha22);
    return std::min((2.0 + a2 - a1) / a2, 3.0 - (a1 + a2) / 2.0);
}

double component_graph_dimension(double alpha) {
    require(alpha > 0.0 && alpha < 2.0, "component_graph_dimension: alpha must be in (0,2)");
    return 2.0 - alpha / 2.0;
}

MaternModel::MaternModel(const MaternParams& params)
    : CovarianceModel(local_expansion(params)), params_(params) {
    const ValidityResult v = check_matern_validity(params);
    if (!v.valid) throw std::domain_error("MaternModel: invalid model: " + v.reason);
}

Eigen::Matrix2d MaternModel::evaluate(double t) const {
    const auto& p = params_;
    Eigen::Matrix2d c;
    c(0, 0) = p.sigma1 * p.sigma1 * matern_correlation(t, p.nu11, p.a11);
    c(1, 1) = p.sigma2 * p.sigma2 * matern_correlation(t, p.nu22, p.a22);
    c(0, 1) = c(1, 0) =
        p.rho * p.sigma1 * p.sigma2 * matern_correlation(t, p.nu12, p.a12);
    return c;
}

GenericModel::GenericModel(Evaluator eval, LocalExpansion exp)
    : CovarianceModel(std::move(exp)), eval_(std::move(eval)) {
    exp_.validate_fields();
    const ValidityResult v = check_validity(exp_);
    if (!v.valid) throw std::domain_error("GenericModel: invalid expansion: " + v.reason);

    // cross-check declared small-lag behavior against the evaluator; the
    // probe sits at 1e-4 so the O(h^beta) remainder stays inside the tolerance
    // even for smoothness near 1
    const double h = 1.0e-4;
    const double tol = 1.0e-2;
    const Eigen::Matrix2d c0 = eval_(0.0);
    const Eigen::Matrix2d ch = eval_(h);
    const double d11 = (c0(0, 0) - ch(0, 0)) / (exp_.c11 * std::pow(h, exp_.alpha11));
    const double d22 = (c0(1, 1) - ch(1, 1)) / (exp_.c22 * std::pow(h, exp_.alpha22));
    if (std::abs(d11 - 1.0) > tol || std::abs(d22 - 1.0) > tol)
        throw std::domain_error("GenericModel: evaluator disagrees with declared marginal expansion");
    if (exp_.rho != 0.0) {
        const double scale = exp_.rho * std::sqrt(exp_.sigma1_sq * exp_.sigma2_sq);
        const double d12 = (c0(0, 1) - ch(0, 1)) / (scale * exp_.c12 * std::pow(h, exp_.alpha12));
        if (std::abs(d12 - 1.0) > tol)
            throw std::domain_error("GenericModel: evaluator disagrees with declared cross expansion");
    }
}

Eigen::Matrix2d GenericModel::evaluate(double t) const { return eval_(t); }

} // namespace bifrac
