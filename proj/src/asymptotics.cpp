#include "bifrac/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace bifrac {

namespace {

double filtered_abs_sum(int h, int u, int v, double alpha) {
    double s = 0.0;
    for (int j = -1; j <= 1; ++j)
        for (int k = -1; k <= 1; ++k)
            s += kFilterCoeffs[j + 1] * kFilterCoeffs[k + 1] *
                 std::pow(std::abs(static_cast<double>(h + k * v - j * u)), alpha);
    return s;
}

struct EntrySpec {
    double alpha = 0.0;  // exponent of the sigma0 form; 0 marks the zero function
    double c = 0.0;
};

EntrySpec entry_spec(int i, int j, const LocalExpansion& exp) {
    if (i == 1 && j == 1) return {exp.alpha11, exp.c11};
    if (i == 2 && j == 2) return {exp.alpha22, exp.c22};
    if (!exp.equality_case() || exp.rho == 0.0) return {0.0, 0.0};
    return {exp.alpha12,
            exp.rho * std::sqrt(exp.sigma1_sq * exp.sigma2_sq) * exp.c12};
}

}  // namespace

double sigma0_marginal(int h, int u, int v, double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::domain_error("sigma0_marginal: alpha must be in (0,2)");
    if (!(c > 0.0)) throw std::domain_error("sigma0_marginal: c must be positive");
    return -c * filtered_abs_sum(h, u, v, alpha);
}

double sigma0_cross(int h, int u, int v, const LocalExpansion& exp) {
    const EntrySpec spec = entry_spec(1, 2, exp);
    if (spec.c == 0.0) return 0.0;
    return -spec.c * filtered_abs_sum(h, u, v, spec.alpha);
}

Phi0Entry phi0_entry(int u, int v, int i, int j, const LocalExpansion& exp, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("phi0_entry: tol must be positive");
    const EntrySpec spec = entry_spec(i, j, exp);
    if (spec.c == 0.0) return {0.0, 0, 0.0};  // strict-case cross entry

    const double abar = (i == j) ? spec.alpha : exp.alpha12;
    const double decay = abar - 4.0;  // sigma0 = O(|h|^{abar-4})

    auto sigma = [&](int h) { return -spec.c * filtered_abs_sum(h, u, v, spec.alpha); };

    // grow H until the analytic tail bound (integral comparison for the
    // |h|^{2 abar - 8} series) drops below tol
    int H = std::max(16, 8 * std::max(u, v));
    double bound = 0.0;
    for (;;) {
        double cstar = 0.0;
        for (int h = H - 3; h <= H; ++h)
            cstar = std::max(cstar, std::abs(sigma(h)) / std::pow(static_cast<double>(h), decay));
        bound = 4.0 * cstar * cstar * std::pow(static_cast<double>(H), 2.0 * abar - 7.0) /
                (7.0 - 2.0 * abar);
        if (bound <= tol || H >= (1 << 24)) break;
        H *= 2;
    }

    double sum = 0.0;
    for (int h = -H; h <= H; ++h) {
        const double s = sigma(h);
        sum += s * s;
    }
    return {2.0 * sum, H, bound};
}

Phi0Matrix phi0_matrix(const LocalExpansion& exp, int m, double tol) {
    exp.validate_fields();
    if (m < 1) throw std::domain_error("phi0_matrix: m must be >= 1");
    Phi0Matrix out;
    out.m = m;
    out.matrix = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (int i = 1; i <= 2; ++i) {
        for (int j = i; j <= 2; ++j) {
            for (int u = 1; u <= m; ++u) {
                for (int v = (i == j) ? u : 1; v <= m; ++v) {
                    const Phi0Entry e = phi0_entry(u, v, i, j, exp, tol);
                    out.matrix((i - 1) * m + u - 1, (j - 1) * m + v - 1) = e.value;
                    out.matrix((j - 1) * m + v - 1, (i - 1) * m + u - 1) = e.value;
                    out.max_truncation = std::max(out.max_truncation, e.truncation);
                    out.max_tail_bound = std::max(out.max_tail_bound, e.tail_bound);
                }
            }
        }
    }
    return out;
}

double tau(int u, double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("tau: alpha must be in (0,2)");
    if (!(c > 0.0)) throw std::domain_error("tau: c must be positive");
    return c * (8.0 - std::pow(2.0, alpha + 1.0)) * std::pow(static_cast<double>(u), alpha);
}

double psi_rate(double x1, double x2) {
    return std::min({1.0 + x1, 1.0 + x2, x1 + x2});
}

AsymptoticLaw asymptotic_law(const LocalExpansion& exp, const WeightVector& L1,
                             const WeightVector& L2, double tol) {
    if (L1.m() != L2.m())
        throw std::domain_error("asymptotic_law: weight vectors must share m");
    const int m = L1.m();
    const Phi0Matrix phi = phi0_matrix(exp, m, tol);

    Eigen::VectorXd lt1(m), lt2(m);
    for (int u = 1; u <= m; ++u) {
        lt1[u - 1] = L1.L[u - 1] / tau(u, exp.alpha11, exp.c11);
        lt2[u - 1] = L2.L[u - 1] / tau(u, exp.alpha22, exp.c22);
    }

    AsymptoticLaw law;
    law.covariance(0, 0) = lt1.dot(phi.block(1, 1) * lt1);
    law.covariance(1, 1) = lt2.dot(phi.block(2, 2) * lt2);
    law.covariance(0, 1) = law.covariance(1, 0) = lt1.dot(phi.block(1, 2) * lt2);
    const double denom = std::sqrt(law.covariance(0, 0) * law.covariance(1, 1));
    law.correlation = denom > 0.0 ? law.covariance(0, 1) / denom : 0.0;
    return law;
}

RateExponents rate_exponents(const LocalExpansion& exp) {
    exp.validate_fields();
    RateExponents r;
    r.bias1 = std::min(1.0, exp.beta11);
    r.bias2 = std::min(1.0, exp.beta22);
    r.mse11 = std::min(1.0, psi_rate(exp.beta11, exp.beta11));
    r.mse22 = std::min(1.0, psi_rate(exp.beta22, exp.beta22));
    if (exp.equality_case() && exp.rho != 0.0) {
        r.cross = std::min(1.0, psi_rate(exp.beta11, exp.beta22));
        r.cross_strict_prediction = r.cross;
    } else {
        // cross term decays faster than 1/n; the leading order picks up the
        // extra n^{alpha11+alpha22-2 alpha12} factor of the cross increments
        r.cross_faster_than_n1 = true;
        const double gap = 2.0 * exp.alpha12 - exp.alpha11 - exp.alpha22;
        r.cross = 1.0;
        r.cross_strict_prediction =
            std::min(1.0 + gap, psi_rate(exp.beta11, exp.beta22));
    }
    return r;
}

} // namespace bifrac
