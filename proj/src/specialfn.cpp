#include "bifrac/specialfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bifrac {

namespace {

constexpr double kEps = 1.0e-16;
constexpr int kMaxIter = 1000;

// Leading Taylor coefficients of 1/Gamma(z) (Abramowitz & Stegun 6.1.34).
constexpr double kC2 = 0.57721566490153286;  // Euler's gamma
constexpr double kC3 = -0.65587807152025388;
constexpr double kC4 = -0.04200263503409524;
constexpr double kC5 = 0.16653861138229149;
constexpr double kC6 = -0.04219773455554433;

// Temme's auxiliary functions for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// The direct quotient cancels near mu = 0, so a short Taylor branch takes
// over there.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl,
                  double& gammi) {
    if (std::abs(mu) < 1.0e-3) {
        const double mu2 = mu * mu;
        gam1 = -(kC2 + kC4 * mu2 + kC6 * mu2 * mu2);
        gam2 = 1.0 + kC3 * mu2 + kC5 * mu2 * mu2;
    } else {
        const double gp = 1.0 / std::tgamma(1.0 + mu);
        const double gm = 1.0 / std::tgamma(1.0 - mu);
        gam1 = (gm - gp) / (2.0 * mu);
        gam2 = (gm + gp) / 2.0;
    }
    gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
    gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2 and 0 < x <= 2 (Temme's series).
void bessel_k_temme(double mu, double x, double& kmu, double& k1) {
    const double pimu = M_PI * mu;
    const double fact = (std::abs(pimu) < 1.0e-12) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x / 2.0);
    double e = mu * d;
    const double fact2 = (std::abs(e) < 1.0e-12) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x * x * 0.25;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: series failed to converge");
    kmu = sum;
    k1 = sum1 * (2.0 / x);
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2 and x > 2 (Steed's continued
// fraction CF2).
void bessel_k_steed(double mu, double x, double& kmu, double& k1) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: CF2 failed to converge");
    h = a1 * h;
    kmu = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) / s;
    k1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: argument must be positive, got " +
                                std::to_string(x));
    if (x > 170.0)
        throw std::overflow_error("gamma_fn: overflow for x > 170, got " +
                                  std::to_string(x));
    return std::tgamma(x);
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_k: argument must be positive, got " +
                                std::to_string(x));
    if (!(nu > 0.0 && nu <= 3.0))
        throw std::domain_error("bessel_k: order must lie in (0, 3], got " +
                                std::to_string(nu));
    // integer-order limit; the small-x series has a removable singularity
    if (std::abs(nu - std::round(nu)) < 1.0e-8) nu = std::round(nu);

    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;  // in [-1/2, 1/2]
    double kmu, k1;
    if (x <= 2.0)
        bessel_k_temme(mu, x, kmu, k1);
    else
        bessel_k_steed(mu, x, kmu, k1);
    const double xi2 = 2.0 / x;
    for (int i = 1; i <= nl; ++i) {
        const double kt = (mu + i) * xi2 * k1 + kmu;
        kmu = k1;
        k1 = kt;
    }
    return kmu;
}

} // namespace bifrac
