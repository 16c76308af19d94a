#pragma once

namespace bifrac {

/// Gamma function for positive real arguments.
/// Throws std::domain_error for x <= 0 and std::overflow_error for x > 170.
double gamma_fn(double x);

/// Modified Bessel function of the second kind K_nu(x) for real order
/// nu in (0, 3] and x > 0.
///
/// Small arguments (x <= 2) use Temme's series; larger arguments use the
/// Steed continued-fraction evaluation. Orders above 1/2 are reached by the
/// standard upward recurrence. Near-integer orders are evaluated at the
/// integer limit.
double bessel_k(double nu, double x);

} // namespace bifrac
