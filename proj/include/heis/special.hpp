#pragma once

namespace heis::special {

/// sinh(x) - x without cancellation for small |x|.
double sinh_minus_x(double x) noexcept;

/// sinh(x) / x, equal to 1 at x = 0.
double sinhc(double x) noexcept;

/// (cosh(x) - 1) / x, equal to 0 at x = 0.
double cosh_m1_over_x(double x) noexcept;

/// (sinh(x) - x) / x^2, equal to 0 at x = 0.
double sinh_minus_x_over_x2(double x) noexcept;

/// x cosh(x) - sinh(x) without cancellation for small |x|.
double x_cosh_minus_sinh(double x) noexcept;

/// g(x) / x^4 with g(x) = sinh(x) (x cosh(x) - sinh(x)); equals 1/3 at 0.
double jacobian_kernel(double x) noexcept;

/// log g(x) for x != 0, finite for arguments far beyond the overflow
/// threshold of sinh.
double log_jacobian_g(double x) noexcept;

/// x / tanh(x), equal to 1 at x = 0.
double x_over_tanh(double x) noexcept;

/// x / sinh(x), equal to 1 at x = 0 and finite for large |x|.
double x_over_sinh(double x) noexcept;

/// log(2 sinh(x)) for x > 0 without overflow.
double log_two_sinh(double x) noexcept;

}  // namespace heis::special
