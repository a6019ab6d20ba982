#include "heis/special.hpp"

#include <cmath>

namespace heis::special {

namespace {

constexpr double kSeriesCutoff = 1.0;

/// Sum of x^(2k+1) c_k over k >= 1 where c_k = weight(k) / (2k+1)!.
template <class Weight>
double odd_series(double x, Weight weight) noexcept
{
    const double x2 = x * x;
    double power = x;
    double factorial = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 40; ++k) {
        power *= x2;
        factorial *= static_cast<double>((2 * k) * (2 * k + 1));
        const double term = weight(k) * power / factorial;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

}  // namespace

double sinh_minus_x(double x) noexcept
{
    if (std::abs(x) < kSeriesCutoff) {
        return odd_series(x, [](int) { return 1.0; });
    }
    return std::sinh(x) - x;
}

double sinhc(double x) noexcept
{
    if (std::abs(x) < 1e-4) {
        return 1.0 + x * x / 6.0;
    }
    return std::sinh(x) / x;
}

double cosh_m1_over_x(double x) noexcept
{
    if (x == 0.0) {
        return 0.0;
    }
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * (s / x);
}

double sinh_minus_x_over_x2(double x) noexcept
{
    if (x == 0.0) {
        return 0.0;
    }
    if (std::abs(x) < kSeriesCutoff) {
        return sinh_minus_x(x) / x / x;
    }
    return (std::sinh(x) - x) / x / x;
}

double x_cosh_minus_sinh(double x) noexcept
{
    if (std::abs(x) < kSeriesCutoff) {
        return odd_series(x, [](int k) { return static_cast<double>(2 * k); });
    }
    return x * std::cosh(x) - std::sinh(x);
}

double jacobian_kernel(double x) noexcept
{
    if (x == 0.0) {
        return 1.0 / 3.0;
    }
    return sinhc(x) * (x_cosh_minus_sinh(x) / (x * x * x));
}

double log_jacobian_g(double x) noexcept
{
    const double a = std::abs(x);
    if (a < kSeriesCutoff) {
        return 4.0 * std::log(a) + std::log(jacobian_kernel(a));
    }
    const double e2 = std::exp(-2.0 * a);
    const double log_sinh = a - std::log(2.0) + std::log1p(-e2);
    const double log_bracket = a - std::log(2.0) + std::log((a - 1.0) + (a + 1.0) * e2);
    return log_sinh + log_bracket;
}

double x_over_tanh(double x) noexcept
{
    if (std::abs(x) < 1e-4) {
        return 1.0 + x * x / 3.0;
    }
    return x / std::tanh(x);
}

double x_over_sinh(double x) noexcept
{
    const double a = std::abs(x);
    if (a < 1e-4) {
        return 1.0 - x * x / 6.0;
    }
    if (a > 20.0) {
        const double e = std::exp(-a);
        return 2.0 * a * e / (1.0 - e * e);
    }
    return x / std::sinh(x);
}

double log_two_sinh(double x) noexcept
{
    return x + std::log1p(-std::exp(-2.0 * x));
}

}  // namespace heis::special
