#include "heis/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heis/geodesics.hpp"
#include "heis/special.hpp"

namespace heis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// log(g(x) / x^4) with g(x) = sinh(x) (x cosh(x) - sinh(x)).
double log_jacobian_kernel(double x) noexcept
{
    if (std::abs(x) <= 300.0) {
        return std::log(special::jacobian_kernel(x));
    }
    return special::log_jacobian_g(x) - 4.0 * std::log(std::abs(x));
}

using Matrix3 = std::array<std::array<double, 3>, 3>;

double determinant(const Matrix3& m) noexcept
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class Map>
double central_difference_det(const Map& map, const Event& at, double step)
{
    Matrix3 jac{};
    for (int col = 0; col < 3; ++col) {
        Event plus = at;
        Event minus = at;
        double* plus_coord = col == 0 ? &plus.x : col == 1 ? &plus.y : &plus.z;
        double* minus_coord = col == 0 ? &minus.x : col == 1 ? &minus.y : &minus.z;
        *plus_coord += step;
        *minus_coord -= step;
        const Event fp = map(plus);
        const Event fm = map(minus);
        jac[0][col] = (fp.x - fm.x) / (2.0 * step);
        jac[1][col] = (fp.y - fm.y) / (2.0 * step);
        jac[2][col] = (fp.z - fm.z) / (2.0 * step);
    }
    return std::abs(determinant(jac));
}

}  // namespace

double distortion_tau(const DistortionArgs& args)
{
    if (args.N_infinite) {
        throw std::invalid_argument("distortion_tau: N must be finite");
    }
    if (!(args.N >= 1.0) || !std::isfinite(args.N)) {
        throw std::invalid_argument("distortion_tau: N must satisfy N >= 1");
    }
    if (!(args.t >= 0.0 && args.t <= 1.0)) {
        throw std::invalid_argument("distortion_tau: t must lie in [0, 1]");
    }
    if (!(args.theta >= 0.0) || !std::isfinite(args.K)) {
        throw std::invalid_argument("distortion_tau: theta must be nonnegative and K finite");
    }
    const double K = args.K;
    const double N = args.N;
    const double t = args.t;
    const double theta = args.theta;
    if (K == 0.0 || theta == 0.0) {
        return t;
    }
    if (K < 0.0 && N == 1.0) {
        return t;
    }
    if (K > 0.0) {
        if (std::isinf(theta) || K * theta * theta >= (N - 1.0) * std::numbers::pi * std::numbers::pi) {
            return kInf;
        }
        const double a = theta * std::sqrt(K / (N - 1.0));
        return std::pow(t, 1.0 / N) * std::pow(std::sin(t * a) / std::sin(a), 1.0 - 1.0 / N);
    }
    if (std::isinf(theta)) {
        return t == 1.0 ? 1.0 : 0.0;
    }
    if (t == 0.0) {
        return 0.0;
    }
    const double a = theta * std::sqrt(-K / (N - 1.0));
    const double log_ratio = special::log_two_sinh(t * a) - special::log_two_sinh(a);
    return std::pow(t, 1.0 / N) * std::exp((1.0 - 1.0 / N) * log_ratio);
}

double tmcp_jacobian_ratio(double t, double w)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw std::invalid_argument("tmcp_jacobian_ratio: t must lie in (0, 1)");
    }
    const double s = 1.0 - t;
    const double s5 = s * s * s * s * s;
    return s5 * std::exp(log_jacobian_kernel(0.5 * w * s) - log_jacobian_kernel(0.5 * w));
}

TmcpReport tmcp_violation_report(double t, double N, double w_max)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw std::invalid_argument("tmcp_violation_report: t must lie in (0, 1)");
    }
    if (!(N >= 1.0) || !std::isfinite(N)) {
        throw std::invalid_argument("tmcp_violation_report: N must be finite with N >= 1");
    }
    if (!(w_max > 0.0)) {
        throw std::invalid_argument("tmcp_violation_report: w_max must be positive");
    }
    TmcpReport report;
    report.t = t;
    report.N = N;
    report.w_max = w_max;
    report.bound = std::pow(t, N);
    constexpr double kStep = 0.5;
    for (int k = 1; k * kStep <= w_max; ++k) {
        const double w = -k * kStep;
        const double ratio = tmcp_jacobian_ratio(t, w);
        if (ratio < report.bound) {
            report.found = true;
            report.witness_w = w;
            report.ratio = ratio;
            break;
        }
    }
    if (report.found) {
        report.note = "t^N tends to 0 as N grows, so the witness |w| must grow with N";
    } else {
        report.ratio = tmcp_jacobian_ratio(t, -w_max);
        report.note = "inconclusive: no witness with |w| <= w_max";
    }
    return report;
}

MidpointReport midpoint_det_check(double step)
{
    if (!(step > 0.0)) {
        throw std::invalid_argument("midpoint_det_check: step must be positive");
    }
    MidpointReport report;
    report.step = step;
    report.step_warning = step > 1e-2;
    const Event anchor{1.0, 0.0, 0.0};
    const Event start{-1.0, 0.0, 0.0};
    report.numeric =
        central_difference_det([&](const Event& p) { return midpoint_map(anchor, p); }, start, step);
    const GeoParam axis{2.0, 0.0, 0.0};
    report.analytic = std::abs(exp_jacobian_det(axis, -0.5) / exp_jacobian_det(axis, -1.0));
    report.inversion_det =
        central_difference_det([](const Event& p) { return geodesic_inversion(Event{}, p); }, start, step);
    report.juillet_bound = 8.0 * report.numeric;
    report.bm_rhs = std::sqrt(report.inversion_det);
    report.contradiction = report.juillet_bound < report.bm_rhs;
    std::ostringstream msg;
    msg << "2^3 * |det DM| = " << report.juillet_bound << (report.contradiction ? " < " : " >= ") << report.bm_rhs
        << " = sqrt(volume ratio)";
    if (report.contradiction) {
        msg << ": TBM(0, infinity) fails";
    }
    report.message = msg.str();
    return report;
}

BMReport bm_inequality_eval(double vol0, double vol1, double volt, double K, double N, bool N_infinite, double t,
                            double Theta)
{
    if (!(vol0 > 0.0 && vol1 > 0.0 && volt > 0.0)) {
        throw std::invalid_argument("bm_inequality_eval: volumes must be positive");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("bm_inequality_eval: t must lie in [0, 1]");
    }
    BMReport report{0.0, 0.0, false, vol0, vol1, volt, K, N, N_infinite, t, Theta};
    if (N_infinite) {
        report.lhs = std::log(volt);
        report.rhs = (1.0 - t) * std::log(vol0) + t * std::log(vol1) + 0.5 * K * t * (1.0 - t) * Theta * Theta;
    } else {
        const double tau0 = distortion_tau({K, N, false, 1.0 - t, Theta});
        const double tau1 = distortion_tau({K, N, false, t, Theta});
        report.lhs = std::pow(volt, 1.0 / N);
        report.rhs = tau0 * std::pow(vol0, 1.0 / N) + tau1 * std::pow(vol1, 1.0 / N);
    }
    const double tolerance = 1e-12 * std::max(1.0, std::abs(report.rhs));
    report.satisfied = std::isfinite(report.rhs) && report.lhs >= report.rhs - tolerance;
    return report;
}

std::vector<ScanPoint> appendix_limit_scan(const std::vector<double>& w_values)
{
    return growth_ratio_scan(w_values);
}

}  // namespace heis
