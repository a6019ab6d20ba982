#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heis/measure.hpp"

namespace heis {

/// Arguments of the distortion coefficient tau_{K,N}^{(t)}(theta). theta may
/// be +infinity.
struct DistortionArgs {
    double K = 0.0;
    double N = 1.0;
    bool N_infinite = false;
    double t = 0.0;
    double theta = 0.0;
};

struct BMReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double vol0 = 0.0;
    double vol1 = 0.0;
    double volt = 0.0;
    double K = 0.0;
    double N = 1.0;
    bool N_infinite = false;
    double t = 0.0;
    double Theta = 0.0;
};

struct TmcpReport {
    double t = 0.0;
    double N = 1.0;
    double w_max = 0.0;
    bool found = false;
    /// Witness with tmcp_jacobian_ratio(t, w) < t^N, nearest to 0 on the scan.
    std::optional<double> witness_w;
    double ratio = 0.0;
    double bound = 0.0;
    std::string note;
};

struct MidpointReport {
    /// |det| of the central-difference Jacobian of the midpoint map.
    double numeric = 0.0;
    /// |det D exp^(-1/2)| / |det D exp^(-1)| at (2, 0, 0).
    double analytic = 0.0;
    double step = 0.0;
    bool step_warning = false;
    /// |det| of the central-difference Jacobian of the geodesic inversion
    /// about the origin at (-1, 0, 0).
    double inversion_det = 0.0;
    /// 2^3 times the numeric midpoint determinant.
    double juillet_bound = 0.0;
    /// Square root of the volume ratio under the inversion.
    double bm_rhs = 0.0;
    bool contradiction = false;
    std::string message;
};

/// Distortion coefficient for finite N: +infinity when K > 0 and
/// K theta^2 >= (N - 1) pi^2, t when K theta^2 = 0 or K < 0 = N - 1, and
/// the sin or sinh ratio branch otherwise. For theta = +infinity and K < 0
/// the value is the limit 0 for t < 1 and 1 at t = 1.
/// Throws std::invalid_argument for infinite N, N < 1, t outside [0, 1] or
/// negative theta.
double distortion_tau(const DistortionArgs& args);

/// |det D exp^(t-1)| / |det D exp^(-1)| at a parameter with curvature w,
/// equal to (1 - t) g(w (1 - t) / 2) / g(w / 2) and to (1 - t)^5 at w = 0.
/// Throws std::invalid_argument unless 0 < t < 1.
double tmcp_jacobian_ratio(double t, double w);

/// Scans w = -1/2, -1, ... down to -w_max for a parameter where the
/// Jacobian ratio drops below t^N. Throws std::invalid_argument unless
/// 0 < t < 1, N >= 1 and w_max > 0.
TmcpReport tmcp_violation_report(double t, double N, double w_max);

/// Determinant of the midpoint map toward (1, 0, 0) at (-1, 0, 0) by central
/// differences with the given step, compared against the exact value 1/32.
/// Throws std::invalid_argument for step <= 0; steps above 1e-2 set
/// step_warning.
MidpointReport midpoint_det_check(double step);

/// Both sides of the Brunn-Minkowski inequality. For finite N:
/// volt^(1/N) >= tau^(1-t) vol0^(1/N) + tau^(t) vol1^(1/N). For infinite N:
/// log volt >= (1 - t) log vol0 + t log vol1 + K t (1 - t) Theta^2 / 2.
/// Throws std::invalid_argument for nonpositive volumes.
BMReport bm_inequality_eval(double vol0, double vol1, double volt, double K, double N, bool N_infinite, double t,
                            double Theta);

/// unit_diamond_volume(w) for each w.
std::vector<ScanPoint> appendix_limit_scan(const std::vector<double>& w_values);

}  // namespace heis
