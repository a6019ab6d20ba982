#include "heis/minkowski_iso.hpp"

#include <cmath>
#include <stdexcept>

namespace heis {

PlanarPoint Boost::apply(const PlanarPoint& p) const noexcept
{
    return {(a * p.x - b * p.y) / T, (-b * p.x + a * p.y) / T};
}

PlanarPoint Boost::apply_inverse(const PlanarPoint& p) const noexcept
{
    return {(a * p.x + b * p.y) / T, (b * p.x + a * p.y) / T};
}

double Boost::determinant() const noexcept
{
    return (a - b) * (a + b) / (T * T);
}

IsoCase classify(const IsoProblem& prob) noexcept
{
    const double a = prob.a;
    const double b = prob.b;
    const double c = prob.c;
    if (!(a > 0.0)) {
        return IsoCase::empty;
    }
    const double scale = a * a + b * b + 4.0 * std::abs(c);
    if (std::abs(a - std::abs(b)) <= kNullTolerance * a) {
        return std::abs(c) <= kNullTolerance * scale ? IsoCase::broken_null : IsoCase::empty;
    }
    const double form = (b - a) * (b + a) + 4.0 * std::abs(c);
    if (form > kNullTolerance * scale) {
        return IsoCase::empty;
    }
    if (c == 0.0) {
        return IsoCase::timelike_line;
    }
    if (form >= -kNullTolerance * scale) {
        return IsoCase::broken_null;
    }
    return IsoCase::hyperbola;
}

BoostToAxis boost_to_axis(double a, double b)
{
    if (!(a > std::abs(b))) {
        throw std::invalid_argument("boost_to_axis: requires a > |b|");
    }
    const double T = std::sqrt((a - b) * (a + b));
    return {Boost{a, b, T}, T};
}

namespace {

/// k^2 = y_C^2 - T^2/4 factored to avoid cancellation near |y_C| = T/2.
double vertex_k(double y_C, double T)
{
    const double abs_y = std::abs(y_C);
    const double half = 0.5 * T;
    return std::sqrt(std::max(0.0, (abs_y - half) * (abs_y + half)));
}

void check_vertex(double y_C, double T, const char* who)
{
    if (!(T > 0.0) || !std::isfinite(y_C) || std::abs(y_C) < 0.5 * T) {
        throw std::invalid_argument(std::string(who) + ": requires T > 0 and |y_C| >= T/2");
    }
}

/// h(s) = s sqrt(1 + s^2) - asinh(s), the normalized hyperbola area.
double area_shape(double s)
{
    if (s < 0.5) {
        // h(s) = 2 * sum binom(-1/2, n) s^(2n+3) / (2n+3)
        const double s2 = s * s;
        double coeff = 1.0;
        double power = s * s2;
        double sum = 0.0;
        for (int n = 0; n < 60; ++n) {
            const double term = coeff * power / (2.0 * n + 3.0);
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) {
                break;
            }
            coeff *= -(2.0 * n + 1.0) / (2.0 * n + 2.0);
            power *= s2;
        }
        return 2.0 * sum;
    }
    return s * std::sqrt(1.0 + s * s) - std::asinh(s);
}

}  // namespace

double hyperbola_ordinate(double y_C, double T, double x)
{
    check_vertex(y_C, T, "hyperbola_ordinate");
    if (!(x >= 0.0 && x <= T)) {
        throw std::invalid_argument("hyperbola_ordinate: x must lie in [0, T]");
    }
    const double abs_y = std::abs(y_C);
    const double chord = x * (T - x);
    const double root = std::sqrt(std::max(0.0, (abs_y * abs_y) - chord));
    const double value = chord / (abs_y + root);
    return std::copysign(value, y_C);
}

double hyperbola_area(double y_C, double T)
{
    check_vertex(y_C, T, "hyperbola_area");
    const double k = vertex_k(y_C, T);
    double magnitude = 0.0;
    if (k == 0.0) {
        magnitude = 0.25 * T * T;
    } else {
        const double s = 0.5 * T / k;
        magnitude = s < 0.5 ? k * k * area_shape(s) : 0.5 * T * std::abs(y_C) - k * k * std::asinh(s);
    }
    return std::copysign(magnitude, y_C);
}

double hyperbola_length(double y_C, double T)
{
    check_vertex(y_C, T, "hyperbola_length");
    const double k = vertex_k(y_C, T);
    if (k == 0.0) {
        return 0.0;
    }
    return 2.0 * k * std::asinh(0.5 * T / k);
}

double solve_vertex(double T, double c)
{
    if (!(T > 0.0) || !(c != 0.0) || !(std::abs(c) < 0.25 * T * T)) {
        throw std::invalid_argument("solve_vertex: requires T > 0 and 0 < |c| < T^2/4");
    }
    if (c < 0.0) {
        return -solve_vertex(T, -c);
    }
    constexpr double kMaxVertex = 1e300;
    double lo = 0.5 * T;
    double hi = T;
    while (hyperbola_area(hi, T) >= c) {
        lo = hi;
        if (hi >= kMaxVertex) {
            return hi;
        }
        hi = std::min(2.0 * hi, kMaxVertex);
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (hyperbola_area(mid, T) >= c) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double err_lo = std::abs(hyperbola_area(lo, T) - c);
    const double err_hi = std::abs(hyperbola_area(hi, T) - c);
    return err_lo <= err_hi ? lo : hi;
}

IsoSolution solve(const IsoProblem& prob)
{
    IsoSolution sol;
    sol.kind = classify(prob);
    if (sol.kind == IsoCase::empty) {
        return sol;
    }
    if (prob.a > std::abs(prob.b)) {
        const BoostToAxis axis = boost_to_axis(prob.a, prob.b);
        sol.boost = axis.boost;
        sol.T = axis.T;
    }
    switch (sol.kind) {
    case IsoCase::timelike_line:
        sol.max_length = sol.T;
        break;
    case IsoCase::broken_null:
        sol.max_length = 0.0;
        break;
    case IsoCase::hyperbola: {
        // The integral of the graph over [0, T] equals minus the lifted area.
        const double target = -prob.c;
        const double limit = 0.25 * sol.T * sol.T;
        const double y_C = std::abs(target) < limit ? solve_vertex(sol.T, target)
                                                    : std::copysign(0.5 * sol.T, target);
        sol.y_C = y_C;
        sol.max_length = hyperbola_length(y_C, sol.T);
        break;
    }
    case IsoCase::empty:
        break;
    }
    return sol;
}

PlanarCurve sample_solution(const IsoSolution& sol, const IsoProblem& prob, std::size_t n)
{
    if (sol.kind == IsoCase::empty) {
        throw NoSolutionError("sample_solution: the problem has no admissible curve");
    }
    if (n < 2) {
        throw std::invalid_argument("sample_solution: at least two samples are required");
    }
    PlanarCurve curve;
    curve.times.resize(n);
    curve.points.resize(n);
    const double last = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        curve.times[i] = static_cast<double>(i) / last;
    }

    const bool straight = sol.kind == IsoCase::timelike_line || !sol.boost.has_value();
    if (straight) {
        for (std::size_t i = 0; i < n; ++i) {
            curve.points[i] = {prob.a * curve.times[i], prob.b * curve.times[i]};
        }
    } else if (sol.kind == IsoCase::broken_null) {
        const double T = sol.T;
        const double side = prob.c > 0.0 ? -1.0 : 1.0;
        const std::size_t knee = (n - 1) / 2;
        for (std::size_t i = 0; i < n; ++i) {
            double x = 0.0;
            if (knee == 0) {
                x = T * curve.times[i];
            } else if (i <= knee) {
                x = 0.5 * T * static_cast<double>(i) / static_cast<double>(knee);
            } else {
                x = 0.5 * T + 0.5 * T * static_cast<double>(i - knee) / static_cast<double>(n - 1 - knee);
            }
            const double f = side * std::min(x, std::abs(x - T));
            curve.points[i] = sol.boost->apply_inverse({x, f});
        }
    } else {
        const double T = sol.T;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = i + 1 == n ? T : T * curve.times[i];
            curve.points[i] = sol.boost->apply_inverse({x, hyperbola_ordinate(*sol.y_C, T, x)});
        }
    }
    curve.points.front() = {0.0, 0.0};
    curve.points.back() = {prob.a, prob.b};
    return curve;
}

std::string to_string(IsoCase kind)
{
    switch (kind) {
    case IsoCase::empty:
        return "empty";
    case IsoCase::timelike_line:
        return "timelike_line";
    case IsoCase::broken_null:
        return "broken_null";
    case IsoCase::hyperbola:
        return "hyperbola";
    }
    return "empty";
}

}  // namespace heis
