#pragma once

#include <optional>
#include <string>

#include "heis/heisenberg_core.hpp"

namespace heis {

/// Planar Lorentzian isoperimetric problem: causal curves from (0, 0) to
/// (a, b) enclosing signed area c with the closing chord. The area
/// convention is the one of the horizontal lift, so a curve solving the
/// problem lifts to a curve ending at (a, b, c).
struct IsoProblem {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Future-preserving Lorentz boost with matrix [[a, -b], [-b, a]] / T,
/// T = sqrt(a^2 - b^2). It maps (a, b) to (T, 0).
struct Boost {
    double a = 1.0;
    double b = 0.0;
    double T = 1.0;

    PlanarPoint apply(const PlanarPoint& p) const noexcept;
    PlanarPoint apply_inverse(const PlanarPoint& p) const noexcept;
    double determinant() const noexcept;
};

enum class IsoCase { empty, timelike_line, broken_null, hyperbola };

struct IsoSolution {
    IsoCase kind = IsoCase::empty;
    double T = 0.0;
    /// Vertex ordinate of the hyperbola graph over [0, T] in axis-aligned
    /// coordinates. Present only for the hyperbola case.
    std::optional<double> y_C;
    /// Absent when a = |b|, where no boost to the axis exists.
    std::optional<Boost> boost;
    double max_length = 0.0;
};

struct BoostToAxis {
    Boost boost;
    double T = 0.0;
};

IsoCase classify(const IsoProblem& prob) noexcept;

/// Throws std::invalid_argument unless a > |b|.
BoostToAxis boost_to_axis(double a, double b);

/// f(x) = y_C - sgn(y_C) sqrt((x - T/2)^2 + y_C^2 - T^2/4) on [0, T].
/// Throws std::invalid_argument when |y_C| < T/2 or x is outside [0, T].
double hyperbola_ordinate(double y_C, double T, double x);

/// Integral of f over [0, T] in closed form.
/// Throws std::invalid_argument when |y_C| < T/2.
double hyperbola_area(double y_C, double T);

/// Lorentzian arclength of the graph of f over [0, T].
double hyperbola_length(double y_C, double T);

/// Vertex y_C with hyperbola_area(y_C, T) = c, by bisection.
/// Throws std::invalid_argument unless 0 < |c| < T^2/4.
double solve_vertex(double T, double c);

IsoSolution solve(const IsoProblem& prob);

/// n samples of the maximizer from (0, 0) to (a, b). Throws
/// NoSolutionError for the empty case and std::invalid_argument for n < 2.
PlanarCurve sample_solution(const IsoSolution& sol, const IsoProblem& prob, std::size_t n);

std::string to_string(IsoCase kind);

}  // namespace heis
