#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "heis/minkowski_iso.hpp"
#include "test_support.hpp"

using namespace heis;
using heis::testing::uniform;

namespace {

constexpr double kVertexT2c05 = 1.4859486884073547259;
constexpr double kLengthT2c05 = 1.7940850281792544533;
constexpr double kAreaY3T2 = 0.22741127776021876233;
constexpr double kLengthY3T2 = 1.9605162869370943834;

}  // namespace

TEST_CASE("classification")
{
    CHECK(classify({2, 0, 0}) == IsoCase::timelike_line);
    CHECK(classify({2, 0, 1}) == IsoCase::broken_null);
    CHECK(classify({2, 0, 0.5}) == IsoCase::hyperbola);
    CHECK(classify({2, 0, -0.5}) == IsoCase::hyperbola);
    CHECK(classify({1, 0, 1}) == IsoCase::empty);
    CHECK(classify({0, 0, 0}) == IsoCase::empty);
    CHECK(classify({-1, 0, 0}) == IsoCase::empty);
    CHECK(classify({1, 1, 0}) == IsoCase::broken_null);
    CHECK(classify({1, -1, 0.1}) == IsoCase::empty);
    CHECK(to_string(IsoCase::hyperbola) == "hyperbola");
}

TEST_CASE("feasibility boundary matches the causal cone")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        const IsoProblem p{uniform(rng, -1, 3), uniform(rng, -3, 3), uniform(rng, -2, 2)};
        const bool feasible = classify(p) != IsoCase::empty;
        CHECK(feasible == (p.a > 0 && in_causal_future(Event{}, {p.a, p.b, p.c})));
    }
}

TEST_CASE("boost to axis")
{
    const BoostToAxis id = boost_to_axis(3.0, 0.0);
    CHECK(id.T == doctest::Approx(3.0));
    CHECK(id.boost.apply({1.0, 2.0}).x == doctest::Approx(1.0));
    CHECK(id.boost.apply({1.0, 2.0}).y == doctest::Approx(2.0));

    const BoostToAxis b = boost_to_axis(5.0, 3.0);
    CHECK(b.T == doctest::Approx(4.0));
    const PlanarPoint img = b.boost.apply({5.0, 3.0});
    CHECK(img.x == doctest::Approx(4.0));
    CHECK(std::abs(img.y) <= 1e-14);
    CHECK(b.boost.determinant() == doctest::Approx(1.0));
    CHECK_THROWS_AS(boost_to_axis(1.0, 1.0), std::invalid_argument);

    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const double a = uniform(rng, 0.1, 5);
        const BoostToAxis r = boost_to_axis(a, uniform(rng, -0.99, 0.99) * a);
        const PlanarPoint v{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        const PlanarPoint w = r.boost.apply(v);
        CHECK(-w.x * w.x + w.y * w.y == doctest::Approx(-v.x * v.x + v.y * v.y).epsilon(1e-10).scale(1.0));
        const PlanarPoint back = r.boost.apply_inverse(w);
        CHECK(back.x == doctest::Approx(v.x).epsilon(1e-10).scale(1.0));
        CHECK(back.y == doctest::Approx(v.y).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("hyperbola ordinate")
{
    for (double y_C : {1.0, 1.3, 5.0, -2.0}) {
        CHECK(std::abs(hyperbola_ordinate(y_C, 2.0, 0.0)) <= 1e-14);
        CHECK(std::abs(hyperbola_ordinate(y_C, 2.0, 2.0)) <= 1e-14);
    }
    for (double x : {0.0, 0.3, 1.0, 1.7, 2.0}) {
        CHECK(hyperbola_ordinate(1.0, 2.0, x) == doctest::Approx(1.0 - std::abs(x - 1.0)));
    }
    CHECK(std::abs(hyperbola_ordinate(1e12, 2.0, 1.0)) < 1e-11);
    CHECK_THROWS_AS(hyperbola_ordinate(0.9, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(hyperbola_ordinate(1.5, 2.0, 2.5), std::invalid_argument);
}

TEST_CASE("hyperbola area and length")
{
    CHECK(hyperbola_area(1.0, 2.0) == doctest::Approx(1.0));
    CHECK(hyperbola_area(-1.0, 2.0) == doctest::Approx(-1.0));
    CHECK(std::abs(hyperbola_area(1e9, 2.0)) < 1e-8);
    CHECK(hyperbola_area(3.0, 2.0) == doctest::Approx(kAreaY3T2).epsilon(1e-13));
    CHECK(hyperbola_length(3.0, 2.0) == doctest::Approx(kLengthY3T2).epsilon(1e-13));
    CHECK(hyperbola_length(1.0, 2.0) == doctest::Approx(0.0));
    CHECK(hyperbola_length(1e8, 2.0) == doctest::Approx(2.0));
    double prev = hyperbola_area(1.0, 2.0);
    for (double y = 1.0 + 1e-6; y < 50.0; y *= 1.1) {
        const double a = hyperbola_area(y, 2.0);
        CHECK(a < prev);
        prev = a;
    }
    // Continuity across the series switch near the degenerate vertex.
    CHECK(hyperbola_area(1.0 + 1e-12, 2.0) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("solve_vertex")
{
    CHECK(solve_vertex(2.0, 0.5) == doctest::Approx(kVertexT2c05).epsilon(1e-10));
    CHECK(solve_vertex(2.0, -0.5) == doctest::Approx(-kVertexT2c05).epsilon(1e-10));
    CHECK(solve_vertex(2.0, 1.0 - 1e-15) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(solve_vertex(2.0, 1e-12) > 1e10);
    CHECK_THROWS_AS(solve_vertex(2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_vertex(2.0, 1.5), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const double T = uniform(rng, 0.05, 20.0);
        const double c = uniform(rng, -0.999, 0.999) * T * T / 4;
        const double y = solve_vertex(T, c);
        CHECK(std::abs(hyperbola_area(y, T) - c) <= 1e-10 * T * T);
    }
}

TEST_CASE("solve")
{
    const IsoSolution line = solve({2, 0, 0});
    CHECK(line.kind == IsoCase::timelike_line);
    CHECK(line.max_length == doctest::Approx(2.0));

    const IsoSolution broken = solve({2, 0, 1});
    CHECK(broken.kind == IsoCase::broken_null);
    CHECK(broken.max_length == 0.0);

    const IsoProblem prob{2, 0, 0.5};
    const IsoSolution hyp = solve(prob);
    REQUIRE(hyp.kind == IsoCase::hyperbola);
    REQUIRE(hyp.y_C.has_value());
    CHECK(*hyp.y_C == doctest::Approx(-kVertexT2c05).epsilon(1e-10));
    CHECK(hyp.max_length == doctest::Approx(kLengthT2c05).epsilon(1e-12));
    const PlanarCurve curve = sample_solution(hyp, prob, 20001);
    CHECK(lorentzian_length(curve) == doctest::Approx(hyp.max_length).epsilon(1e-6));
    CHECK(std::abs(lift(curve, Event{}).points.back().z - 0.5) <= 1e-6 * 4.0);
}

TEST_CASE("sampled solutions")
{
    const IsoProblem line{3, 1, 0};
    const PlanarCurve l = sample_solution(solve(line), line, 11);
    for (const PlanarPoint& p : l.points) {
        CHECK(std::abs(p.x * 1.0 - p.y * 3.0) <= 1e-12);
    }

    const IsoProblem null_prob{2, 0, 1};
    const PlanarCurve b = sample_solution(solve(null_prob), null_prob, 101);
    for (const PlanarPoint& p : b.points) {
        CHECK(p.y == doctest::Approx(-std::min(p.x, std::abs(p.x - 2.0))).epsilon(1e-12).scale(1.0));
    }
    CHECK(b.points[50].x == doctest::Approx(1.0));
    CHECK(b.points[50].y == doctest::Approx(-1.0));
    CHECK(lorentzian_length(b) == doctest::Approx(0.0).scale(1.0));

    CHECK_THROWS_AS(sample_solution(solve({1, 0, 1}), {1, 0, 1}, 10), NoSolutionError);
    CHECK_THROWS_AS(sample_solution(solve({2, 0, 0}), {2, 0, 0}, 1), std::invalid_argument);

    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
        const Event q = heis::testing::random_future(rng, 4.0, 0.97);
        const IsoProblem prob{q.x, q.y, q.z};
        const IsoSolution sol = solve(prob);
        const PlanarCurve c = sample_solution(sol, prob, 10000);
        const double T2 = sol.T * sol.T;
        CHECK(std::abs(lift(c, Event{}).points.back().z - q.z) <= 1e-6 * T2);
        CHECK(std::abs(lorentzian_length(c) - sol.max_length) <= 1e-6 * sol.T);

        const IsoProblem mirror{q.x, q.y, -q.z};
        CHECK(solve(mirror).max_length == doctest::Approx(sol.max_length).epsilon(1e-12));
    }
}

TEST_CASE("mirror symmetry of axis-aligned solutions")
{
    const IsoProblem up{2.5, 0, 0.4};
    const IsoProblem down{2.5, 0, -0.4};
    const PlanarCurve cu = sample_solution(solve(up), up, 257);
    const PlanarCurve cd = sample_solution(solve(down), down, 257);
    for (std::size_t i = 0; i < cu.points.size(); ++i) {
        CHECK(cu.points[i].x == doctest::Approx(cd.points[i].x));
        CHECK(cu.points[i].y == doctest::Approx(-cd.points[i].y).scale(1.0));
    }
}

TEST_CASE("area preserving perturbations are shorter")
{
    const IsoProblem prob{3.0, 0.0, -0.6};
    const IsoSolution sol = solve(prob);
    const double T = sol.T;
    const std::size_t n = 4001;
    std::vector<double> xs(n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = i + 1 == n ? T : T * static_cast<double>(i) / static_cast<double>(n - 1);
        f[i] = hyperbola_ordinate(*sol.y_C, T, xs[i]);
    }
    auto length_of = [&](const std::vector<double>& g) {
        std::vector<PlanarPoint> pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back({xs[i], g[i]});
        }
        return lorentzian_length(heis::testing::polyline(pts));
    };
    const double best = length_of(f);
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        const int mode = 1 + static_cast<int>(rng() % 6);
        const double eps = uniform(rng, 0.002, 0.02);
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = f[i] + eps * std::sin(2.0 * std::numbers::pi * mode * xs[i] / T);
        }
        CHECK(length_of(g) < best + 1e-9);
    }
}
