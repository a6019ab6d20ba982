#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/heisenberg_core.hpp"
#include "test_support.hpp"

using namespace heis;
using heis::testing::polyline;
using heis::testing::random_event;
using heis::testing::uniform;

namespace {

void check_event(const Event& got, const Event& want, double tol = 1e-12)
{
    CHECK(got.x == doctest::Approx(want.x).epsilon(tol));
    CHECK(got.y == doctest::Approx(want.y).epsilon(tol));
    CHECK(got.z == doctest::Approx(want.z).epsilon(tol));
}

}  // namespace

TEST_CASE("group law examples")
{
    check_event(group_mul({0, 0, 0}, {1.5, -2, 3}), {1.5, -2, 3});
    check_event(group_mul({1, 0, 0}, {0, 1, 0}), {1, 1, 0.5});
    check_event(group_inv({1, 2, 3}), {-1, -2, -3});
    check_event(group_inv({0, 0, 0}), {0, 0, 0});
    check_event(dilate(2.0, {1, 1, 1}), {2, 2, 4});
    check_event(dilate(1.0, {0.3, -0.7, 0.2}), {0.3, -0.7, 0.2});
    CHECK_THROWS_AS(dilate(0.0, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dilate(-1.0, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("group axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Event p = random_event(rng);
        const Event q = random_event(rng);
        const Event r = random_event(rng);
        const Event lhs = group_mul(group_mul(p, q), r);
        const Event rhs = group_mul(p, group_mul(q, r));
        CHECK(std::abs(lhs.x - rhs.x) <= 1e-12 * (1 + std::abs(lhs.x)));
        CHECK(std::abs(lhs.y - rhs.y) <= 1e-12 * (1 + std::abs(lhs.y)));
        CHECK(std::abs(lhs.z - rhs.z) <= 1e-12 * (1 + std::abs(lhs.z)));
        const Event e1 = group_mul(p, group_inv(p));
        const Event e2 = group_mul(group_inv(p), p);
        CHECK(std::abs(e1.x) + std::abs(e1.y) + std::abs(e1.z) <= 1e-12);
        CHECK(std::abs(e2.x) + std::abs(e2.y) + std::abs(e2.z) <= 1e-12);
        const double lambda = uniform(rng, 0.1, 5.0);
        const Event a = dilate(lambda, group_mul(p, q));
        const Event b = group_mul(dilate(lambda, p), dilate(lambda, q));
        CHECK(std::abs(a.z - b.z) <= 1e-12 * (1 + std::abs(a.z)));
    }
}

TEST_CASE("causal class of horizontal vectors")
{
    CHECK(causal_class({1, 0}).tag == CausalTag::timelike);
    CHECK(causal_class({1, 0}).future_directed);
    CHECK(causal_class({1, 1}).tag == CausalTag::null);
    CHECK(causal_class({1, 1}).future_directed);
    CHECK(causal_class({0, 1}).tag == CausalTag::spacelike);
    CHECK(causal_class({0, 0}).tag == CausalTag::zero);
    CHECK_FALSE(causal_class({-2, 1}).future_directed);
    CHECK(to_string(CausalTag::timelike) == "timelike");
}

TEST_CASE("causal and chronological futures")
{
    CHECK_FALSE(in_causal_future({0, 0, 0}, {1, 0, 1}));
    CHECK(in_causal_future({0, 0, 0}, {2, 0, 0.5}));
    CHECK(in_causal_future({0.3, -1, 2}, {0.3, -1, 2}));
    CHECK(in_causal_future({0, 0, 0}, {2, 0, 1}));
    CHECK(on_null_boundary({2, 0, 1}));
    CHECK_FALSE(in_chronological_future({0, 0, 0}, {1, 1, 0}));
    CHECK(in_chronological_future({0, 0, 0}, {1, 0, 0.2}));
    CHECK_FALSE(in_chronological_future({0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}));
    CHECK_FALSE(in_causal_future({0, 0, 0}, {-1, 0, 0}));
    CHECK(causal_form({1, 0, 1}) == doctest::Approx(3.0));
}

TEST_CASE("causal relations are left invariant, dilation invariant and nested")
{
    std::mt19937_64 rng(12);
    int causal = 0;
    for (int i = 0; i < 5000; ++i) {
        const Event p = random_event(rng);
        const Event q1 = random_event(rng);
        const Event q2 = group_mul(q1, heis::testing::random_future(rng, 1.5, 1.05));
        const bool base = in_causal_future(q1, q2);
        causal += base ? 1 : 0;
        CHECK(in_causal_future(group_mul(p, q1), group_mul(p, q2)) == base);
        const double lambda = uniform(rng, 0.2, 4.0);
        CHECK(in_causal_future(dilate(lambda, q1), dilate(lambda, q2)) == base);
        if (in_chronological_future(q1, q2)) {
            CHECK(base);
        }
    }
    CHECK(causal > 1000);
    CHECK(causal < 5000);
}

TEST_CASE("signed area")
{
    const PlanarCurve square = polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(signed_area(square) == doctest::Approx(1.0));
    CHECK(signed_area(polyline({{0, 0}, {2.5, -1.0}})) == doctest::Approx(0.0));
    const double T = 3.0;
    const PlanarCurve up = polyline({{0, 0}, {T / 2, T / 2}, {T, 0}});
    CHECK(signed_area(up) == doctest::Approx(-T * T / 4));
    const PlanarCurve down = polyline({{0, 0}, {T / 2, -T / 2}, {T, 0}});
    CHECK(signed_area(down) == doctest::Approx(T * T / 4));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<PlanarPoint> pts;
        for (int i = 0; i < 12; ++i) {
            pts.push_back({uniform(rng, -2, 2), uniform(rng, -2, 2)});
        }
        std::vector<PlanarPoint> rev(pts.rbegin(), pts.rend());
        CHECK(signed_area(polyline(rev)) == doctest::Approx(-signed_area(polyline(pts))).epsilon(1e-12));
    }
}

TEST_CASE("lift and project")
{
    const EventCurve seg = lift(polyline({{0, 0}, {1, 0}}), Event{});
    CHECK(seg.points.back().x == doctest::Approx(1.0));
    CHECK(seg.points.back().z == doctest::Approx(0.0));

    const double T = 2.0;
    const std::size_t n = 2001;
    std::vector<PlanarPoint> below;
    std::vector<PlanarPoint> above;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = T * static_cast<double>(i) / static_cast<double>(n - 1);
        below.push_back({x, -std::min(x, std::abs(x - T))});
        above.push_back({x, std::min(x, std::abs(x - T))});
    }
    const EventCurve broken = lift(polyline(below), Event{});
    CHECK(broken.points.back().x == doctest::Approx(T));
    CHECK(std::abs(broken.points.back().y) <= 1e-12);
    CHECK(broken.points.back().z == doctest::Approx(T * T / 4).epsilon(1e-12));
    CHECK(lift(polyline(above), Event{}).points.back().z == doctest::Approx(-T * T / 4).epsilon(1e-12));

    std::mt19937_64 rng(14);
    std::vector<PlanarPoint> walk{{0.2, -0.4}};
    for (int i = 0; i < 30; ++i) {
        walk.push_back({walk.back().x + uniform(rng, -1, 1), walk.back().y + uniform(rng, -1, 1)});
    }
    const Event base{0.2, -0.4, 1.3};
    const PlanarCurve back = project(lift(polyline(walk), base));
    for (std::size_t i = 0; i < walk.size(); ++i) {
        CHECK(back.points[i].x == walk[i].x);
        CHECK(back.points[i].y == walk[i].y);
    }
    const EventCurve from_origin = lift(polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}), Event{});
    CHECK(from_origin.points.back().z == doctest::Approx(1.0));
    CHECK_THROWS_AS(lift(polyline({{1, 0}, {2, 0}}), Event{}), std::invalid_argument);
}

TEST_CASE("lorentzian length")
{
    CHECK(lorentzian_length(polyline({{0, 0}, {5, 3}})) == doctest::Approx(4.0));
    CHECK(lorentzian_length(polyline({{0, 0}, {1, 1}, {2, 0}})) == doctest::Approx(0.0));
    CHECK_THROWS_AS(lorentzian_length(polyline({{0, 0}, {1, 2}})), NotCausalError);

    std::mt19937_64 rng(15);
    std::vector<PlanarPoint> pts{{0, 0}};
    for (int i = 0; i < 40; ++i) {
        const double dx = uniform(rng, 0.1, 1.0);
        pts.push_back({pts.back().x + dx, pts.back().y + uniform(rng, -0.9, 0.9) * dx});
    }
    const std::vector<PlanarPoint> first(pts.begin(), pts.begin() + 21);
    const std::vector<PlanarPoint> second(pts.begin() + 20, pts.end());
    CHECK(lorentzian_length(polyline(pts)) ==
          doctest::Approx(lorentzian_length(polyline(first)) + lorentzian_length(polyline(second))).epsilon(1e-12));

    const EventCurve lifted = lift(polyline(pts), Event{});
    EventCurve moved = lifted;
    const Event p{0.4, -1.1, 2.2};
    for (Event& e : moved.points) {
        e = group_mul(p, e);
    }
    CHECK(lorentzian_length(moved) == doctest::Approx(lorentzian_length(lifted)).epsilon(1e-12));
}

TEST_CASE("curve validation")
{
    PlanarCurve bad;
    bad.times = {0.0, 0.0};
    bad.points = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(validate_curve(bad), std::invalid_argument);
    PlanarCurve one;
    one.times = {0.0};
    one.points = {{0, 0}};
    CHECK_THROWS_AS(signed_area(one), std::invalid_argument);
}
