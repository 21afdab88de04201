#include <doctest.h>

#include <stdexcept>

#include "feltfp/axioms.hpp"
#include "feltfp/contraction.hpp"
#include "feltfp/oracle.hpp"
#include "feltfp/solver.hpp"
#include "support/test_oracles.hpp"

using namespace feltfp;

namespace {

const FeltSpace kTwoPoint = FeltSpace::finite({{0, 1}, {1, 0}});
const SelfMap kSwap = SelfMap::table({1, 0});

}  // namespace

TEST_CASE("picard orbit: cosine reaches the Dottie point") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto cosmap = make_builtin_map("cos", space);
    const auto trace = picard_orbit(space, cosmap, Point::at(0.0));
    CHECK(trace.stopped_reason == StopReason::vanished);
    CHECK(trace.iterations() <= 200);
    const double dottie = feltfp::testing::dottie_by_bisection();
    CHECK(std::fabs(trace.last().scalar() - dottie) <= 1e-9);
}

TEST_CASE("picard orbit: identity vanishes immediately on a zero-self-distance point") {
    const auto space = make_builtin_space("discrete:3");
    const auto ident = make_builtin_map("ident", space);
    const auto trace = picard_orbit(space, ident, Point::at_index(1));
    CHECK(trace.stopped_reason == StopReason::vanished);
    CHECK(trace.consec == std::vector<double>{0.0});
    CHECK(trace.points.size() == 2);
    CHECK(vanishing_hypothesis(trace));
}

TEST_CASE("picard orbit: the swap two-cycle is detected, consec stays at 1") {
    const auto trace = picard_orbit(kTwoPoint, kSwap, Point::at_index(0));
    CHECK(trace.stopped_reason == StopReason::cycle_detected);
    REQUIRE_FALSE(trace.consec.empty());
    for (double d : trace.consec) CHECK(d == 1.0);
    CHECK_FALSE(vanishing_hypothesis(trace));
}

TEST_CASE("picard orbit: fixed map point with positive self-distance is a cycle, not vanishing") {
    const auto space = FeltSpace::finite({{0.5}});
    const auto trace = picard_orbit(space, SelfMap::table({0}), Point::at_index(0));
    CHECK(trace.stopped_reason == StopReason::cycle_detected);
    CHECK_FALSE(vanishing_hypothesis(trace));
}

TEST_CASE("picard orbit: halving on maxpm decays geometrically to the origin") {
    const auto space = make_builtin_space("maxpm:0,2");
    const auto half = make_builtin_map("half", space);
    const auto trace = picard_orbit(space, half, Point::at(2.0));
    CHECK(trace.stopped_reason == StopReason::vanished);
    // consec[k] = max(x_{k+1}, x_k) = x_k = 2^(1-k)
    CHECK(trace.consec[0] == 2.0);
    CHECK(trace.consec[1] == 1.0);
    CHECK(trace.consec[2] == 0.5);
    CHECK(vanishing_hypothesis(trace));
}

TEST_CASE("picard orbit: max_iter cap and domain validation") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto cosmap = make_builtin_map("cos", space);
    Tolerances tight;
    tight.max_iter = 3;
    const auto trace = picard_orbit(space, cosmap, Point::at(0.0), tight);
    CHECK(trace.stopped_reason == StopReason::max_iter);
    CHECK(trace.iterations() == 3);
    CHECK_FALSE(vanishing_hypothesis(trace, tight));

    CHECK_THROWS_AS(picard_orbit(space, cosmap, Point::at(2.0)), std::domain_error);
}

TEST_CASE("orbit invariants: recorded points compose and consec re-evaluates") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto f = make_builtin_map("affine:0.5,0.3", space);
    const auto trace = picard_orbit(space, f, Point::at(0.0));
    for (std::size_t k = 0; k + 1 < trace.points.size(); ++k) {
        CHECK(f.apply(space, trace.points[k]) == trace.points[k + 1]);
        CHECK(trace.consec[k] == space.distance(trace.points[k + 1], trace.points[k]));
    }
    const std::size_t w = trace.pair_window.size();
    REQUIRE(w >= 1);
    CHECK(trace.pair_window[w - 1][w - 1] == 0.0);
}

TEST_CASE("verify fixed point: the origin of maxpm is exact") {
    const auto space = make_builtin_space("maxpm:0,2");
    const auto half = make_builtin_map("half", space);
    const auto res = verify_fixed_point(space, half, Point::at(0.0));
    CHECK(res.residual_fix == 0.0);
    CHECK(res.self_dist == 0.0);
    CHECK(res.certified);
}

TEST_CASE("verify fixed point: Dottie digits certify, midpoint does not") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto cosmap = make_builtin_map("cos", space);

    const auto good = verify_fixed_point(space, cosmap, Point::at(0.7390851332));
    CHECK(good.residual_fix < 1e-9);
    CHECK(good.certified);

    const auto bad = verify_fixed_point(space, cosmap, Point::at(0.5));
    CHECK(bad.residual_fix == doctest::Approx(std::cos(0.5) - 0.5).epsilon(1e-12));
    CHECK_FALSE(bad.certified);
}

TEST_CASE("eq4 diagnostic: vanishes along the cosine orbit, constant at a fixed point") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto cosmap = make_builtin_map("cos", space);
    const auto trace = picard_orbit(space, cosmap, Point::at(0.0));
    const auto r = eq4_diagnostic(space, cosmap, trace, trace.last());
    REQUIRE(r.size() == trace.points.size() - 1);
    CHECK(r.back() < 1e-9);

    const auto discrete = make_builtin_space("discrete:3");
    const auto ident = make_builtin_map("ident", discrete);
    const auto fixed = picard_orbit(discrete, ident, Point::at_index(0));
    for (double v : eq4_diagnostic(discrete, ident, fixed, fixed.last())) CHECK(v == 0.0);
}

TEST_CASE("eq4 diagnostic: swap cycle values stay large (hand-computed)") {
    // trace = [0, 1]; r_0 = |p(x_1, f0) - p(0, f0)| = |p(1,1) - p(0,1)| = 1
    const auto trace = picard_orbit(kTwoPoint, kSwap, Point::at_index(0));
    const auto r = eq4_diagnostic(kTwoPoint, kSwap, trace, Point::at_index(0));
    REQUIRE_FALSE(r.empty());
    for (double v : r) CHECK(v >= 0.5);
}

TEST_CASE("solve: cosine certifies at the Dottie point") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto res = solve(space, make_builtin_map("cos", space), Point::at(0.0));
    REQUIRE(res.certified());
    CHECK(std::fabs(res.fixed_point->x_star.scalar() - feltfp::testing::dottie_by_bisection()) <=
          1e-9);
    CHECK_FALSE(res.theorem_violation_candidate);
    CHECK(res.fixed_point->tail_residual.has_value());
    CHECK(*res.fixed_point->tail_residual < 1e-9);
}

TEST_CASE("solve: halving on maxpm certifies with tiny residuals from any start") {
    const auto space = make_builtin_space("maxpm:0,2");
    const auto half = make_builtin_map("half", space);

    const auto from_two = solve(space, half, Point::at(2.0));
    REQUIRE(from_two.certified());
    CHECK(from_two.fixed_point->self_dist <= 1e-9);
    CHECK_FALSE(from_two.theorem_violation_candidate);

    const auto from_zero = solve(space, half, Point::at(0.0));
    REQUIRE(from_zero.certified());
    CHECK(from_zero.fixed_point->residual_fix == 0.0);
    CHECK(from_zero.fixed_point->self_dist == 0.0);
    CHECK_FALSE(from_zero.theorem_violation_candidate);
}

TEST_CASE("solve: swap cycle is uncertified with the hypothesis reason") {
    const auto res = solve(kTwoPoint, kSwap, Point::at_index(0));
    CHECK_FALSE(res.certified());
    CHECK_FALSE(res.hypothesis_met);
    CHECK_FALSE(res.fixed_point.has_value());
    CHECK(res.reason.find("hypothesis") != std::string::npos);
}

TEST_CASE("solve: certified finite results re-evaluate exactly") {
    EnumerationConfig cfg;
    cfg.n = 2;
    SpaceEnumerator spaces(cfg);
    while (auto space = spaces.next()) {
        SelfMapEnumerator maps(2);
        while (auto map = maps.next()) {
            for (std::size_t start = 0; start < 2; ++start) {
                const auto res = solve(*space, *map, Point::at_index(start));
                if (!res.certified()) continue;
                const std::size_t xs = res.fixed_point->x_star.index();
                CHECK(map->images()[xs] == xs);
                CHECK(space->at(xs, xs) == 0.0);
                CHECK(space->at(xs, map->images()[xs]) == 0.0);
            }
        }
    }
}

TEST_CASE("solve: theorem property on the n = 2 grid (condition 3 + vanishing => certified)") {
    EnumerationConfig cfg;
    cfg.n = 2;
    SpaceEnumerator spaces(cfg);
    while (auto space = spaces.next()) {
        if (check_indiscernibility(*space).verdict != Verdict::pass) continue;
        if (check_symmetry(*space).verdict != Verdict::pass) continue;
        SelfMapEnumerator maps(2);
        while (auto map = maps.next()) {
            if (!check_condition3_finite(*space, *map).pass()) continue;
            for (std::size_t start = 0; start < 2; ++start) {
                const auto res = solve(*space, *map, Point::at_index(start));
                if (!res.hypothesis_met) continue;
                CHECK(res.certified());
                CHECK_FALSE(res.theorem_violation_candidate);
            }
        }
    }
}

TEST_CASE("solve: Banach rate along the affine orbit") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto f = make_builtin_map("affine:0.5,0.3", space);
    const auto res = solve(space, f, Point::at(0.0));
    REQUIRE(res.certified());
    CHECK_FALSE(res.theorem_violation_candidate);
    const auto& consec = res.trace.consec;
    for (std::size_t k = 0; k + 1 < consec.size(); ++k)
        CHECK(consec[k + 1] <= 0.5 * consec[k] + 1e-12);
    // fixed point of x -> x/2 + 0.3 is 0.6
    CHECK(res.fixed_point->x_star.scalar() == doctest::Approx(0.6).epsilon(1e-9));
}
