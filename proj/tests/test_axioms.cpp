#include <doctest.h>

#include <stdexcept>

#include <random>

#include "feltfp/axioms.hpp"
#include "feltfp/oracle.hpp"
#include "support/test_oracles.hpp"

using namespace feltfp;

TEST_CASE("indiscernibility: distinct points at distance 0 fail") {
    const auto broken = FeltSpace::finite({{0, 0}, {0, 0}});
    const auto rep = check_indiscernibility(broken);
    REQUIRE(rep.verdict == Verdict::fail);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->points[0] == Point::at_index(0));
    CHECK(rep.witness->points[1] == Point::at_index(1));
    // the witness reproduces the violation through the distance op
    CHECK(broken.distance(rep.witness->points[0], rep.witness->points[1]) == 0.0);
}

TEST_CASE("indiscernibility: nonzero self-distance is allowed") {
    const auto space = FeltSpace::finite({{0.5, 1}, {1, 0}});
    CHECK(check_indiscernibility(space).verdict == Verdict::pass);
}

TEST_CASE("indiscernibility: maxpm passes sampled (only (0,0) attains 0)") {
    const auto space = make_builtin_space("maxpm:0,1");
    const auto rep = check_indiscernibility(space);
    CHECK(rep.verdict == Verdict::pass_sampled);
    CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("symmetry: exact on finite spaces") {
    const auto asym = FeltSpace::finite({{0, 1}, {2, 0}});
    const auto rep = check_symmetry(asym);
    REQUIRE(rep.verdict == Verdict::fail);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->values == std::vector<double>{1.0, 2.0});
    // re-evaluating the witness reproduces the asymmetry
    CHECK(asym.distance(rep.witness->points[0], rep.witness->points[1]) !=
          asym.distance(rep.witness->points[1], rep.witness->points[0]));

    CHECK(check_symmetry(FeltSpace::finite({{0, 1}, {1, 0}})).verdict == Verdict::pass);
    CHECK(check_symmetry(make_builtin_space("euclid:0,1")).verdict == Verdict::pass_sampled);
}

TEST_CASE("felt continuity: discrete space certifies delta = 1") {
    const auto space = make_builtin_space("discrete:3");
    for (const auto& entry : check_felt_continuity(space, {0.5, 1.0})) {
        REQUIRE(entry.certificate.has_value());
        CHECK(entry.certificate->delta == 1.0);
        CHECK(entry.certificate->scope == Scope::exhaustive);
    }
}

TEST_CASE("felt continuity: a zero-distance pair with a large jump fails") {
    // p(0,1) = 0 on distinct points; x = 2 sees them epsilon-apart
    const auto space = FeltSpace::finite({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
    const auto entries = check_felt_continuity(space, {0.5});
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].report.verdict == Verdict::fail);
    REQUIRE(entries[0].report.witness.has_value());
    const auto& w = *entries[0].report.witness;
    // witness triple (x, y, z) reproduces: p(z,y) = 0 yet |p(z,x) - p(y,x)| >= eps
    CHECK(space.distance(w.points[2], w.points[1]) == 0.0);
    CHECK(std::fabs(space.distance(w.points[2], w.points[0]) -
                    space.distance(w.points[1], w.points[0])) >= 0.5);
}

TEST_CASE("felt continuity: euclid certifies delta >= epsilon (triangle inequality)") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto entries = check_felt_continuity(space, {0.1});
    REQUIRE(entries[0].certificate.has_value());
    CHECK(entries[0].certificate->scope == Scope::sampled);
    CHECK(entries[0].certificate->delta >= 0.1 - 1e-12);
}

TEST_CASE("felt continuity: maxpm certificate, inequality brute-checked first") {
    // |max(z,x) - max(y,x)| <= |z - y| <= max(z,y) for z,y >= 0: verify by
    // brute force before trusting the sampled certificate.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 20000; ++k) {
        const double x = u(rng), y = u(rng), z = u(rng);
        CHECK(std::fabs(std::max(z, x) - std::max(y, x)) <= std::max(z, y) + 1e-15);
    }

    const auto space = make_builtin_space("maxpm:0,1");
    const auto entries = check_felt_continuity(space, {0.2});
    REQUIRE(entries[0].certificate.has_value());
    CHECK(entries[0].certificate->delta >= 0.2 - 1e-12);
}

TEST_CASE("felt continuity: certified delta is nondecreasing in epsilon") {
    const std::vector<double> epsilons = {0.25, 0.5, 0.75, 1.0};
    feltfp::testing::for_each_symmetric_space(3, {0.0, 0.5, 1.0}, [&](const FeltSpace& space) {
        double prev = 0;
        for (const auto& entry : check_felt_continuity(space, epsilons)) {
            if (!entry.certificate) return;  // fails only on (1a)-violating spaces
            CHECK(entry.certificate->delta >= prev);
            prev = entry.certificate->delta;
        }
    });
}

TEST_CASE("felt continuity: indiscernibility pass implies positive-delta certificates") {
    // n <= 4 over {0, 1/2, 1}; spaces violating (1a) are exactly the ones the
    // implication says nothing about.
    const std::vector<double> epsilons = {0.25, 0.5, 1.0};
    for (std::size_t n = 1; n <= 4; ++n) {
        feltfp::testing::for_each_symmetric_space(n, {0.0, 0.5, 1.0}, [&](const FeltSpace& space) {
            if (check_indiscernibility(space).verdict != Verdict::pass) return;
            for (const auto& entry : check_felt_continuity(space, epsilons)) {
                REQUIRE(entry.certificate.has_value());
                CHECK(entry.certificate->delta > 0);
            }
        });
    }
}

TEST_CASE("felt continuity: certificates mean what they say") {
    // delta certifies: p(z,y) < delta => |p(z,x) - p(y,x)| < eps, re-checked
    // by a direct triple scan on the n = 3 grid
    feltfp::testing::for_each_symmetric_space(3, {0.0, 0.5, 1.0}, [&](const FeltSpace& space) {
        for (const auto& entry : check_felt_continuity(space, {0.3, 0.7})) {
            if (!entry.certificate) continue;
            const double delta = entry.certificate->delta;
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 3; ++y)
                    for (std::size_t z = 0; z < 3; ++z) {
                        if (space.at(z, y) >= delta) continue;
                        CHECK(std::fabs(space.at(z, x) - space.at(y, x)) < entry.epsilon);
                    }
        }
    });
}

TEST_CASE("felt continuity: input validation") {
    const auto space = make_builtin_space("discrete:2");
    CHECK_THROWS_AS(check_felt_continuity(space, {}), std::invalid_argument);
    CHECK_THROWS_AS(check_felt_continuity(space, {0.0}), std::invalid_argument);
}

TEST_CASE("zero-completeness: structural pass on well-formed finite spaces") {
    const auto rep = check_zero_completeness_finite(make_builtin_space("discrete:3"));
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.detail_note == "structural");
    CHECK(rep.detail.at("trials") == 1000);

    // single point with positive self-distance: hypothesis unreachable
    CHECK(check_zero_completeness_finite(FeltSpace::finite({{0.5}})).verdict == Verdict::pass);
    CHECK(check_zero_completeness_finite(FeltSpace::finite({{0, 1}, {1, 0}})).verdict ==
          Verdict::pass);
}

TEST_CASE("zero-completeness: never fails across enumerated (1a) spaces, n <= 3") {
    EnumerationConfig cfg;
    cfg.n = 3;
    SpaceEnumerator spaces(cfg);
    Tolerances tol;
    while (auto space = spaces.next())
        CHECK(check_zero_completeness_finite(*space, tol, 50).verdict == Verdict::pass);
}

TEST_CASE("zero-completeness: rejects spaces failing indiscernibility") {
    const auto broken = FeltSpace::finite({{0, 0}, {0, 0}});
    CHECK_THROWS_AS(check_zero_completeness_finite(broken), std::invalid_argument);
}

TEST_CASE("zero-continuity: finite exact rule") {
    // p(x,x) > 0 makes the check vacuous at x
    const auto space = FeltSpace::finite({{0.5, 1}, {1, 0}});
    const auto ident = make_builtin_map("ident", space);
    CHECK(check_zero_continuity(space, ident, Point::at_index(0)).verdict == Verdict::pass);

    // p(x,x) = 0 and p(fx,fx) = 0: pass; p(fx,fx) > 0: fail
    const auto mixed = FeltSpace::finite({{0, 1}, {1, 0.5}});
    const auto to_zero = SelfMap::table({0, 0});
    const auto to_one = SelfMap::table({1, 1});
    CHECK(check_zero_continuity(mixed, to_zero, Point::at_index(0)).verdict == Verdict::pass);
    const auto bad = check_zero_continuity(mixed, to_one, Point::at_index(0));
    REQUIRE(bad.verdict == Verdict::fail);
    CHECK(mixed.distance(bad.witness->points[1], bad.witness->points[1]) > 0);
}

TEST_CASE("zero-continuity: finite rule matches the eventually-constant-sequence oracle") {
    // On an (1a)-passing finite space the only 0-convergent sequences are the
    // ones eventually constant at an x with p(x,x) = 0; replay those directly.
    EnumerationConfig cfg;
    cfg.n = 3;
    SpaceEnumerator spaces(cfg);
    while (auto space = spaces.next()) {
        SelfMapEnumerator maps(3);
        while (auto map = maps.next()) {
            for (std::size_t x = 0; x < 3; ++x) {
                const bool sequences_exist = space->at(x, x) == 0.0;
                bool oracle_pass = true;
                if (sequences_exist) {
                    const std::size_t fx = map->images()[x];
                    oracle_pass = space->at(fx, fx) == 0.0;  // image of the constant tail
                }
                const auto rep = check_zero_continuity(*space, *map, Point::at_index(x));
                CHECK((rep.verdict == Verdict::pass) == oracle_pass);
            }
        }
    }
}

TEST_CASE("zero-continuity: cos is 0-continuous at sampled points of euclid") {
    const auto space = make_builtin_space("euclid:0,1");
    const auto cosmap = make_builtin_map("cos", space);
    const auto rep = check_zero_continuity(space, cosmap, Point::at(0.5));
    CHECK(rep.verdict == Verdict::pass_sampled);
    CHECK(rep.detail.at("qualifying_sequences") > 0);
}

TEST_CASE("zero-continuity: maxpm off the origin is vacuous among samples") {
    const auto space = make_builtin_space("maxpm:0,1");
    const auto half = make_builtin_map("half", space);
    const auto rep = check_zero_continuity(space, half, Point::at(0.5));
    CHECK(rep.verdict == Verdict::pass_sampled);
    CHECK(rep.detail.at("qualifying_sequences") == 0);

    const auto at_origin = check_zero_continuity(space, half, Point::at(0.0));
    CHECK(at_origin.verdict == Verdict::pass_sampled);
    CHECK(at_origin.detail.at("qualifying_sequences") > 0);
}
