#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pfmed/error.hpp"
#include "pfmed/pareto.hpp"
#include "support/fronts.hpp"
#include "support/oracles.hpp"

using namespace pfmed;
using namespace testing_support;

TEST_CASE("dominance relation") {
    CHECK(dominates({0, 0}, {1, 1}));
    CHECK_FALSE(dominates({1, 0}, {0, 1}));
    CHECK_FALSE(dominates({0, 0}, {0, 0}));
    CHECK(dominates({0, 1}, {0, 2}));
}

TEST_CASE("precedence and incomparability") {
    CHECK(precedes({0, 1}, {1, 0}));
    CHECK_FALSE(precedes({0, 0}, {1, 1}));
    CHECK_FALSE(precedes({0, 0}, {0, 0}));
    CHECK_FALSE(precedes({1, 0}, {0, 1}));
    CHECK(incomparable({0, 1}, {1, 0}));
    CHECK(incomparable({1, 0}, {0, 1}));
    CHECK_FALSE(incomparable({0, 0}, {1, 1}));
    CHECK_FALSE(incomparable({0, 1}, {0, 2}));
}

TEST_CASE("precedence is transitive on random triples") {
    std::mt19937_64 rng(11);
    std::size_t chains = 0;
    for (int t = 0; t < 20000; ++t) {
        const auto cloud = grid_cloud(rng, 3, 6);
        const Point2 a = cloud[0], b = cloud[1], c = cloud[2];
        if (precedes(a, b) && precedes(b, c)) {
            ++chains;
            CHECK(precedes(a, c));
        }
        CHECK_FALSE((precedes(a, b) && precedes(b, a)));
    }
    CHECK(chains > 100);
}

TEST_CASE("extract_front examples") {
    CHECK(extract_front(std::vector<Point2>{{0, 1}, {1, 0}, {2, 2}}) == std::vector<Point2>{{0, 1}, {1, 0}});
    CHECK(extract_front(std::vector<Point2>{{0, 1}, {0, 1}}) == std::vector<Point2>{{0, 1}});
}

TEST_CASE("extract_front keeps exactly the curve points among interior noise") {
    std::mt19937_64 rng(3);
    std::vector<Point2> pts;
    for (int i = 1; i <= 100; ++i) {
        pts.push_back({static_cast<double>(i), 1.0 / i});
    }
    // Each interior point sits above and to the right of the curve point at floor(x).
    for (int i = 0; i < 100; ++i) {
        const double x = 1.0 + 99.0 * uniform01(rng);
        pts.push_back({x, 1.0 / std::floor(x) + 0.01 + uniform01(rng)});
    }
    shuffle_in_place(pts, rng);
    const auto front = extract_front(pts);
    CHECK(front.size() == 100);
    CHECK(front == dominance_filter(pts));
}

TEST_CASE("extract_front matches the pairwise filter on random clouds") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto cloud = grid_cloud(rng, uniform_int(rng, 1, 40), uniform_int(rng, 3, 12));
        const auto front = extract_front(cloud);
        REQUIRE(front == dominance_filter(cloud));
        for (std::size_t i = 0; i + 1 < front.size(); ++i) {
            CHECK(precedes(front[i], front[i + 1]));
        }
    }
}

TEST_CASE("build_instance examples") {
    const auto inst = build_instance(std::vector<Point2>{{2, 1}, {1, 2}}, false);
    CHECK(inst.size() == 2);
    CHECK(inst[0] == Point2{1, 2});
    CHECK(inst[1] == Point2{2, 1});

    CHECK_THROWS_AS(build_instance(std::vector<Point2>{{0, 1}, {1, 1}}, true), NotAParetoFront);
    CHECK(build_instance(std::vector<Point2>{{0, 3}, {1, 2}, {2, 1}}, true).size() == 3);
}

TEST_CASE("build_instance errors") {
    CHECK_THROWS_AS(build_instance(std::vector<Point2>{}, false), EmptyInput);
    CHECK_THROWS_AS(build_instance(std::vector<Point2>{}, true), EmptyInput);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    try {
        build_instance(std::vector<Point2>{{0, 1}, {1, nan}}, false);
        FAIL("expected NonFinitePoint");
    } catch (const NonFinitePoint& e) {
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_AS(build_instance(std::vector<Point2>{{inf, 1}}, true), NonFinitePoint);
    CHECK_THROWS_AS(build_instance(std::vector<Point2>{{0, 1}, {0, 1}}, true), NotAParetoFront);
}

TEST_CASE("NotAParetoFront names the offending input positions") {
    // (1,1) is dominated by (0.5,0.5), which sits at input position 3.
    try {
        build_instance(std::vector<Point2>{{0, 4}, {1, 1}, {3, 0}, {0.5, 0.5}}, true);
        FAIL("expected NotAParetoFront");
    } catch (const NotAParetoFront& e) {
        CHECK(std::min(e.first(), e.second()) == 1);
        CHECK(std::max(e.first(), e.second()) == 3);
    }
}

TEST_CASE("build_instance is idempotent and order-free") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        auto pts = random_front(rng, uniform_int(rng, 1, 30));
        const auto canonical = build_instance(pts, true);
        shuffle_in_place(pts, rng);
        CHECK(build_instance(pts, true) == canonical);
        CHECK(build_instance(pts, false) == canonical);
        const std::vector<Point2> again(canonical.points().begin(), canonical.points().end());
        CHECK(build_instance(again, true) == canonical);
    }
}

TEST_CASE("distance powers") {
    CHECK(dist_pow({0, 0}, {3, 4}, 1.0) == 5.0);
    CHECK(dist_pow({0, 0}, {3, 4}, 2.0) == 25.0);
    CHECK(dist_pow({1, 1}, {1, 1}, 0.5) == 0.0);
    CHECK(dist_pow({0, 0}, {3, 4}, 3.0) == doctest::Approx(125.0));
    CHECK(dist_pow({0, 0}, {3, 4}, 0.5) == doctest::Approx(std::sqrt(5.0)));
    // alpha = 2 takes no square root: exact for non-representable roots.
    CHECK(dist_pow({0, 0}, {1, 1}, 2.0) == 2.0);
    CHECK(PowerDistance(2.0)({0.1, 0.7}, {0.3, 0.2}) == squared_distance({0.1, 0.7}, {0.3, 0.2}));
    CHECK(PowerDistance(1.0)({0.1, 0.7}, {0.3, 0.2}) ==
          std::sqrt(squared_distance({0.1, 0.7}, {0.3, 0.2})));
}

TEST_CASE("alpha must be positive and finite") {
    CHECK_THROWS_AS(PowerDistance(0.0), NonPositiveAlpha);
    CHECK_THROWS_AS(PowerDistance(-1.0), NonPositiveAlpha);
    CHECK_THROWS_AS(PowerDistance(std::numeric_limits<double>::quiet_NaN()), NonPositiveAlpha);
    CHECK_THROWS_AS(PowerDistance(std::numeric_limits<double>::infinity()), NonPositiveAlpha);
    CHECK_THROWS_AS(dist_pow({0, 0}, {1, 1}, 0.0), ArgumentError);
}

TEST_CASE("distances grow with index separation on a front") {
    std::mt19937_64 rng(21);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        for (int t = 0; t < 40; ++t) {
            const auto inst = build_instance(mixed_front(rng, uniform_int(rng, 3, 25)), true);
            const std::size_t n = inst.size();
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a; b < n; ++b) {
                    for (std::size_t c = b + 1; c < n; ++c) {
                        REQUIRE(dist_pow(inst[a], inst[b], alpha) < dist_pow(inst[a], inst[c], alpha));
                    }
                }
            }
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    for (std::size_t c = b; c < n; ++c) {
                        REQUIRE(dist_pow(inst[b], inst[c], alpha) < dist_pow(inst[a], inst[c], alpha));
                    }
                }
            }
        }
    }
}
