#include <doctest.h>

#include <algorithm>
#include <random>

#include "pfmed/dp_solver.hpp"
#include "pfmed/error.hpp"
#include "pfmed/oracle.hpp"
#include "support/fronts.hpp"
#include "support/oracles.hpp"

using namespace pfmed;
using namespace testing_support;

namespace {

std::vector<Point2> points_of(const ParetoInstance& inst) {
    return {inst.points().begin(), inst.points().end()};
}

/// Stirling number of the second kind, by recurrence.
std::uint64_t stirling2(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    }
    return s[n][k];
}

}  // namespace

TEST_CASE("interval_partition_count") {
    CHECK(interval_partition_count(5, 2) == 4);
    CHECK(interval_partition_count(9, 3) == 28);
    CHECK(interval_partition_count(10, 1) == 1);
    CHECK(interval_partition_count(10, 10) == 1);
    CHECK(interval_partition_count(10, 11) == 0);
    CHECK(interval_partition_count(61, 7) == 50063860);
    CHECK(interval_partition_count(100000, 50000) == UINT64_MAX);
}

TEST_CASE("brute_interval examples") {
    const auto five = brute_interval(build_instance(affine(5), true), 2, 2.0);
    CHECK(five.total == 6.0);
    CHECK(five.breaks() == std::vector<std::size_t>{1});
    const auto inst = build_instance(affine(7), true);
    CHECK(brute_interval(inst, 1, 2.0).total == solve_k1(inst, 2.0, false).total);
    CHECK(brute_interval(inst, 7, 2.0).total == 0.0);
    CHECK_THROWS_AS(brute_interval(inst, 0, 2.0), KOutOfRange);
    CHECK_THROWS_AS(brute_interval(inst, 8, 2.0), KOutOfRange);
    CHECK_THROWS_AS(brute_interval(build_instance(affine(200), true), 6, 2.0), TooManyCandidates);
}

TEST_CASE("brute_interval keeps the lexicographically first optimum") {
    // Affine 4 points, K = 2: all three splits cost 4.
    CHECK(brute_interval(build_instance(affine(4), true), 2, 2.0).breaks() == std::vector<std::size_t>{0});
}

TEST_CASE("brute_interval agrees with the reference enumeration") {
    std::mt19937_64 rng(1);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = uniform_int(rng, 1, 18);
            const std::size_t k = uniform_int(rng, 1, std::min<std::size_t>(5, n));
            const auto inst = build_instance(mixed_front(rng, n), true);
            const auto ref = ref_interval_split(points_of(inst), k, alpha);
            const auto got = brute_interval(inst, k, alpha);
            CHECK(rel_close(got.total, ref.total, 1e-9));
            bool optimal = false;
            for (const auto& b : ref.optimal_breaks) optimal = optimal || b == got.breaks();
            CHECK(optimal);
        }
    }
}

TEST_CASE("brute_all_partitions examples") {
    const auto three = brute_all_partitions(build_instance(affine(3), true), 3, 2.0);
    CHECK(three.best.total == 0.0);
    CHECK(three.is_interval);
    const auto four = brute_all_partitions(build_instance(affine(4), true), 2, 2.0);
    CHECK(four.best.total == 4.0);
    CHECK(four.is_interval);
    CHECK(stirling2(4, 2) == 7);
    CHECK_THROWS_AS(brute_all_partitions(build_instance(affine(13), true), 2, 2.0), InstanceTooLarge);
    CHECK_THROWS_AS(brute_all_partitions(build_instance(affine(10), true), 5, 2.0), InstanceTooLarge);
    CHECK_THROWS_AS(brute_all_partitions(build_instance(affine(3), true), 4, 2.0), KOutOfRange);
}

TEST_CASE("unrestricted optimum is realised by intervals") {
    std::mt19937_64 rng(2);
    for (double alpha : {1.0, 2.0}) {
        for (int t = 0; t < 25; ++t) {
            const std::size_t n = uniform_int(rng, 1, 10);
            const std::size_t k = uniform_int(rng, 1, std::min<std::size_t>(4, n));
            const auto inst = build_instance(mixed_front(rng, n), true);
            const auto all = brute_all_partitions(inst, k, alpha);
            const auto intervals = brute_interval(inst, k, alpha);
            CHECK(rel_close(all.best.total, intervals.total, 1e-9));
            CHECK(all.is_interval);
            CHECK(is_interval_partition(all.best.assignment, k));
            CHECK(all.best.medoids.size() == k);
        }
    }
}

TEST_CASE("is_interval_partition") {
    CHECK(is_interval_partition({0, 0, 1, 1, 2}, 3));
    CHECK(is_interval_partition({1, 1, 0, 0}, 2));
    CHECK_FALSE(is_interval_partition({0, 1, 0}, 2));
    CHECK_FALSE(is_interval_partition({0, 0, 0}, 2));
}

TEST_CASE("seed_medoids") {
    const auto s = seed_medoids(20, 5, 42);
    CHECK(s.size() == 5);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    CHECK(s.back() < 20);
    CHECK(seed_medoids(20, 5, 42) == s);
    CHECK(seed_medoids(6, 6, 1) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("PAM from a symmetric seed converges to the optimum") {
    const auto inst = build_instance(affine(9), true);
    const auto out = pam_from_medoids(inst, {2, 4, 6}, 2.0, 100);
    CHECK(out.converged);
    CHECK(out.candidate.total == 12.0);
    CHECK(out.candidate.medoids == std::vector<std::size_t>{1, 4, 7});
    CHECK(out.iterations == 2);
}

TEST_CASE("PAM edge cases") {
    const auto inst = build_instance(affine(6), true);
    const auto singles = pam_run(inst, 6, 2.0, 9, 100);
    CHECK(singles.candidate.total == 0.0);
    CHECK(singles.converged);
    const auto capped = pam_from_medoids(build_instance(affine(30), true), {0, 1}, 2.0, 1);
    CHECK(capped.iterations == 1);
    CHECK_FALSE(capped.converged);
    CHECK_THROWS_AS(pam_run(inst, 7, 2.0, 1, 10), KOutOfRange);
}

TEST_CASE("PAM never beats the exact solver and its fixed points are intervals") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = uniform_int(rng, 2, 30);
        const std::size_t k = uniform_int(rng, 1, std::min<std::size_t>(5, n));
        const double alpha = t % 2 == 0 ? 2.0 : 1.0;
        const auto inst = build_instance(random_front(rng, n), true);
        const auto exact = solve_general(inst, k, alpha, true);
        const auto out = pam_run(inst, k, alpha, rng(), 200);
        CHECK(exact.total <= out.candidate.total * (1.0 + 1e-12));
        REQUIRE(out.converged);
        CHECK(is_local_minimum(inst, out.candidate, alpha));
        CHECK(is_interval_partition(out.candidate.assignment, k));
        CHECK(pam_heuristic(inst, k, alpha, 5, 200).total == pam_run(inst, k, alpha, 5, 200).candidate.total);
    }
}

TEST_CASE("is_local_minimum") {
    const auto inst = build_instance(affine(5), true);
    const auto best = solve_general(inst, 2, 2.0, true);
    CHECK(is_local_minimum(inst, to_partition(best, 5), 2.0));
    CHECK(is_local_minimum(inst, to_partition(solve_general(inst, 1, 2.0, true), 5), 2.0));

    // Two tight blobs far apart; moving one boundary point across breaks the condition.
    const auto blobs = build_instance(
        std::vector<Point2>{{0, 100}, {0.1, 99.9}, {0.2, 99.8}, {100, 0.2}, {100.1, 0.1}, {100.2, 0}}, true);
    const auto opt = to_partition(solve_general(blobs, 2, 2.0, true), 6);
    CHECK(is_local_minimum(blobs, opt, 2.0));
    auto swapped = opt;
    swapped.assignment[2] = swapped.assignment[3];
    swapped.total = 0.0;
    CHECK_FALSE(is_local_minimum(blobs, swapped, 2.0));

    // Right blocks, wrong medoid.
    auto off = to_partition(best, 5);
    off.medoids[1] = 4;
    CHECK_FALSE(is_local_minimum(inst, off, 2.0));

    PartitionCandidate bad;
    bad.assignment = {0, 0, 3, 1, 1};
    bad.medoids = {0, 3};
    CHECK_THROWS_AS(is_local_minimum(inst, bad, 2.0), MalformedPartition);
}

TEST_CASE("to_partition") {
    const auto inst = build_instance(affine(5), true);
    const auto p = to_partition(solve_general(inst, 2, 2.0, true), 5);
    CHECK(p.assignment == std::vector<std::size_t>{0, 0, 1, 1, 1});
    CHECK(p.medoids == std::vector<std::size_t>{0, 3});
    CHECK(p.total == 6.0);
}
