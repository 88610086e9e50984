#ifndef PFMED_ORACLE_HPP
#define PFMED_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pfmed/dp_solver.hpp"
#include "pfmed/pareto.hpp"

/**
 * @file oracle.hpp
 *
 * @brief Brute-force reference solvers and a Lloyd-style medoid heuristic.
 *
 * These are the independent verification routes for the DP solver; they are
 * exponential or heuristic and guarded accordingly.
 */

namespace pfmed {

/// Arbitrary (not necessarily interval) partition with one medoid per block.
struct PartitionCandidate {
    /// Block label of every point, in [0, K).
    std::vector<std::size_t> assignment;
    /// Medoid point index of every block.
    std::vector<std::size_t> medoids;
    double total = 0.0;
};

inline constexpr std::uint64_t max_interval_candidates = 10'000'000;
inline constexpr std::size_t max_partition_points = 12;
inline constexpr std::size_t max_partition_clusters = 4;

/// Number of interval partitions of n points into k clusters, C(n-1, k-1),
/// saturated at UINT64_MAX.
std::uint64_t interval_partition_count(std::size_t n, std::size_t k);

/**
 * Exhaustive search over all interval partitions, in lexicographic order of
 * the break vector; the first optimum found is kept.
 * Throws KOutOfRange, TooManyCandidates (above max_interval_candidates).
 */
IntervalClustering brute_interval(const ParetoInstance& inst, std::size_t k, double alpha);

struct PartitionSearchResult {
    PartitionCandidate best;
    bool is_interval = false;
};

/**
 * Exhaustive search over every partition into exactly k non-empty blocks
 * (restricted-growth strings in lexicographic order). On exact ties an
 * interval-shaped partition is preferred.
 * Throws KOutOfRange, InstanceTooLarge (n > 12 or k > 4).
 */
PartitionSearchResult brute_all_partitions(const ParetoInstance& inst, std::size_t k, double alpha);

/// True when every block occupies a contiguous index range.
bool is_interval_partition(const std::vector<std::size_t>& assignment, std::size_t k);

struct PamOutcome {
    PartitionCandidate candidate;
    std::size_t iterations = 0;
    /// False when max_iters stopped the alternation before a fixed point.
    bool converged = false;
};

/// K distinct indices drawn from `seed` by a partial Fisher-Yates shuffle over
/// raw std::mt19937_64 output (index i + draw % (n - i)), returned sorted.
std::vector<std::size_t> seed_medoids(std::size_t n, std::size_t k, std::uint64_t seed);

/**
 * Lloyd-style alternation: assign every point to its nearest medoid (the
 * smallest medoid index on ties), then move every medoid to the exact
 * alpha-medoid of its block, until nothing changes or `max_iters` rounds.
 */
PamOutcome pam_from_medoids(const ParetoInstance& inst, std::vector<std::size_t> medoids,
                            double alpha, std::size_t max_iters);

/// pam_from_medoids from seed_medoids(n, k, seed). Throws KOutOfRange.
PartitionCandidate pam_heuristic(const ParetoInstance& inst, std::size_t k, double alpha,
                                 std::uint64_t seed, std::size_t max_iters);
PamOutcome pam_run(const ParetoInstance& inst, std::size_t k, double alpha, std::uint64_t seed,
                   std::size_t max_iters);

/**
 * Nearest-medoid fixed point test: every point is at least as close to its
 * own medoid as to any other, and every medoid is an alpha-medoid of its
 * block (block costs compared up to 1e-12 relative rounding).
 * Throws MalformedPartition on inconsistent candidates.
 */
bool is_local_minimum(const ParetoInstance& inst, const PartitionCandidate& candidate, double alpha);

PartitionCandidate to_partition(const IntervalClustering& clustering, std::size_t n);

}  // namespace pfmed

#endif  // PFMED_ORACLE_HPP
