#ifndef PFMED_DP_SOLVER_HPP
#define PFMED_DP_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pfmed/kernels.hpp"
#include "pfmed/pareto.hpp"

/**
 * @file dp_solver.hpp
 *
 * @brief Exact solvers for clustering a 2-d Pareto front into K interval
 * clusters minimising the summed alpha-medoid costs.
 *
 * Optimal clusterings of a front consist of contiguous index ranges, so all
 * solvers search over interval partitions. Ties between splits go to the
 * smallest split index.
 */

namespace pfmed {

struct IntervalCluster {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t medoid = 0;
    double cost = 0.0;

    std::size_t size() const noexcept { return last - first + 1; }
};

struct IntervalClustering {
    /// Contiguous ranges in increasing order, covering [0, n).
    std::vector<IntervalCluster> clusters;
    double total = 0.0;

    /// Last index of every cluster but the final one.
    std::vector<std::size_t> breaks() const;
};

/**
 * Optimal prefix costs: `at(k, i)` is the best cost of splitting points
 * `[0..i]` into k clusters (k is 1-based, i is 0-based). Cells outside the
 * window that the final answer can depend on are left as NaN.
 */
class DpTable {
public:
    DpTable() = default;
    DpTable(std::size_t k, std::size_t n);

    std::size_t clusters() const noexcept { return k_; }
    std::size_t points() const noexcept { return n_; }
    double at(std::size_t k, std::size_t i) const noexcept { return cells_[(k - 1) * n_ + i]; }
    double& at(std::size_t k, std::size_t i) noexcept { return cells_[(k - 1) * n_ + i]; }
    bool populated(std::size_t k, std::size_t i) const noexcept;

private:
    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::vector<double> cells_;
};

struct SolverStats {
    /// Distance terms evaluated by the cost scans (forward pass and backtracking).
    std::uint64_t cost_terms = 0;
    /// Bytes held by the table and scan buffers of the run.
    std::size_t buffer_bytes = 0;
};

struct SolveOptions {
    bool prune = true;
    Parallelism parallelism{};
    /// For K = 1: use the dichotomic search when the front is convex or concave.
    bool use_dichotomic = true;
    SolverStats* stats = nullptr;
    /// When set, receives the DP matrix of the general path.
    DpTable* table = nullptr;
};

/// One cluster; dichotomic search when requested and the front shape allows it.
IntervalClustering solve_k1(const ParetoInstance& inst, double alpha, bool use_dichotomic);

/// Best split into `[0..j]` and `[j+1..n-1]`. Throws TooFewPoints when n < 2.
IntervalClustering solve_k2(const ParetoInstance& inst, double alpha, bool prune);
IntervalClustering solve_k2(const ParetoInstance& inst, double alpha, const SolveOptions& options);

struct LocalMinimumReport {
    /// Clusters are `[0..split]` and `[split+1..n-1]`.
    std::size_t split = 0;
    std::pair<std::size_t, std::size_t> medoids{};
    double total = 0.0;
};

/// Every two-cluster split whose medoids satisfy the nearest-medoid condition
/// at the two boundary points, sorted by split. Throws TooFewPoints.
std::vector<LocalMinimumReport> enumerate_local_minima_k2(const ParetoInstance& inst, double alpha,
                                                          Parallelism par = {});

/**
 * Optimal K-clustering; dispatches K = 1, 2 and K = n to the special cases.
 *
 * The general path fills the DP matrix column by column: one suffix scan per
 * right end i serves every cluster count, then is discarded, so memory stays
 * O(Kn). With pruning, the scan for column i stops as soon as a single
 * cluster `[j..i]` alone costs more than the incumbent of every open cell.
 * Throws KOutOfRange unless 1 <= K <= n.
 */
IntervalClustering solve_general(const ParetoInstance& inst, std::size_t k, double alpha, bool prune);
IntervalClustering solve_general(const ParetoInstance& inst, std::size_t k, double alpha,
                                 const SolveOptions& options);

/// Recomputes the total of `clustering` with exhaustive medoid scans.
/// Throws MalformedPartition when the ranges do not partition [0, n).
double objective_of(const ParetoInstance& inst, const IntervalClustering& clustering, double alpha);

/// Builds a clustering from the last index of every cluster but the final one,
/// with exhaustive medoid scans. Throws MalformedPartition.
IntervalClustering clustering_from_breaks(const ParetoInstance& inst,
                                          const std::vector<std::size_t>& breaks, double alpha);

}  // namespace pfmed

#endif  // PFMED_DP_SOLVER_HPP
