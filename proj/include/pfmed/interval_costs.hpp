#ifndef PFMED_INTERVAL_COSTS_HPP
#define PFMED_INTERVAL_COSTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pfmed/kernels.hpp"
#include "pfmed/pareto.hpp"

/**
 * @file interval_costs.hpp
 *
 * @brief Costs and alpha-medoids of interval clusters `[i..last]` of a front.
 *
 * The cost of a cluster with a given center `c` is the sum over members of
 * `||p_k - p_c||^alpha`; the cluster cost is its minimum over members `c`,
 * and the alpha-medoid is the smallest minimising index.
 */

namespace pfmed {

struct ClusterCost {
    double cost = 0.0;
    std::size_t medoid = 0;
};

enum class FrontShape { convex, concave, neither };

enum class ScanDirection { prefix, suffix };

/**
 * Costs of all clusters sharing one endpoint.
 *
 * prefix (anchor 0): `cost[j]`/`medoid[j]` describe `[0..j]` for every j.
 * suffix (anchor a): `cost[j]`/`medoid[j]` describe `[j..a]` for every j <= a.
 */
struct CostScan {
    std::size_t anchor = 0;
    ScanDirection direction = ScanDirection::prefix;
    std::vector<double> cost;
    std::vector<std::size_t> medoid;
    /// Number of distance terms evaluated.
    std::uint64_t terms = 0;
};

/// Exhaustive scan over all centers of `[i..last]`; O((last - i)^2).
ClusterCost cluster_cost_naive(const ParetoInstance& inst, std::size_t i, std::size_t last,
                               double alpha);

/// Center cost of `[i..last]` for a fixed center, summed in ascending member order.
double center_cost(const ParetoInstance& inst, std::size_t i, std::size_t last, std::size_t center,
                   const PowerDistance& dist);

struct DichotomicStats {
    /// Number of center costs evaluated (each one a linear pass).
    std::size_t probes = 0;
};

/**
 * Dichotomic alpha-medoid search over the interior of `[i..last]`.
 *
 * Exact when the sub-front is convex or concave, since the center cost is
 * then unimodal in the center index. On other fronts the result may be
 * suboptimal; see check_shape. O((last - i) log(last - i)).
 */
ClusterCost medoid_dichotomic(const ParetoInstance& inst, std::size_t i, std::size_t last,
                              double alpha, DichotomicStats* stats = nullptr);

/// Convexity class of `[i..last]` from its consecutive slopes. Affine and
/// fronts of at most two points report convex.
FrontShape check_shape(const ParetoInstance& inst, std::size_t i, std::size_t last);

/**
 * Incremental prefix scan: clusters `[0..j]` for j = 0, 1, ... on demand.
 *
 * Keeps one accumulator per candidate center and extends it by one term per
 * step. Candidates are restricted to `[medoid(j-1) .. min(j, bound)]` since
 * medoids of nested prefixes are nondecreasing. O(n) memory.
 */
class PrefixScanner {
public:
    PrefixScanner(const ParetoInstance& inst, const PowerDistance& dist,
                  std::optional<std::size_t> center_upper_bound = std::nullopt,
                  Parallelism par = {});

    /// Compute clusters up to and including `[0..j]`.
    void extend_to(std::size_t j);

    /// Number of prefixes computed so far.
    std::size_t computed() const noexcept { return next_; }
    double cost(std::size_t j) const noexcept { return cost_[j]; }
    std::size_t medoid(std::size_t j) const noexcept { return medoid_[j]; }
    std::uint64_t terms() const noexcept { return terms_; }

    CostScan to_scan() const;

private:
    void step();

    const ParetoInstance* inst_;
    PowerDistance dist_;
    std::size_t bound_;
    Parallelism par_;
    std::vector<double> acc_;
    std::vector<double> cost_;
    std::vector<std::size_t> medoid_;
    std::size_t next_ = 0;
    std::uint64_t terms_ = 0;
};

/**
 * Incremental suffix scan towards a fixed right end `anchor`: clusters
 * `[j..anchor]` for j = anchor, anchor - 1, ... on demand.
 *
 * Candidates are restricted to `[max(j, lower_bound) .. medoid(j+1)]`.
 * A scanner can be re-anchored with reset() to reuse its buffers.
 */
class SuffixScanner {
public:
    SuffixScanner(const ParetoInstance& inst, const PowerDistance& dist, Parallelism par = {});

    /// Start a new scan ending at `anchor`. `lower_bound` must not exceed the
    /// medoid of `[0..anchor]`.
    void reset(std::size_t anchor, std::optional<std::size_t> center_lower_bound = std::nullopt);

    /// Compute clusters down to and including `[j..anchor]`.
    void extend_to(std::size_t j);

    std::size_t anchor() const noexcept { return anchor_; }
    /// Smallest left end computed so far; anchor + 1 when nothing is computed.
    std::size_t lowest() const noexcept { return lowest_; }
    double cost(std::size_t j) const noexcept { return cost_[j]; }
    std::size_t medoid(std::size_t j) const noexcept { return medoid_[j]; }
    /// Terms evaluated since construction (across resets).
    std::uint64_t terms() const noexcept { return terms_; }

    CostScan to_scan() const;

private:
    void step();

    const ParetoInstance* inst_;
    PowerDistance dist_;
    Parallelism par_;
    std::size_t anchor_ = 0;
    std::size_t bound_ = 0;
    std::size_t lowest_ = 1;
    std::vector<double> acc_;
    std::vector<double> cost_;
    std::vector<std::size_t> medoid_;
    std::uint64_t terms_ = 0;
};

/// All prefix clusters `[0..j]`. Throws InvalidBound if the bound is >= n.
CostScan prefix_costs(const ParetoInstance& inst, double alpha,
                      std::optional<std::size_t> center_upper_bound = std::nullopt,
                      Parallelism par = {});

/// All clusters `[j..last]` for j <= last. Throws IndexOutOfRange / InvalidBound.
CostScan suffix_costs_to(const ParetoInstance& inst, std::size_t last, double alpha,
                         std::optional<std::size_t> center_lower_bound = std::nullopt,
                         Parallelism par = {});

}  // namespace pfmed

#endif  // PFMED_INTERVAL_COSTS_HPP
