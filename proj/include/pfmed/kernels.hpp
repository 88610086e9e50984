#ifndef PFMED_KERNELS_HPP
#define PFMED_KERNELS_HPP

#include <cstddef>
#include <span>

#include "pfmed/pareto.hpp"

/**
 * @file kernels.hpp
 *
 * @brief Data-parallel inner loops of the cost scans.
 *
 * Each kernel has a serial reference implementation and an OpenMP one. The
 * two produce bit-identical results for every worker count: accumulators
 * are updated element-wise, argmin reductions break ties on the smallest
 * index, and sums are formed over fixed blocks of `sum_block` terms that are
 * combined in order.
 */

namespace pfmed {

/// Worker configuration for the parallel kernels.
struct Parallelism {
    /// Number of OpenMP workers; 0 selects the runtime default.
    unsigned workers = 0;
    /// Ranges shorter than this run serially even when workers > 1.
    std::size_t grain = 2048;
};

/// Resolves `workers == 0` to the OpenMP default (at least 1).
unsigned resolve_workers(unsigned workers) noexcept;

struct ArgMin {
    std::size_t index = 0;
    double value = 0.0;
};

namespace kernels {

inline constexpr std::size_t sum_block = 1024;

namespace serial {

/// acc[c] += dist(points[c], target) for c in [lo, hi].
void add_distances(std::span<const Point2> points, std::span<double> acc, std::size_t lo,
                   std::size_t hi, Point2 target, const PowerDistance& dist);

/// Smallest value over values[lo..hi]; the smallest index wins ties.
ArgMin argmin(std::span<const double> values, std::size_t lo, std::size_t hi);

/// Sum of dist(points[k], center) for k in [lo, hi], in fixed ordered blocks.
double sum_distances(std::span<const Point2> points, std::size_t lo, std::size_t hi,
                     Point2 center, const PowerDistance& dist);

}  // namespace serial

namespace omp {

void add_distances(std::span<const Point2> points, std::span<double> acc, std::size_t lo,
                   std::size_t hi, Point2 target, const PowerDistance& dist, unsigned workers);

ArgMin argmin(std::span<const double> values, std::size_t lo, std::size_t hi, unsigned workers);

double sum_distances(std::span<const Point2> points, std::size_t lo, std::size_t hi,
                     Point2 center, const PowerDistance& dist, unsigned workers);

}  // namespace omp

// Dispatchers: serial reference for one worker or short ranges, OpenMP otherwise.

void add_distances(std::span<const Point2> points, std::span<double> acc, std::size_t lo,
                   std::size_t hi, Point2 target, const PowerDistance& dist,
                   const Parallelism& par);

ArgMin argmin(std::span<const double> values, std::size_t lo, std::size_t hi,
              const Parallelism& par);

double sum_distances(std::span<const Point2> points, std::size_t lo, std::size_t hi,
                     Point2 center, const PowerDistance& dist, const Parallelism& par);

}  // namespace kernels
}  // namespace pfmed

#endif  // PFMED_KERNELS_HPP
