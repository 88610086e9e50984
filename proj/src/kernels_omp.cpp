#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pfmed/kernels.hpp"

namespace pfmed {

unsigned resolve_workers(unsigned workers) noexcept {
    if (workers != 0) {
        return workers;
    }
    const int available = omp_get_max_threads();
    return available > 0 ? static_cast<unsigned>(available) : 1u;
}

namespace kernels::omp {

void add_distances(std::span<const Point2> points, std::span<double> acc, std::size_t lo,
                   std::size_t hi, Point2 target, const PowerDistance& dist, unsigned workers) {
    const auto first = static_cast<std::int64_t>(lo);
    const auto last = static_cast<std::int64_t>(hi);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::int64_t c = first; c <= last; ++c) {
        acc[c] += dist(points[c], target);
    }
}

ArgMin argmin(std::span<const double> values, std::size_t lo, std::size_t hi, unsigned workers) {
    ArgMin best{lo, values[lo]};
    const auto first = static_cast<std::int64_t>(lo);
    const auto last = static_cast<std::int64_t>(hi);
#pragma omp parallel num_threads(workers)
    {
        ArgMin local{hi + 1, 0.0};
#pragma omp for schedule(static) nowait
        for (std::int64_t c = first; c <= last; ++c) {
            const auto idx = static_cast<std::size_t>(c);
            if (local.index > hi || values[idx] < local.value) {
                local = {idx, values[idx]};
            }
        }
        // (value, index) lexicographic min is order independent.
#pragma omp critical(pfmed_argmin)
        {
            if (local.index <= hi &&
                (local.value < best.value || (local.value == best.value && local.index < best.index))) {
                best = local;
            }
        }
    }
    return best;
}

double sum_distances(std::span<const Point2> points, std::size_t lo, std::size_t hi,
                     Point2 center, const PowerDistance& dist, unsigned workers) {
    const std::size_t blocks = (hi - lo) / sum_block + 1;
    std::vector<double> partial(blocks, 0.0);
    const auto count = static_cast<std::int64_t>(blocks);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::int64_t b = 0; b < count; ++b) {
        const std::size_t start = lo + static_cast<std::size_t>(b) * sum_block;
        const std::size_t stop = std::min(hi, start + sum_block - 1);
        double s = 0.0;
        for (std::size_t k = start; k <= stop; ++k) {
            s += dist(points[k], center);
        }
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : partial) {
        total += s;
    }
    return total;
}

}  // namespace kernels::omp

namespace kernels {

namespace {

bool go_parallel(std::size_t lo, std::size_t hi, const Parallelism& par, unsigned& workers) {
    workers = resolve_workers(par.workers);
    return workers > 1 && hi - lo + 1 >= std::max<std::size_t>(par.grain, 1);
}

}  // namespace

void add_distances(std::span<const Point2> points, std::span<double> acc, std::size_t lo,
                   std::size_t hi, Point2 target, const PowerDistance& dist,
                   const Parallelism& par) {
    unsigned workers = 1;
    if (go_parallel(lo, hi, par, workers)) {
        omp::add_distances(points, acc, lo, hi, target, dist, workers);
    } else {
        serial::add_distances(points, acc, lo, hi, target, dist);
    }
}

ArgMin argmin(std::span<const double> values, std::size_t lo, std::size_t hi,
              const Parallelism& par) {
    unsigned workers = 1;
    if (go_parallel(lo, hi, par, workers)) {
        return omp::argmin(values, lo, hi, workers);
    }
    return serial::argmin(values, lo, hi);
}

double sum_distances(std::span<const Point2> points, std::size_t lo, std::size_t hi,
                     Point2 center, const PowerDistance& dist, const Parallelism& par) {
    unsigned workers = 1;
    // Blocks are the unit of parallel work, so the grain is measured in blocks too.
    if (go_parallel(lo, hi, par, workers) && hi - lo + 1 > sum_block) {
        return omp::sum_distances(points, lo, hi, center, dist, workers);
    }
    return serial::sum_distances(points, lo, hi, center, dist);
}

}  // namespace kernels
}  // namespace pfmed
