#include <algorithm>

#include "pfmed/kernels.hpp"

namespace pfmed::kernels::serial {

void add_distances(std::span<const Point2> points, std::span<double> acc, std::size_t lo,
                   std::size_t hi, Point2 target, const PowerDistance& dist) {
    for (std::size_t c = lo; c <= hi; ++c) {
        acc[c] += dist(points[c], target);
    }
}

ArgMin argmin(std::span<const double> values, std::size_t lo, std::size_t hi) {
    ArgMin best{lo, values[lo]};
    for (std::size_t c = lo + 1; c <= hi; ++c) {
        if (values[c] < best.value) {
            best = {c, values[c]};
        }
    }
    return best;
}

double sum_distances(std::span<const Point2> points, std::size_t lo, std::size_t hi,
                     Point2 center, const PowerDistance& dist) {
    double total = 0.0;
    for (std::size_t start = lo; start <= hi; start += sum_block) {
        const std::size_t stop = std::min(hi, start + sum_block - 1);
        double partial = 0.0;
        for (std::size_t k = start; k <= stop; ++k) {
            partial += dist(points[k], center);
        }
        total += partial;
    }
    return total;
}

}  // namespace pfmed::kernels::serial
