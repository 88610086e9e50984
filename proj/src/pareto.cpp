#include "pfmed/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pfmed/error.hpp"

namespace pfmed {

bool dominates(Point2 y, Point2 z) noexcept {
    return y.x1 <= z.x1 && y.x2 <= z.x2 && y != z;
}

bool precedes(Point2 y, Point2 z) noexcept {
    return y.x1 < z.x1 && y.x2 > z.x2;
}

bool incomparable(Point2 y, Point2 z) noexcept {
    return precedes(y, z) || precedes(z, y);
}

std::vector<Point2> extract_front(std::span<const Point2> points) {
    std::vector<Point2> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Point2& a, const Point2& b) {
        return a.x1 < b.x1 || (a.x1 == b.x1 && a.x2 < b.x2);
    });

    // A point survives iff it strictly improves the best second objective
    // seen so far; ties on either coordinate count as domination.
    std::vector<Point2> front;
    double best_x2 = std::numeric_limits<double>::infinity();
    for (const Point2& p : sorted) {
        if (p.x2 < best_x2) {
            front.push_back(p);
            best_x2 = p.x2;
        }
    }
    return front;
}

PowerDistance::PowerDistance(double alpha) : alpha_(alpha), half_alpha_(alpha / 2.0) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw NonPositiveAlpha(alpha);
    }
    if (alpha == 2.0) {
        mode_ = Mode::squared;
    } else if (alpha == 1.0) {
        mode_ = Mode::euclidean;
    } else {
        mode_ = Mode::general;
    }
}

double dist_pow(Point2 a, Point2 b, double alpha) {
    return PowerDistance(alpha)(a, b);
}

ParetoInstance build_instance(std::span<const Point2> points, bool assume_front) {
    if (points.empty()) {
        throw EmptyInput();
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].x1) || !std::isfinite(points[i].x2)) {
            throw NonFinitePoint(i);
        }
    }

    if (!assume_front) {
        return ParetoInstance(extract_front(points));
    }

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].x1 < points[b].x1;
    });

    std::vector<Point2> sorted;
    sorted.reserve(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && !precedes(points[order[i - 1]], points[order[i]])) {
            throw NotAParetoFront(std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i]));
        }
        sorted.push_back(points[order[i]]);
    }
    return ParetoInstance(std::move(sorted));
}

}  // namespace pfmed
