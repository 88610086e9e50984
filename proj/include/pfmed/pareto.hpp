#ifndef PFMED_PARETO_HPP
#define PFMED_PARETO_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

/**
 * @file pareto.hpp
 *
 * @brief Points in the objective plane, dominance relations and validated
 * two-dimensional Pareto fronts.
 *
 * Both objectives are minimised. All indices exposed by the C++ API are
 * 0-based positions in the canonically sorted instance (index 0 has the
 * smallest first objective). The command-line tool reports 1-based indices.
 */

namespace pfmed {

struct Point2 {
    double x1 = 0.0;
    double x2 = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Weak dominance: `y` is no worse than `z` on both objectives and differs from it.
bool dominates(Point2 y, Point2 z) noexcept;

/// True when each point is strictly better than the other on exactly one objective.
bool incomparable(Point2 y, Point2 z) noexcept;

/// Strict order of a sorted front: `y.x1 < z.x1` and `y.x2 > z.x2`.
bool precedes(Point2 y, Point2 z) noexcept;

/**
 * Non-dominated subset of `points`, sorted by increasing first objective.
 *
 * Uses weak dominance, so among points sharing one coordinate only the best
 * on the other survives, and duplicates collapse to one representative.
 * O(n log n).
 */
std::vector<Point2> extract_front(std::span<const Point2> points);

/**
 * Power of the Euclidean distance, `||a - b||^alpha`.
 *
 * alpha = 2 never takes a root and alpha = 1 takes exactly one square root;
 * other exponents go through `std::pow`.
 */
class PowerDistance {
public:
    explicit PowerDistance(double alpha);

    double alpha() const noexcept { return alpha_; }

    double operator()(Point2 a, Point2 b) const noexcept {
        const double dx = a.x1 - b.x1;
        const double dy = a.x2 - b.x2;
        const double sq = dx * dx + dy * dy;
        switch (mode_) {
            case Mode::squared:
                return sq;
            case Mode::euclidean:
                return std::sqrt(sq);
            case Mode::general:
                break;
        }
        return std::pow(sq, half_alpha_);
    }

private:
    enum class Mode { squared, euclidean, general };

    double alpha_;
    double half_alpha_;
    Mode mode_;
};

/// `||a - b||^alpha`; throws NonPositiveAlpha unless alpha is positive and finite.
double dist_pow(Point2 a, Point2 b, double alpha);

/// Squared Euclidean distance; order-equivalent to the distance itself.
inline double squared_distance(Point2 a, Point2 b) noexcept {
    const double dx = a.x1 - b.x1;
    const double dy = a.x2 - b.x2;
    return dx * dx + dy * dy;
}

/**
 * A non-empty, sorted two-dimensional Pareto front.
 *
 * Invariant: first objective strictly increasing and second strictly
 * decreasing along the sequence. Instances are immutable once built.
 */
class ParetoInstance {
public:
    std::size_t size() const noexcept { return points_.size(); }
    std::span<const Point2> points() const noexcept { return points_; }
    const Point2& operator[](std::size_t i) const noexcept { return points_[i]; }

    friend bool operator==(const ParetoInstance&, const ParetoInstance&) = default;

private:
    explicit ParetoInstance(std::vector<Point2> points) : points_(std::move(points)) {}
    friend ParetoInstance build_instance(std::span<const Point2>, bool);

    std::vector<Point2> points_;
};

/**
 * Builds a validated instance.
 *
 * With `assume_front` the points are sorted and checked to be pairwise
 * incomparable (NotAParetoFront carries the two offending input positions).
 * Otherwise dominated points and duplicates are removed first.
 * Throws EmptyInput, NonFinitePoint or NotAParetoFront.
 */
ParetoInstance build_instance(std::span<const Point2> points, bool assume_front);

}  // namespace pfmed

#endif  // PFMED_PARETO_HPP
