#include "pfmed/interval_costs.hpp"

#include <algorithm>
#include <string>

#include "pfmed/error.hpp"

namespace pfmed {

namespace {

void check_interval(const ParetoInstance& inst, std::size_t i, std::size_t last) {
    if (i > last || last >= inst.size()) {
        throw IndexOutOfRange("interval [" + std::to_string(i) + ", " + std::to_string(last) +
                              "] is not inside [0, " + std::to_string(inst.size()) + ")");
    }
}

}  // namespace

double center_cost(const ParetoInstance& inst, std::size_t i, std::size_t last, std::size_t center,
                   const PowerDistance& dist) {
    const Point2 c = inst[center];
    double total = 0.0;
    for (std::size_t k = i; k <= last; ++k) {
        total += dist(inst[k], c);
    }
    return total;
}

ClusterCost cluster_cost_naive(const ParetoInstance& inst, std::size_t i, std::size_t last,
                               double alpha) {
    check_interval(inst, i, last);
    const PowerDistance dist(alpha);
    ClusterCost best{center_cost(inst, i, last, i, dist), i};
    for (std::size_t c = i + 1; c <= last; ++c) {
        const double value = center_cost(inst, i, last, c, dist);
        if (value < best.cost) {
            best = {value, c};
        }
    }
    return best;
}

ClusterCost medoid_dichotomic(const ParetoInstance& inst, std::size_t i, std::size_t last,
                              double alpha, DichotomicStats* stats) {
    check_interval(inst, i, last);
    const PowerDistance dist(alpha);
    std::size_t probes = 0;
    auto probe = [&](std::size_t c) {
        ++probes;
        return center_cost(inst, i, last, c, dist);
    };
    auto finish = [&](ClusterCost result) {
        if (stats != nullptr) {
            stats->probes = probes;
        }
        return result;
    };

    if (i == last) {
        return finish({0.0, i});
    }
    if (last - i == 1) {
        // Both endpoints cost the same; the smaller index wins.
        return finish({dist(inst[i], inst[last]), i});
    }
    if (last - i == 2) {
        return finish({probe(i + 1), i + 1});
    }

    // Endpoints are never optimal for three or more points.
    std::size_t lo = i + 1;
    std::size_t hi = last - 1;
    std::optional<double> lo_value;
    std::optional<double> hi_value;
    while (hi - lo >= 2) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const double here = probe(mid);
        const double next = probe(mid + 1);
        if (here == next) {
            lo = mid;
            lo_value = here;
            hi = mid + 1;
            hi_value = next;
        } else if (here < next) {
            hi = mid;
            hi_value = here;
        } else {
            lo = mid + 1;
            lo_value = next;
        }
    }
    if (!lo_value) {
        lo_value = probe(lo);
    }
    if (lo == hi) {
        return finish({*lo_value, lo});
    }
    if (!hi_value) {
        hi_value = probe(hi);
    }
    return finish(*lo_value <= *hi_value ? ClusterCost{*lo_value, lo} : ClusterCost{*hi_value, hi});
}

FrontShape check_shape(const ParetoInstance& inst, std::size_t i, std::size_t last) {
    check_interval(inst, i, last);
    if (last - i < 2) {
        return FrontShape::convex;
    }
    auto slope = [&](std::size_t k) {
        return (inst[k + 1].x2 - inst[k].x2) / (inst[k + 1].x1 - inst[k].x1);
    };
    bool nondecreasing = true;
    bool nonincreasing = true;
    double previous = slope(i);
    for (std::size_t k = i + 1; k < last; ++k) {
        const double s = slope(k);
        nondecreasing = nondecreasing && s >= previous;
        nonincreasing = nonincreasing && s <= previous;
        previous = s;
    }
    if (nondecreasing) {
        return FrontShape::convex;
    }
    return nonincreasing ? FrontShape::concave : FrontShape::neither;
}

// ---------------------------------------------------------------------------
// Prefix scan

PrefixScanner::PrefixScanner(const ParetoInstance& inst, const PowerDistance& dist,
                             std::optional<std::size_t> center_upper_bound, Parallelism par)
    : inst_(&inst),
      dist_(dist),
      bound_(center_upper_bound.value_or(inst.size() - 1)),
      par_(par),
      acc_(inst.size(), 0.0),
      cost_(inst.size(), 0.0),
      medoid_(inst.size(), 0) {
    if (bound_ >= inst.size()) {
        throw InvalidBound("center upper bound " + std::to_string(bound_) + " is not a valid index");
    }
}

void PrefixScanner::extend_to(std::size_t j) {
    if (j >= inst_->size()) {
        throw IndexOutOfRange("prefix end " + std::to_string(j) + " is out of range");
    }
    while (next_ <= j) {
        step();
    }
}

void PrefixScanner::step() {
    const std::size_t j = next_;
    const auto points = inst_->points();
    if (j == 0) {
        acc_[0] = 0.0;
        cost_[0] = 0.0;
        medoid_[0] = 0;
        ++next_;
        return;
    }

    const std::size_t lo = medoid_[j - 1];
    const std::size_t kept = std::min(j - 1, bound_);
    kernels::add_distances(points, acc_, lo, kept, points[j], dist_, par_);
    terms_ += kept - lo + 1;

    if (j <= bound_) {
        acc_[j] = kernels::sum_distances(points, 0, j - 1, points[j], dist_, par_);
        terms_ += j;
    }

    const ArgMin best = kernels::argmin(acc_, lo, std::min(j, bound_), par_);
    cost_[j] = best.value;
    medoid_[j] = best.index;
    ++next_;
}

CostScan PrefixScanner::to_scan() const {
    CostScan scan;
    scan.anchor = 0;
    scan.direction = ScanDirection::prefix;
    scan.cost.assign(cost_.begin(), cost_.begin() + static_cast<std::ptrdiff_t>(next_));
    scan.medoid.assign(medoid_.begin(), medoid_.begin() + static_cast<std::ptrdiff_t>(next_));
    scan.terms = terms_;
    return scan;
}

// ---------------------------------------------------------------------------
// Suffix scan

SuffixScanner::SuffixScanner(const ParetoInstance& inst, const PowerDistance& dist, Parallelism par)
    : inst_(&inst),
      dist_(dist),
      par_(par),
      acc_(inst.size(), 0.0),
      cost_(inst.size(), 0.0),
      medoid_(inst.size(), 0) {}

void SuffixScanner::reset(std::size_t anchor, std::optional<std::size_t> center_lower_bound) {
    if (anchor >= inst_->size()) {
        throw IndexOutOfRange("suffix anchor " + std::to_string(anchor) + " is out of range");
    }
    const std::size_t bound = center_lower_bound.value_or(0);
    if (bound > anchor) {
        throw InvalidBound("center lower bound " + std::to_string(bound) + " exceeds anchor " +
                           std::to_string(anchor));
    }
    anchor_ = anchor;
    bound_ = bound;
    lowest_ = anchor + 1;
}

void SuffixScanner::extend_to(std::size_t j) {
    if (j > anchor_) {
        throw IndexOutOfRange("suffix start " + std::to_string(j) + " is past the anchor");
    }
    while (lowest_ > j) {
        step();
    }
}

void SuffixScanner::step() {
    const std::size_t j = lowest_ - 1;
    const auto points = inst_->points();
    if (j == anchor_) {
        acc_[j] = 0.0;
        cost_[j] = 0.0;
        medoid_[j] = j;
        lowest_ = j;
        return;
    }

    const std::size_t hi = medoid_[j + 1];
    const std::size_t kept = std::max(j + 1, bound_);
    kernels::add_distances(points, acc_, kept, hi, points[j], dist_, par_);
    terms_ += hi - kept + 1;

    if (j >= bound_) {
        acc_[j] = kernels::sum_distances(points, j + 1, anchor_, points[j], dist_, par_);
        terms_ += anchor_ - j;
    }

    const ArgMin best = kernels::argmin(acc_, std::max(j, bound_), hi, par_);
    cost_[j] = best.value;
    medoid_[j] = best.index;
    lowest_ = j;
}

CostScan SuffixScanner::to_scan() const {
    CostScan scan;
    scan.anchor = anchor_;
    scan.direction = ScanDirection::suffix;
    scan.cost.assign(cost_.begin(), cost_.begin() + static_cast<std::ptrdiff_t>(anchor_ + 1));
    scan.medoid.assign(medoid_.begin(), medoid_.begin() + static_cast<std::ptrdiff_t>(anchor_ + 1));
    scan.terms = terms_;
    return scan;
}

CostScan prefix_costs(const ParetoInstance& inst, double alpha,
                      std::optional<std::size_t> center_upper_bound, Parallelism par) {
    PrefixScanner scanner(inst, PowerDistance(alpha), center_upper_bound, par);
    scanner.extend_to(inst.size() - 1);
    return scanner.to_scan();
}

CostScan suffix_costs_to(const ParetoInstance& inst, std::size_t last, double alpha,
                         std::optional<std::size_t> center_lower_bound, Parallelism par) {
    if (last >= inst.size()) {
        throw IndexOutOfRange("suffix anchor " + std::to_string(last) + " is out of range");
    }
    SuffixScanner scanner(inst, PowerDistance(alpha), par);
    scanner.reset(last, center_lower_bound);
    scanner.extend_to(0);
    return scanner.to_scan();
}

}  // namespace pfmed
