#include "pfmed/dp_solver.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "pfmed/error.hpp"
#include "pfmed/interval_costs.hpp"

namespace pfmed {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

std::size_t scan_bytes(std::size_t n) {
    // accumulators, costs and medoids
    return n * (2 * sizeof(double) + sizeof(std::size_t));
}

void record(const SolveOptions& options, std::uint64_t terms, std::size_t bytes) {
    if (options.stats != nullptr) {
        options.stats->cost_terms = terms;
        options.stats->buffer_bytes = bytes;
    }
}

IntervalClustering singletons(const ParetoInstance& inst) {
    IntervalClustering out;
    out.clusters.reserve(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        out.clusters.push_back({i, i, i, 0.0});
    }
    return out;
}

}  // namespace

std::vector<std::size_t> IntervalClustering::breaks() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c + 1 < clusters.size(); ++c) {
        out.push_back(clusters[c].last);
    }
    return out;
}

DpTable::DpTable(std::size_t k, std::size_t n)
    : k_(k), n_(n), cells_(k * n, std::numeric_limits<double>::quiet_NaN()) {}

bool DpTable::populated(std::size_t k, std::size_t i) const noexcept {
    if (k == 0 || k > k_ || i >= n_) {
        return false;
    }
    if (k == k_) {
        return i == n_ - 1;
    }
    if (k == 1) {
        return i + k_ <= n_;
    }
    return i + 1 >= k && i + k_ <= n_ + k - 1;
}

IntervalClustering solve_k1(const ParetoInstance& inst, double alpha, bool use_dichotomic) {
    const std::size_t last = inst.size() - 1;
    const bool dichotomic = use_dichotomic && check_shape(inst, 0, last) != FrontShape::neither;
    const ClusterCost best = dichotomic ? medoid_dichotomic(inst, 0, last, alpha)
                                        : cluster_cost_naive(inst, 0, last, alpha);
    IntervalClustering out;
    out.clusters.push_back({0, last, best.medoid, best.cost});
    out.total = best.cost;
    return out;
}

IntervalClustering solve_k2(const ParetoInstance& inst, double alpha, bool prune) {
    SolveOptions options;
    options.prune = prune;
    return solve_k2(inst, alpha, options);
}

IntervalClustering solve_k2(const ParetoInstance& inst, double alpha, const SolveOptions& options) {
    const std::size_t n = inst.size();
    if (n < 2) {
        throw TooFewPoints("two clusters need at least two points");
    }
    const PowerDistance dist(alpha);
    PrefixScanner prefix(inst, dist, std::nullopt, options.parallelism);
    SuffixScanner suffix(inst, dist, options.parallelism);

    std::size_t best_split = 0;
    double best = infinity;

    if (!options.prune) {
        prefix.extend_to(n - 1);
        suffix.reset(n - 1, prefix.medoid(n - 1));
        suffix.extend_to(1);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double candidate = prefix.cost(j) + suffix.cost(j + 1);
            if (candidate < best) {
                best = candidate;
                best_split = j;
            }
        }
    } else {
        // Seed with the middle split, then widen in both directions until a
        // single side alone exceeds the incumbent.
        const std::size_t middle = n / 2 - 1;
        prefix.extend_to(middle);
        suffix.reset(n - 1, prefix.medoid(middle));
        suffix.extend_to(middle + 1);
        best = prefix.cost(middle) + suffix.cost(middle + 1);
        best_split = middle;

        auto consider = [&](std::size_t j) {
            const double candidate = prefix.cost(j) + suffix.cost(j + 1);
            if (candidate < best || (candidate == best && j < best_split)) {
                best = candidate;
                best_split = j;
            }
        };
        for (std::size_t j = middle; j-- > 0;) {
            suffix.extend_to(j + 1);
            if (suffix.cost(j + 1) > best) {
                break;
            }
            consider(j);
        }
        for (std::size_t j = middle + 1; j + 1 < n; ++j) {
            prefix.extend_to(j);
            if (prefix.cost(j) > best) {
                break;
            }
            consider(j);
        }
    }

    IntervalClustering out;
    out.clusters.push_back({0, best_split, prefix.medoid(best_split), prefix.cost(best_split)});
    out.clusters.push_back(
        {best_split + 1, n - 1, suffix.medoid(best_split + 1), suffix.cost(best_split + 1)});
    out.total = best;
    record(options, prefix.terms() + suffix.terms(), 2 * scan_bytes(n));
    return out;
}

std::vector<LocalMinimumReport> enumerate_local_minima_k2(const ParetoInstance& inst, double alpha,
                                                          Parallelism par) {
    const std::size_t n = inst.size();
    if (n < 2) {
        throw TooFewPoints("two clusters need at least two points");
    }
    const PowerDistance dist(alpha);
    PrefixScanner prefix(inst, dist, std::nullopt, par);
    prefix.extend_to(n - 1);
    SuffixScanner suffix(inst, dist, par);
    suffix.reset(n - 1, prefix.medoid(n - 1));
    suffix.extend_to(1);

    // Points are ordered along the front, so the nearest-medoid condition
    // holds for every point once it holds at the two boundary points.
    std::vector<LocalMinimumReport> reports;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Point2 left = inst[prefix.medoid(j)];
        const Point2 right = inst[suffix.medoid(j + 1)];
        const bool last_stays = squared_distance(inst[j], right) >= squared_distance(inst[j], left);
        const bool first_stays =
            squared_distance(inst[j + 1], right) <= squared_distance(inst[j + 1], left);
        if (last_stays && first_stays) {
            reports.push_back({j, {prefix.medoid(j), suffix.medoid(j + 1)},
                               prefix.cost(j) + suffix.cost(j + 1)});
        }
    }
    return reports;
}

IntervalClustering solve_general(const ParetoInstance& inst, std::size_t k, double alpha, bool prune) {
    SolveOptions options;
    options.prune = prune;
    return solve_general(inst, k, alpha, options);
}

IntervalClustering solve_general(const ParetoInstance& inst, std::size_t k, double alpha,
                                 const SolveOptions& options) {
    const std::size_t n = inst.size();
    if (k < 1 || k > n) {
        throw KOutOfRange(k, n);
    }
    if (k == n) {
        const PowerDistance validate(alpha);
        record(options, 0, 0);
        return singletons(inst);
    }
    if (k == 1) {
        record(options, 0, 0);
        return solve_k1(inst, alpha, options.use_dichotomic);
    }
    if (k == 2) {
        return solve_k2(inst, alpha, options);
    }

    const PowerDistance dist(alpha);
    DpTable table(k, n);
    PrefixScanner prefix(inst, dist, std::nullopt, options.parallelism);
    prefix.extend_to(n - 1);
    for (std::size_t i = 0; i + k <= n; ++i) {
        table.at(1, i) = prefix.cost(i);
    }

    SuffixScanner suffix(inst, dist, options.parallelism);
    std::vector<double> best(k + 1, infinity);
    std::vector<std::size_t> best_split(k + 1, 0);
    std::vector<char> open(k + 1, 0);

    // Evaluates cells (lo..hi, i) from one suffix scan ending at i, trying
    // splits j = i-1, i-2, ... so the smallest j wins ties through `<=`.
    auto solve_column = [&](std::size_t i, std::size_t lo, std::size_t hi) {
        suffix.reset(i, prefix.medoid(i));
        for (std::size_t c = lo; c <= hi; ++c) {
            best[c] = infinity;
            open[c] = 1;
        }
        for (std::size_t start = i + 1; start-- > lo - 1;) {
            suffix.extend_to(start);
            const double f = suffix.cost(start);
            const std::size_t j = start - 1;
            bool any_open = false;
            for (std::size_t c = lo; c <= hi; ++c) {
                if (!open[c]) {
                    continue;
                }
                // Every split left of j carries a cluster at least as costly as f.
                if (options.prune && f > best[c]) {
                    open[c] = 0;
                    continue;
                }
                const double candidate = table.at(c - 1, j) + f;
                if (candidate <= best[c]) {
                    best[c] = candidate;
                    best_split[c] = j;
                }
                if (j + 2 == c) {
                    open[c] = 0;
                }
                any_open = any_open || open[c];
            }
            if (!any_open) {
                break;
            }
        }
    };

    for (std::size_t i = 1; i < n; ++i) {
        std::size_t lo = 2;
        std::size_t hi = 0;
        if (i + 1 == n) {
            lo = hi = k;
        } else {
            // Rows below k must leave at least one point per remaining cluster.
            if (i + k + 1 > n) {
                lo = std::max<std::size_t>(2, i + k + 1 - n);
            }
            hi = std::min(k - 1, i + 1);
        }
        if (lo > hi) {
            continue;
        }
        solve_column(i, lo, hi);
        for (std::size_t c = lo; c <= hi; ++c) {
            table.at(c, i) = best[c];
        }
    }

    // Backtracking re-runs one suffix scan per recovered boundary.
    std::vector<IntervalCluster> reversed;
    std::size_t i = n - 1;
    for (std::size_t c = k; c >= 2; --c) {
        solve_column(i, c, c);
        assert(best[c] == table.at(c, i));
        const std::size_t j = best_split[c];
        reversed.push_back({j + 1, i, suffix.medoid(j + 1), suffix.cost(j + 1)});
        i = j;
    }
    reversed.push_back({0, i, prefix.medoid(i), prefix.cost(i)});

    IntervalClustering out;
    out.clusters.assign(reversed.rbegin(), reversed.rend());
    out.total = table.at(k, n - 1);
    record(options, prefix.terms() + suffix.terms(), 2 * scan_bytes(n) + k * n * sizeof(double));
    if (options.table != nullptr) {
        *options.table = std::move(table);
    }
    return out;
}

double objective_of(const ParetoInstance& inst, const IntervalClustering& clustering, double alpha) {
    const auto& clusters = clustering.clusters;
    if (clusters.empty()) {
        throw MalformedPartition("clustering has no clusters");
    }
    std::size_t expected = 0;
    for (const auto& cluster : clusters) {
        if (cluster.first != expected || cluster.last < cluster.first || cluster.last >= inst.size()) {
            throw MalformedPartition("ranges do not partition the instance at index " +
                                     std::to_string(expected));
        }
        expected = cluster.last + 1;
    }
    if (expected != inst.size()) {
        throw MalformedPartition("ranges stop at index " + std::to_string(expected) + " of " +
                                 std::to_string(inst.size()));
    }
    double total = 0.0;
    for (const auto& cluster : clusters) {
        total += cluster_cost_naive(inst, cluster.first, cluster.last, alpha).cost;
    }
    return total;
}

IntervalClustering clustering_from_breaks(const ParetoInstance& inst,
                                          const std::vector<std::size_t>& breaks, double alpha) {
    IntervalClustering out;
    std::size_t first = 0;
    for (std::size_t b = 0; b <= breaks.size(); ++b) {
        const std::size_t last = b < breaks.size() ? breaks[b] : inst.size() - 1;
        if (last < first || last >= inst.size() || (b < breaks.size() && last + 1 >= inst.size())) {
            throw MalformedPartition("breaks must be strictly increasing and below n - 1");
        }
        const ClusterCost cc = cluster_cost_naive(inst, first, last, alpha);
        out.clusters.push_back({first, last, cc.medoid, cc.cost});
        out.total += cc.cost;
        first = last + 1;
    }
    return out;
}

}  // namespace pfmed
