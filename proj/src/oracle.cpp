#include "pfmed/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "pfmed/error.hpp"
#include "pfmed/interval_costs.hpp"

namespace pfmed {

namespace {

void check_k(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw KOutOfRange(k, n);
    }
}

/// Lazily filled cache of exhaustive interval costs.
class IntervalCostCache {
public:
    IntervalCostCache(const ParetoInstance& inst, double alpha)
        : inst_(inst), alpha_(alpha), n_(inst.size()) {
        if (n_ <= dense_limit) {
            dense_.resize(n_ * n_);
            known_.assign(n_ * n_, 0);
        }
    }

    const ClusterCost& get(std::size_t first, std::size_t last) {
        const std::size_t key = first * n_ + last;
        if (!dense_.empty()) {
            if (!known_[key]) {
                dense_[key] = cluster_cost_naive(inst_, first, last, alpha_);
                known_[key] = 1;
            }
            return dense_[key];
        }
        auto it = sparse_.find(key);
        if (it == sparse_.end()) {
            it = sparse_.emplace(key, cluster_cost_naive(inst_, first, last, alpha_)).first;
        }
        return it->second;
    }

private:
    static constexpr std::size_t dense_limit = 1024;

    const ParetoInstance& inst_;
    double alpha_;
    std::size_t n_;
    std::vector<ClusterCost> dense_;
    std::vector<char> known_;
    std::unordered_map<std::size_t, ClusterCost> sparse_;
};

/// Exhaustive alpha-medoid of an arbitrary block (members ascending).
ClusterCost block_medoid(const ParetoInstance& inst, const std::vector<std::size_t>& members,
                         const PowerDistance& dist) {
    ClusterCost best{std::numeric_limits<double>::infinity(), members.front()};
    for (std::size_t c : members) {
        double total = 0.0;
        for (std::size_t m : members) {
            total += dist(inst[m], inst[c]);
        }
        if (total < best.cost) {
            best = {total, c};
        }
    }
    return best;
}

std::vector<std::vector<std::size_t>> blocks_of(const std::vector<std::size_t>& assignment,
                                                std::size_t k) {
    std::vector<std::vector<std::size_t>> blocks(k);
    for (std::size_t p = 0; p < assignment.size(); ++p) {
        blocks[assignment[p]].push_back(p);
    }
    return blocks;
}

}  // namespace

std::uint64_t interval_partition_count(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
        return 0;
    }
    const std::uint64_t top = n - 1;
    const std::uint64_t choose = std::min<std::uint64_t>(k - 1, top - (k - 1));
    __extension__ using wide = unsigned __int128;
    wide count = 1;
    for (std::uint64_t i = 0; i < choose; ++i) {
        count = count * (top - i) / (i + 1);
        if (count > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(count);
}

IntervalClustering brute_interval(const ParetoInstance& inst, std::size_t k, double alpha) {
    const std::size_t n = inst.size();
    check_k(k, n);
    const std::uint64_t count = interval_partition_count(n, k);
    if (count > max_interval_candidates) {
        throw TooManyCandidates(std::to_string(count) + " interval partitions exceed the limit of " +
                                std::to_string(max_interval_candidates));
    }
    const PowerDistance validate(alpha);
    IntervalCostCache costs(inst, alpha);

    std::vector<std::size_t> current(k - 1);
    std::vector<std::size_t> best_breaks;
    double best = std::numeric_limits<double>::infinity();

    // Cluster `placed` starts at `first`; breaks are enumerated in
    // lexicographic order and only strict improvements replace the incumbent.
    auto search = [&](auto&& self, std::size_t placed, std::size_t first, double partial) -> void {
        if (placed + 1 == k) {
            const double total = partial + costs.get(first, n - 1).cost;
            if (total < best) {
                best = total;
                best_breaks = current;
            }
            return;
        }
        const std::size_t remaining = k - 1 - placed;
        for (std::size_t last = first; last + remaining < n; ++last) {
            current[placed] = last;
            self(self, placed + 1, last + 1, partial + costs.get(first, last).cost);
        }
    };
    search(search, 0, 0, 0.0);

    IntervalClustering out;
    std::size_t first = 0;
    for (std::size_t b = 0; b < k; ++b) {
        const std::size_t last = b + 1 < k ? best_breaks[b] : n - 1;
        const ClusterCost& cc = costs.get(first, last);
        out.clusters.push_back({first, last, cc.medoid, cc.cost});
        first = last + 1;
    }
    out.total = best;
    return out;
}

bool is_interval_partition(const std::vector<std::size_t>& assignment, std::size_t k) {
    std::vector<char> closed(k, 0);
    std::vector<char> seen(k, 0);
    for (std::size_t p = 0; p < assignment.size(); ++p) {
        const std::size_t label = assignment[p];
        if (label >= k || closed[label]) {
            return false;
        }
        seen[label] = 1;
        if (p > 0 && assignment[p - 1] != label) {
            closed[assignment[p - 1]] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

PartitionSearchResult brute_all_partitions(const ParetoInstance& inst, std::size_t k, double alpha) {
    const std::size_t n = inst.size();
    check_k(k, n);
    if (n > max_partition_points || k > max_partition_clusters) {
        throw InstanceTooLarge("set-partition enumeration is limited to n <= " +
                               std::to_string(max_partition_points) + " and k <= " +
                               std::to_string(max_partition_clusters));
    }
    const PowerDistance dist(alpha);
    std::vector<double> d(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            d[a * n + b] = dist(inst[a], inst[b]);
        }
    }

    PartitionSearchResult result;
    result.best.total = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> labels(n, 0);
    std::vector<std::size_t> medoids(k);
    std::vector<std::vector<std::size_t>> members(k);

    auto evaluate = [&] {
        for (auto& m : members) {
            m.clear();
        }
        for (std::size_t p = 0; p < n; ++p) {
            members[labels[p]].push_back(p);
        }
        double total = 0.0;
        for (std::size_t b = 0; b < k; ++b) {
            double block_best = std::numeric_limits<double>::infinity();
            for (std::size_t c : members[b]) {
                double s = 0.0;
                for (std::size_t m : members[b]) {
                    s += d[c * n + m];
                }
                if (s < block_best) {
                    block_best = s;
                    medoids[b] = c;
                }
            }
            total += block_best;
        }
        const bool interval = is_interval_partition(labels, k);
        if (total < result.best.total ||
            (total == result.best.total && interval && !result.is_interval)) {
            result.best.total = total;
            result.best.assignment = labels;
            result.best.medoids = medoids;
            result.is_interval = interval;
        }
    };

    // Restricted-growth strings: labels[p] <= max(labels[0..p-1]) + 1.
    auto search = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
        if (pos == n) {
            if (used == k) {
                evaluate();
            }
            return;
        }
        if (k - used > n - pos) {
            return;
        }
        const std::size_t top = std::min(used, k - 1);
        for (std::size_t label = 0; label <= top; ++label) {
            labels[pos] = label;
            self(self, pos + 1, std::max(used, label + 1));
        }
    };
    labels[0] = 0;
    search(search, 1, 1);
    return result;
}

std::vector<std::size_t> seed_medoids(std::size_t n, std::size_t k, std::uint64_t seed) {
    check_k(k, n);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t pick = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(pool[i], pool[pick]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

PamOutcome pam_from_medoids(const ParetoInstance& inst, std::vector<std::size_t> medoids,
                            double alpha, std::size_t max_iters) {
    const std::size_t n = inst.size();
    const std::size_t k = medoids.size();
    check_k(k, n);
    std::sort(medoids.begin(), medoids.end());
    if (std::adjacent_find(medoids.begin(), medoids.end()) != medoids.end() || medoids.back() >= n) {
        throw MalformedPartition("initial medoids must be distinct point indices");
    }
    const PowerDistance dist(alpha);

    PamOutcome out;
    std::vector<std::size_t> assignment(n);
    std::vector<std::size_t> updated(k);
    double total = 0.0;
    for (;;) {
        for (std::size_t p = 0; p < n; ++p) {
            std::size_t label = 0;
            double nearest = squared_distance(inst[p], inst[medoids[0]]);
            for (std::size_t b = 1; b < k; ++b) {
                const double d = squared_distance(inst[p], inst[medoids[b]]);
                if (d < nearest) {
                    nearest = d;
                    label = b;
                }
            }
            assignment[p] = label;
        }
        total = 0.0;
        const auto blocks = blocks_of(assignment, k);
        for (std::size_t b = 0; b < k; ++b) {
            const ClusterCost cc = block_medoid(inst, blocks[b], dist);
            updated[b] = cc.medoid;
            total += cc.cost;
        }
        ++out.iterations;
        if (updated == medoids) {
            out.converged = true;
            break;
        }
        if (out.iterations >= max_iters) {
            break;
        }
        medoids = updated;
        std::sort(medoids.begin(), medoids.end());
    }
    out.candidate = {std::move(assignment), std::move(updated), total};
    return out;
}

PamOutcome pam_run(const ParetoInstance& inst, std::size_t k, double alpha, std::uint64_t seed,
                   std::size_t max_iters) {
    return pam_from_medoids(inst, seed_medoids(inst.size(), k, seed), alpha, max_iters);
}

PartitionCandidate pam_heuristic(const ParetoInstance& inst, std::size_t k, double alpha,
                                 std::uint64_t seed, std::size_t max_iters) {
    return pam_run(inst, k, alpha, seed, max_iters).candidate;
}

bool is_local_minimum(const ParetoInstance& inst, const PartitionCandidate& candidate, double alpha) {
    const std::size_t n = inst.size();
    const std::size_t k = candidate.medoids.size();
    if (candidate.assignment.size() != n || k == 0) {
        throw MalformedPartition("candidate does not label every point");
    }
    for (std::size_t label : candidate.assignment) {
        if (label >= k) {
            throw MalformedPartition("label " + std::to_string(label) + " has no medoid");
        }
    }
    for (std::size_t b = 0; b < k; ++b) {
        const std::size_t m = candidate.medoids[b];
        if (m >= n || candidate.assignment[m] != b) {
            throw MalformedPartition("medoid of block " + std::to_string(b) + " lies outside it");
        }
    }

    for (std::size_t p = 0; p < n; ++p) {
        const double own = squared_distance(inst[p], inst[candidate.medoids[candidate.assignment[p]]]);
        for (std::size_t b = 0; b < k; ++b) {
            if (squared_distance(inst[p], inst[candidate.medoids[b]]) < own) {
                return false;
            }
        }
    }

    const PowerDistance dist(alpha);
    const auto blocks = blocks_of(candidate.assignment, k);
    for (std::size_t b = 0; b < k; ++b) {
        double listed = 0.0;
        for (std::size_t m : blocks[b]) {
            listed += dist(inst[m], inst[candidate.medoids[b]]);
        }
        const double best = block_medoid(inst, blocks[b], dist).cost;
        if (listed > best + 1e-12 * best) {
            return false;
        }
    }
    return true;
}

PartitionCandidate to_partition(const IntervalClustering& clustering, std::size_t n) {
    PartitionCandidate out;
    out.assignment.assign(n, 0);
    for (std::size_t b = 0; b < clustering.clusters.size(); ++b) {
        const auto& c = clustering.clusters[b];
        for (std::size_t p = c.first; p <= c.last && p < n; ++p) {
            out.assignment[p] = b;
        }
        out.medoids.push_back(c.medoid);
    }
    out.total = clustering.total;
    return out;
}

}  // namespace pfmed
