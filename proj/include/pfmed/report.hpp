#ifndef PFMED_REPORT_HPP
#define PFMED_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pfmed/dp_solver.hpp"
#include "pfmed/oracle.hpp"
#include "pfmed/pareto.hpp"

/**
 * @file report.hpp
 *
 * @brief Solver results in output form: JSON, CSV and SVG scatter plots.
 *
 * Indices in every rendered output are 1-based positions in the sorted
 * instance.
 */

namespace pfmed {

/// Solver-independent view of a clustering (0-based, like the library).
struct ClusteringReport {
    std::string algorithm;
    std::size_t k = 0;
    double alpha = 2.0;
    double total = 0.0;
    /// Cluster label of every point.
    std::vector<std::size_t> labels;
    std::vector<std::size_t> medoids;
    std::vector<double> cluster_costs;
    std::vector<LocalMinimumReport> local_minima;
    std::optional<std::size_t> iterations;
    std::optional<bool> converged;

    static ClusteringReport from_intervals(const IntervalClustering& clustering, std::size_t n);
    static ClusteringReport from_partition(const PartitionCandidate& candidate,
                                           const ParetoInstance& inst, double alpha);

    bool is_interval() const;
};

/**
 * JSON document with the fields n, k, alpha, algorithm, total_cost,
 * interval, clusters [{from, to, size, medoid, medoid_point, cost}], breaks and
 * points. Non-interval clusters list their members instead of breaks.
 */
std::string render_json(const ParetoInstance& inst, const ClusteringReport& report);

/// One CSV row per cluster after a '#' summary line.
std::string render_csv(const ParetoInstance& inst, const ClusteringReport& report);

/// Self-contained SVG scatter: points colored by cluster, medoids enlarged
/// and outlined. Output bytes depend only on the inputs.
std::string render_svg(const ParetoInstance& inst, const std::vector<std::size_t>& labels,
                       const std::vector<std::size_t>& medoids);

/// Writes render_svg to `path`; throws IoError when the file cannot be written.
void emit_plot(const ParetoInstance& inst, const IntervalClustering& clustering,
               const std::string& path);
void emit_plot(const ParetoInstance& inst, const ClusteringReport& report, const std::string& path);

}  // namespace pfmed

#endif  // PFMED_REPORT_HPP
