#include "pfmed/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pfmed/error.hpp"
#include "pfmed/io.hpp"

namespace pfmed {

namespace {

using json = nlohmann::ordered_json;

struct ClusterSpan {
    std::size_t first;
    std::size_t last;
    std::vector<std::size_t> members;
};

std::vector<ClusterSpan> spans_of(const ClusteringReport& report) {
    std::vector<ClusterSpan> spans(report.medoids.size(), ClusterSpan{0, 0, {}});
    for (std::size_t p = 0; p < report.labels.size(); ++p) {
        spans[report.labels[p]].members.push_back(p);
    }
    for (auto& s : spans) {
        if (!s.members.empty()) {
            s.first = s.members.front();
            s.last = s.members.back();
        }
    }
    return spans;
}

constexpr std::array<const char*, 10> palette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace

ClusteringReport ClusteringReport::from_intervals(const IntervalClustering& clustering, std::size_t n) {
    ClusteringReport report;
    report.k = clustering.clusters.size();
    report.total = clustering.total;
    report.labels.assign(n, 0);
    for (std::size_t b = 0; b < clustering.clusters.size(); ++b) {
        const auto& c = clustering.clusters[b];
        for (std::size_t p = c.first; p <= c.last; ++p) {
            report.labels[p] = b;
        }
        report.medoids.push_back(c.medoid);
        report.cluster_costs.push_back(c.cost);
    }
    return report;
}

ClusteringReport ClusteringReport::from_partition(const PartitionCandidate& candidate,
                                                  const ParetoInstance& inst, double alpha) {
    // Relabel blocks by their smallest member so labels read left to right.
    const std::size_t k = candidate.medoids.size();
    std::vector<std::size_t> first_seen(k, inst.size());
    for (std::size_t p = inst.size(); p-- > 0;) {
        first_seen[candidate.assignment[p]] = p;
    }
    std::vector<std::size_t> order(k);
    for (std::size_t b = 0; b < k; ++b) order[b] = b;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return first_seen[a] < first_seen[b]; });
    std::vector<std::size_t> relabel(k);
    for (std::size_t r = 0; r < k; ++r) relabel[order[r]] = r;

    const PowerDistance dist(alpha);
    ClusteringReport report;
    report.k = k;
    report.total = candidate.total;
    report.labels.resize(inst.size());
    for (std::size_t p = 0; p < inst.size(); ++p) {
        report.labels[p] = relabel[candidate.assignment[p]];
    }
    report.medoids.resize(k);
    report.cluster_costs.assign(k, 0.0);
    for (std::size_t b = 0; b < k; ++b) {
        report.medoids[relabel[b]] = candidate.medoids[b];
    }
    for (std::size_t p = 0; p < inst.size(); ++p) {
        const std::size_t b = report.labels[p];
        report.cluster_costs[b] += dist(inst[p], inst[report.medoids[b]]);
    }
    return report;
}

bool ClusteringReport::is_interval() const {
    return is_interval_partition(labels, medoids.size());
}

std::string render_json(const ParetoInstance& inst, const ClusteringReport& report) {
    json doc;
    doc["n"] = inst.size();
    doc["k"] = report.k;
    doc["alpha"] = report.alpha;
    doc["algorithm"] = report.algorithm;
    doc["total_cost"] = report.total;
    doc["interval"] = report.is_interval();

    json clusters = json::array();
    const auto spans = spans_of(report);
    for (std::size_t b = 0; b < spans.size(); ++b) {
        const auto& s = spans[b];
        const Point2 m = inst[report.medoids[b]];
        json c;
        c["from"] = s.first + 1;
        c["to"] = s.last + 1;
        c["size"] = s.members.size();
        c["medoid"] = report.medoids[b] + 1;
        c["medoid_point"] = {m.x1, m.x2};
        c["cost"] = report.cluster_costs[b];
        if (s.members.size() != s.last - s.first + 1) {
            json members = json::array();
            for (std::size_t p : s.members) members.push_back(p + 1);
            c["members"] = std::move(members);
        }
        clusters.push_back(std::move(c));
    }
    doc["clusters"] = std::move(clusters);
    if (report.is_interval()) {
        json breaks = json::array();
        for (std::size_t b = 0; b + 1 < spans.size(); ++b) breaks.push_back(spans[b].last + 1);
        doc["breaks"] = std::move(breaks);
    }

    if (!report.local_minima.empty()) {
        json minima = json::array();
        for (const auto& lm : report.local_minima) {
            minima.push_back({{"split", lm.split + 1},
                              {"medoids", {lm.medoids.first + 1, lm.medoids.second + 1}},
                              {"total", lm.total}});
        }
        doc["local_minima"] = std::move(minima);
    }
    if (report.iterations) doc["iterations"] = *report.iterations;
    if (report.converged) doc["converged"] = *report.converged;

    json points = json::array();
    for (const Point2& p : inst.points()) {
        points.push_back({p.x1, p.x2});
    }
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

std::string render_csv(const ParetoInstance& inst, const ClusteringReport& report) {
    std::ostringstream out;
    out << "# n=" << inst.size() << " k=" << report.k << " alpha=" << format_double(report.alpha)
        << " algorithm=" << report.algorithm << " total_cost=" << format_double(report.total) << "\n";
    out << "cluster,from,to,size,medoid,medoid_x1,medoid_x2,cost\n";
    const auto spans = spans_of(report);
    for (std::size_t b = 0; b < spans.size(); ++b) {
        const Point2 m = inst[report.medoids[b]];
        out << b + 1 << ',' << spans[b].first + 1 << ',' << spans[b].last + 1 << ','
            << spans[b].members.size() << ',' << report.medoids[b] + 1 << ',' << format_double(m.x1)
            << ',' << format_double(m.x2) << ',' << format_double(report.cluster_costs[b]) << "\n";
    }
    return out.str();
}

std::string render_svg(const ParetoInstance& inst, const std::vector<std::size_t>& labels,
                       const std::vector<std::size_t>& medoids) {
    constexpr double width = 640.0;
    constexpr double height = 480.0;
    constexpr double margin = 40.0;

    const auto pts = inst.points();
    double x_min = pts.front().x1, x_max = pts.back().x1;
    double y_min = pts.back().x2, y_max = pts.front().x2;
    auto scale = [](double v, double lo, double hi, double from, double to) {
        if (hi <= lo) return (from + to) / 2.0;
        return from + (v - lo) / (hi - lo) * (to - from);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    svg << "<line x1=\"40\" y1=\"440\" x2=\"600\" y2=\"440\" stroke=\"black\"/>\n";
    svg << "<line x1=\"40\" y1=\"40\" x2=\"40\" y2=\"440\" stroke=\"black\"/>\n";
    svg << "<text x=\"320\" y=\"470\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">objective 1</text>\n";
    svg << "<text x=\"14\" y=\"240\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 14 240)\">objective 2</text>\n";

    auto px = [&](const Point2& p) { return scale(p.x1, x_min, x_max, margin, width - margin); };
    auto py = [&](const Point2& p) { return scale(p.x2, y_min, y_max, height - margin, margin); };

    for (std::size_t i = 0; i < pts.size(); ++i) {
        svg << "<circle cx=\"" << fixed(px(pts[i])) << "\" cy=\"" << fixed(py(pts[i]))
            << "\" r=\"4\" fill=\"" << palette[labels[i] % palette.size()] << "\"/>\n";
    }
    for (std::size_t b = 0; b < medoids.size(); ++b) {
        const Point2& m = pts[medoids[b]];
        svg << "<circle class=\"medoid\" cx=\"" << fixed(px(m)) << "\" cy=\"" << fixed(py(m))
            << "\" r=\"8\" fill=\"" << palette[b % palette.size()]
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plot(const ParetoInstance& inst, const ClusteringReport& report, const std::string& path) {
    write_file(path, render_svg(inst, report.labels, report.medoids));
}

void emit_plot(const ParetoInstance& inst, const IntervalClustering& clustering,
               const std::string& path) {
    emit_plot(inst, ClusteringReport::from_intervals(clustering, inst.size()), path);
}

}  // namespace pfmed
