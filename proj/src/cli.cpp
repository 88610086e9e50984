#include "pfmed/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "pfmed/dp_solver.hpp"
#include "pfmed/error.hpp"
#include "pfmed/interval_costs.hpp"
#include "pfmed/oracle.hpp"
#include "pfmed/report.hpp"

namespace pfmed {

namespace {

struct SolveOutcome {
    ClusteringReport report;
    std::size_t peak_bytes = 0;
};

SolveOutcome solve_with(const ParetoInstance& inst, Algorithm algorithm, std::size_t k, double alpha,
                        bool prune, Parallelism par, std::uint64_t seed, std::size_t max_iters) {
    const std::size_t n = inst.size();
    const std::size_t instance_bytes = n * sizeof(Point2);
    SolveOutcome out;
    switch (algorithm) {
        case Algorithm::automatic:
        case Algorithm::dp: {
            SolverStats stats;
            SolveOptions options;
            options.prune = prune;
            options.parallelism = par;
            options.stats = &stats;
            out.report = ClusteringReport::from_intervals(solve_general(inst, k, alpha, options), n);
            out.peak_bytes = instance_bytes + stats.buffer_bytes;
            break;
        }
        case Algorithm::brute_interval:
            out.report = ClusteringReport::from_intervals(brute_interval(inst, k, alpha), n);
            out.peak_bytes = instance_bytes + std::min<std::size_t>(n, 1024) * n * (sizeof(ClusterCost) + 1);
            break;
        case Algorithm::brute_all: {
            const auto result = brute_all_partitions(inst, k, alpha);
            out.report = ClusteringReport::from_partition(result.best, inst, alpha);
            out.peak_bytes = instance_bytes + n * n * sizeof(double);
            break;
        }
        case Algorithm::pam: {
            const auto result = pam_run(inst, k, alpha, seed, max_iters);
            out.report = ClusteringReport::from_partition(result.candidate, inst, alpha);
            out.report.iterations = result.iterations;
            out.report.converged = result.converged;
            out.peak_bytes = instance_bytes + n * sizeof(std::size_t) * 2;
            break;
        }
        case Algorithm::local_minima: {
            if (k != 2) {
                throw ArgumentError("local-minima enumeration requires k = 2");
            }
            SolveOptions options;
            options.prune = prune;
            options.parallelism = par;
            out.report = ClusteringReport::from_intervals(solve_k2(inst, alpha, options), n);
            out.report.local_minima = enumerate_local_minima_k2(inst, alpha, par);
            out.peak_bytes = instance_bytes + 2 * n * (2 * sizeof(double) + sizeof(std::size_t));
            break;
        }
    }
    out.report.algorithm = to_string(algorithm == Algorithm::automatic ? Algorithm::dp : algorithm);
    out.report.alpha = alpha;
    out.report.k = k;
    return out;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << content;
    if (!file.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
    if (name == "auto") return Algorithm::automatic;
    if (name == "dp") return Algorithm::dp;
    if (name == "brute-interval") return Algorithm::brute_interval;
    if (name == "brute-all") return Algorithm::brute_all;
    if (name == "pam") return Algorithm::pam;
    if (name == "local-minima") return Algorithm::local_minima;
    throw ArgumentError("unknown algorithm '" + name +
                        "' (auto|dp|brute-interval|brute-all|pam|local-minima)");
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::automatic:
            return "auto";
        case Algorithm::dp:
            return "dp";
        case Algorithm::brute_interval:
            return "brute-interval";
        case Algorithm::brute_all:
            return "brute-all";
        case Algorithm::pam:
            return "pam";
        case Algorithm::local_minima:
            return "local-minima";
    }
    return "unknown";
}

void validate(const RunConfig& config) {
    if (config.k < 1) {
        throw ArgumentError("--k must be at least 1");
    }
    if (!(config.alpha > 0.0) || !std::isfinite(config.alpha)) {
        throw NonPositiveAlpha(config.alpha);
    }
    if (config.algorithm == Algorithm::local_minima && config.k != 2) {
        throw ArgumentError("--algorithm local-minima requires --k 2");
    }
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        const auto points = config.input_path == "-" ? read_points(in) : read_points_file(config.input_path);
        const ParetoInstance inst = build_instance(points, config.assume_front);
        const Parallelism par{config.workers, config.grain};
        const SolveOutcome outcome = solve_with(inst, config.algorithm, config.k, config.alpha,
                                                config.prune, par, config.seed, config.max_iters);

        const std::string text = config.format == OutputFormat::json ? render_json(inst, outcome.report)
                                                                     : render_csv(inst, outcome.report);
        if (config.out_path) {
            write_text(*config.out_path, text);
        } else {
            out << text;
        }
        if (config.plot_path) {
            emit_plot(inst, outcome.report, *config.plot_path);
        }
        return exit_code::ok;
    } catch (const NotAParetoFront& e) {
        err << "data error: not a Pareto front: input points " << e.first() + 1 << " and "
            << e.second() + 1 << " are not mutually incomparable\n";
        return exit_code::data;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return exit_code::data;
    } catch (const GuardError& e) {
        err << "solver error: " << e.what() << "\n";
        return exit_code::solver;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    }
}

std::vector<BenchRow> bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    const Parallelism par{config.workers, config.grain};
    const unsigned workers = resolve_workers(config.workers);
    for (Algorithm algorithm : config.algorithms) {
        for (std::size_t k : config.ks) {
            for (double alpha : config.alphas) {
                double previous_ms = 0.0;
                for (std::size_t n : config.sizes) {
                    BenchRow row;
                    row.shape = config.shape;
                    row.n = n;
                    row.k = k;
                    row.alpha = alpha;
                    row.algorithm = algorithm;
                    row.workers = workers;
                    row.check = "n/a";
                    try {
                        const auto points = generate_front(config.shape, n, config.seed);
                        const ParetoInstance inst = build_instance(points, true);
                        std::vector<double> times;
                        SolveOutcome outcome;
                        for (std::size_t r = 0; r < std::max<std::size_t>(config.repetitions, 1); ++r) {
                            const auto start = std::chrono::steady_clock::now();
                            outcome = solve_with(inst, algorithm, k, alpha, config.prune, par, config.seed,
                                                 config.max_iters);
                            const auto stop = std::chrono::steady_clock::now();
                            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
                        }
                        std::sort(times.begin(), times.end());
                        row.median_ms = times[times.size() / 2];
                        row.total = outcome.report.total;
                        row.peak_bytes = outcome.peak_bytes;
                        row.status = "ok";
                        if (previous_ms > 0.0) {
                            row.ratio = row.median_ms / previous_ms;
                        }
                        previous_ms = row.median_ms;

                        if (algorithm == Algorithm::dp || algorithm == Algorithm::automatic) {
                            if (interval_partition_count(n, k) <= config.check_limit) {
                                const double oracle = brute_interval(inst, k, alpha).total;
                                const double scale = std::max(1.0, std::abs(oracle));
                                row.check = std::abs(oracle - row.total) <= 1e-9 * scale ? "match" : "mismatch";
                            } else {
                                row.check = "skipped";
                            }
                        }
                    } catch (const GuardError& e) {
                        row.status = "guarded";
                        row.message = e.what();
                        previous_ms = 0.0;
                    } catch (const Error& e) {
                        row.status = "error";
                        row.message = e.what();
                        previous_ms = 0.0;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "shape,n,k,alpha,algorithm,workers,status,median_ms,ratio,peak_bytes,total_cost,check\n";
    for (const auto& row : rows) {
        out << to_string(row.shape) << ',' << row.n << ',' << row.k << ',' << format_double(row.alpha) << ','
            << to_string(row.algorithm) << ',' << row.workers << ',' << row.status << ',';
        if (row.status == "ok") {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", row.median_ms);
            out << buf << ',';
            if (row.ratio) {
                std::snprintf(buf, sizeof buf, "%.3f", *row.ratio);
                out << buf;
            }
            out << ',' << row.peak_bytes << ',' << format_double(row.total) << ',' << row.check << '\n';
        } else {
            out << ",,,," << row.check << '\n';
        }
    }
}

}  // namespace pfmed
