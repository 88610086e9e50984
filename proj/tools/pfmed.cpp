// Command-line front end: solve, bench and generate subcommands.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfmed/cli.hpp"
#include "pfmed/error.hpp"
#include "pfmed/io.hpp"

namespace {

std::ostream* open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") {
        return &std::cout;
    }
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw pfmed::IoError("cannot open '" + path + "' for writing");
    }
    return &file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal k-medoid clustering of two-objective Pareto fronts"};
    app.require_subcommand(1);

    pfmed::RunConfig run_config;
    std::string algorithm = "auto";
    std::string format = "json";
    std::string out_path;
    std::string plot_path;
    bool no_prune = false;

    auto* solve = app.add_subcommand("solve", "Cluster the points of a file (\"-\" for stdin)");
    solve->add_option("input", run_config.input_path, "Points file, one \"x1,x2\" per line")->required();
    solve->add_option("-k,--k", run_config.k, "Number of clusters")->required();
    solve->add_option("-a,--alpha", run_config.alpha, "Distance exponent")->capture_default_str();
    solve->add_option("--algorithm", algorithm, "auto|dp|brute-interval|brute-all|pam|local-minima")
        ->capture_default_str();
    auto* prune_flag = solve->add_flag("--prune", run_config.prune, "Prune the cost scans (default)");
    solve->add_flag("--no-prune", no_prune, "Disable pruning")->excludes(prune_flag);
    solve->add_flag("--assume-front", run_config.assume_front,
                    "Reject dominated points instead of filtering them");
    solve->add_option("-w,--workers", run_config.workers, "Worker threads (0 = all)")->capture_default_str();
    solve->add_option("--parallel-grain", run_config.grain, "Minimum loop length split across workers")
        ->capture_default_str();
    solve->add_option("--seed", run_config.seed, "Seed for pam")->capture_default_str();
    solve->add_option("--max-iters", run_config.max_iters, "Round limit for pam")->capture_default_str();
    solve->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    solve->add_option("-o,--out", out_path, "Write the result here instead of stdout");
    solve->add_option("--plot", plot_path, "Write an SVG scatter plot of the clustering");

    pfmed::BenchConfig bench_config;
    std::vector<std::string> bench_algorithms{"dp"};
    std::string bench_shape = "random";
    std::string bench_out;
    bool bench_no_prune = false;
    auto* bench = app.add_subcommand("bench", "Time solvers on synthetic fronts and print a CSV table");
    bench->add_option("--sizes", bench_config.sizes, "Front sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--ks", bench_config.ks, "Cluster counts")->delimiter(',')->capture_default_str();
    bench->add_option("--alphas", bench_config.alphas, "Distance exponents")->delimiter(',')
        ->capture_default_str();
    bench->add_option("--algorithms", bench_algorithms, "Solvers to time")->delimiter(',')
        ->capture_default_str();
    bench->add_option("--shape", bench_shape, "affine|convex|concave|random")->capture_default_str();
    bench->add_option("--reps", bench_config.repetitions, "Repetitions per cell")->capture_default_str();
    bench->add_option("-w,--workers", bench_config.workers, "Worker threads (0 = all)")
        ->capture_default_str();
    bench->add_option("--parallel-grain", bench_config.grain, "Minimum loop length split across workers")
        ->capture_default_str();
    bench->add_flag("--no-prune", bench_no_prune, "Disable pruning");
    bench->add_option("--seed", bench_config.seed, "Generator seed")->capture_default_str();
    bench->add_option("--check-limit", bench_config.check_limit,
                      "Largest interval-partition count checked against brute force")
        ->capture_default_str();
    bench->add_option("-o,--out", bench_out, "Write the table here instead of stdout");

    std::string gen_shape = "random";
    std::size_t gen_n = 100;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Write a synthetic front as CSV");
    generate->add_option("--shape", gen_shape, "affine|convex|concave|random")->capture_default_str();
    generate->add_option("-n,--n", gen_n, "Number of points")->capture_default_str();
    generate->add_option("--seed", gen_seed, "Seed for random fronts")->capture_default_str();
    generate->add_option("-o,--out", gen_out, "Write the points here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? pfmed::exit_code::ok : pfmed::exit_code::usage;
    }

    try {
        if (*solve) {
            run_config.algorithm = pfmed::parse_algorithm(algorithm);
            run_config.format = format == "csv" ? pfmed::OutputFormat::csv : pfmed::OutputFormat::json;
            if (no_prune) run_config.prune = false;
            if (!out_path.empty()) run_config.out_path = out_path;
            if (!plot_path.empty()) run_config.plot_path = plot_path;
            return pfmed::run(run_config, std::cin, std::cout, std::cerr);
        }
        if (*bench) {
            bench_config.shape = pfmed::parse_front_kind(bench_shape);
            bench_config.algorithms.clear();
            for (const auto& name : bench_algorithms) {
                bench_config.algorithms.push_back(pfmed::parse_algorithm(name));
            }
            bench_config.prune = !bench_no_prune;
            std::ofstream file;
            std::ostream* out = open_output(bench_out, file);
            pfmed::write_bench_csv(*out, pfmed::bench(bench_config));
            return pfmed::exit_code::ok;
        }
        if (*generate) {
            const auto points = pfmed::generate_front(pfmed::parse_front_kind(gen_shape), gen_n, gen_seed);
            std::ofstream file;
            std::ostream* out = open_output(gen_out, file);
            pfmed::write_points(*out, points);
            return pfmed::exit_code::ok;
        }
    } catch (const pfmed::ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return pfmed::exit_code::usage;
    } catch (const pfmed::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return pfmed::exit_code::data;
    }
    return pfmed::exit_code::usage;
}
