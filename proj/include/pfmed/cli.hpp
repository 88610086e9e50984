#ifndef PFMED_CLI_HPP
#define PFMED_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfmed/io.hpp"

namespace pfmed {

enum class Algorithm { automatic, dp, brute_interval, brute_all, pam, local_minima };
enum class OutputFormat { json, csv };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algorithm);

/// Exit statuses of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int data = 2;
inline constexpr int solver = 3;
}  // namespace exit_code

struct RunConfig {
    /// Path of the points file; "-" reads standard input.
    std::string input_path = "-";
    std::size_t k = 1;
    double alpha = 2.0;
    Algorithm algorithm = Algorithm::automatic;
    bool prune = true;
    bool assume_front = false;
    /// 0 = all available workers.
    unsigned workers = 0;
    /// Minimum loop length before a kernel is split across workers.
    std::size_t grain = 2048;
    std::uint64_t seed = 1;
    std::size_t max_iters = 100;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out_path;
    std::optional<std::string> plot_path;
};

/// Throws ArgumentError on k = 0, non-positive alpha, or k != 2 with local-minima.
void validate(const RunConfig& config);

/**
 * Reads points, builds the instance, runs the selected solver and writes the
 * result to `out` (or config.out_path). Diagnostics go to `err`. Returns one
 * of the exit_code values.
 */
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

struct BenchConfig {
    std::vector<std::size_t> sizes{200, 400};
    std::vector<std::size_t> ks{5};
    std::vector<double> alphas{2.0};
    std::vector<Algorithm> algorithms{Algorithm::dp};
    FrontKind shape = FrontKind::random;
    std::size_t repetitions = 3;
    unsigned workers = 0;
    std::size_t grain = 2048;
    bool prune = true;
    std::uint64_t seed = 1;
    std::size_t max_iters = 100;
    /// dp cells are checked against brute_interval up to this many candidates.
    std::uint64_t check_limit = 200'000;
};

struct BenchRow {
    FrontKind shape = FrontKind::random;
    std::size_t n = 0;
    std::size_t k = 0;
    double alpha = 0.0;
    Algorithm algorithm = Algorithm::dp;
    unsigned workers = 1;
    /// "ok", "guarded" or "error".
    std::string status;
    double median_ms = 0.0;
    /// Median time over the previous size of the same (k, alpha, algorithm) series.
    std::optional<double> ratio;
    std::size_t peak_bytes = 0;
    double total = 0.0;
    /// "match", "mismatch", "skipped" or "n/a".
    std::string check;
    std::string message;
};

std::vector<BenchRow> bench(const BenchConfig& config);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace pfmed

#endif  // PFMED_CLI_HPP
