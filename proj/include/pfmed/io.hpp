#ifndef PFMED_IO_HPP
#define PFMED_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pfmed/pareto.hpp"

namespace pfmed {

/**
 * Reads one point per line as "x1,x2" (a run of whitespace or a semicolon
 * also separates). Blank lines and lines starting with '#' are skipped. The
 * first data line is treated as a header when it does not parse as two
 * numbers. Throws ParseError with the 1-based line number.
 */
std::vector<Point2> read_points(std::istream& in);
std::vector<Point2> read_points_file(const std::string& path);

/// Writes "x1,x2" rows (with that header) using shortest round-trip formatting.
void write_points(std::ostream& out, std::span<const Point2> points);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

enum class FrontKind { affine, convex, concave, random };

FrontKind parse_front_kind(const std::string& name);
std::string to_string(FrontKind kind);

/**
 * Synthetic fronts of n points, already sorted:
 *  - affine:  (i, n-1-i)
 *  - convex:  (i, 1/i) for i = 1..n
 *  - concave: the convex front reflected through a point, (n+1-i, 1-1/i)
 *  - random:  independent uniform coordinates on [0,1), one sorted up and
 *             the other down (seeded, platform independent)
 */
std::vector<Point2> generate_front(FrontKind kind, std::size_t n, std::uint64_t seed = 1);

}  // namespace pfmed

#endif  // PFMED_IO_HPP
