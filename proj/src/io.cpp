#include "pfmed/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <set>

#include "pfmed/error.hpp"

namespace pfmed {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    if (token.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<Point2> parse_point(std::string_view line) {
    std::string_view first;
    std::string_view second;
    const auto sep = line.find_first_of(",;");
    if (sep != std::string_view::npos) {
        first = line.substr(0, sep);
        second = line.substr(sep + 1);
    } else {
        const auto gap = line.find_first_of(" \t");
        if (gap == std::string_view::npos) {
            return std::nullopt;
        }
        first = line.substr(0, gap);
        second = line.substr(gap + 1);
    }
    const auto x1 = parse_number(first);
    const auto x2 = parse_number(second);
    if (!x1 || !x2) {
        return std::nullopt;
    }
    return Point2{*x1, *x2};
}

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point2> read_points(std::istream& in) {
    std::vector<Point2> points;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_data_line = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line_no == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") {
            line = trim(line.substr(3));
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto point = parse_point(line);
        if (!point) {
            if (!seen_data_line) {
                seen_data_line = true;  // header
                continue;
            }
            throw ParseError(line_no, "expected two numbers separated by a comma, got '" +
                                          std::string(line) + "'");
        }
        seen_data_line = true;
        if (!std::isfinite(point->x1) || !std::isfinite(point->x2)) {
            throw ParseError(line_no, "coordinates must be finite");
        }
        points.push_back(*point);
    }
    if (in.bad()) {
        throw IoError("failed while reading input");
    }
    return points;
}

std::vector<Point2> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_points(in);
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ec == std::errc() ? end : buf.data());
}

void write_points(std::ostream& out, std::span<const Point2> points) {
    out << "x1,x2\n";
    for (const Point2& p : points) {
        out << format_double(p.x1) << ',' << format_double(p.x2) << '\n';
    }
}

FrontKind parse_front_kind(const std::string& name) {
    if (name == "affine") return FrontKind::affine;
    if (name == "convex") return FrontKind::convex;
    if (name == "concave") return FrontKind::concave;
    if (name == "random") return FrontKind::random;
    throw ArgumentError("unknown front shape '" + name + "' (affine|convex|concave|random)");
}

std::string to_string(FrontKind kind) {
    switch (kind) {
        case FrontKind::affine:
            return "affine";
        case FrontKind::convex:
            return "convex";
        case FrontKind::concave:
            return "concave";
        case FrontKind::random:
            return "random";
    }
    return "unknown";
}

std::vector<Point2> generate_front(FrontKind kind, std::size_t n, std::uint64_t seed) {
    std::vector<Point2> points;
    points.reserve(n);
    switch (kind) {
        case FrontKind::affine:
            for (std::size_t i = 0; i < n; ++i) {
                points.push_back({static_cast<double>(i), static_cast<double>(n - 1 - i)});
            }
            break;
        case FrontKind::convex:
            for (std::size_t i = 1; i <= n; ++i) {
                const double x = static_cast<double>(i);
                points.push_back({x, 1.0 / x});
            }
            break;
        case FrontKind::concave:
            for (std::size_t i = n; i >= 1; --i) {
                const double x = static_cast<double>(i);
                points.push_back({static_cast<double>(n + 1) - x, 1.0 - 1.0 / x});
            }
            break;
        case FrontKind::random: {
            std::mt19937_64 rng(seed);
            auto draw_distinct = [&] {
                std::set<double> values;
                while (values.size() < n) {
                    values.insert(unit_uniform(rng));
                }
                return std::vector<double>(values.begin(), values.end());
            };
            const auto xs = draw_distinct();
            auto ys = draw_distinct();
            std::reverse(ys.begin(), ys.end());
            for (std::size_t i = 0; i < n; ++i) {
                points.push_back({xs[i], ys[i]});
            }
            break;
        }
    }
    return points;
}

}  // namespace pfmed
