#ifndef PFMED_TESTS_FRONTS_HPP
#define PFMED_TESTS_FRONTS_HPP

// Hand-rolled generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pfmed/pareto.hpp"

namespace testing_support {

using pfmed::Point2;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

/// n distinct reals in [0, scale), ascending.
inline std::vector<double> distinct_sorted(std::mt19937_64& rng, std::size_t n, double scale) {
    std::set<double> values;
    while (values.size() < n) values.insert(uniform01(rng) * scale);
    return {values.begin(), values.end()};
}

/// Random front in canonical order: x ascending, y descending.
inline std::vector<Point2> random_front(std::mt19937_64& rng, std::size_t n) {
    const auto xs = distinct_sorted(rng, n, 10.0);
    auto ys = distinct_sorted(rng, n, 10.0);
    std::reverse(ys.begin(), ys.end());
    std::vector<Point2> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({xs[i], ys[i]});
    return out;
}

/// Front on a small integer lattice; distances repeat, so ties are frequent.
inline std::vector<Point2> lattice_front(std::mt19937_64& rng, std::size_t n) {
    std::vector<Point2> out;
    double x = 0.0;
    double y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x += static_cast<double>(uniform_int(rng, 1, 3));
        y -= static_cast<double>(uniform_int(rng, 1, 3));
        out.push_back({x, y});
    }
    return out;
}

/// Either generator, picked at random.
inline std::vector<Point2> mixed_front(std::mt19937_64& rng, std::size_t n) {
    return rng() % 4 == 0 ? lattice_front(rng, n) : random_front(rng, n);
}

/// Points on a coarse grid: duplicates and shared coordinates included.
inline std::vector<Point2> grid_cloud(std::mt19937_64& rng, std::size_t n, std::size_t side) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({static_cast<double>(uniform_int(rng, 0, side)),
                       static_cast<double>(uniform_int(rng, 0, side))});
    }
    return out;
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
    }
}

}  // namespace testing_support

#endif
