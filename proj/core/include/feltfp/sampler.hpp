#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "feltfp/space.hpp"

namespace feltfp {

/// Deterministic sample material for continuous-space checks: a fixed grid
/// (21 points per axis) plus seeded uniform draws. Failures found through a
/// pool are reproducible because the pool depends only on the box, the seed
/// and the sample count.
class SamplePool {
public:
    SamplePool(const Box& box, const Tolerances& tol);

    [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t grid_size() const noexcept { return grid_size_; }

    /// Index pairs into points(): every unordered grid pair (i <= j) followed
    /// by sample_count random pairs over the whole pool, in draw order.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept {
        return pairs_;
    }

    /// Ordered index triples (x, y, z): the full grid cube when it is small
    /// enough to enumerate, then sample_count random triples over the pool.
    [[nodiscard]] const std::vector<std::array<std::size_t, 3>>& triples() const noexcept {
        return triples_;
    }

private:
    std::vector<Point> points_;
    std::size_t grid_size_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::array<std::size_t, 3>> triples_;
};

/// Seeded generator used by every sampled check; one per check keeps check
/// outcomes independent of each other.
[[nodiscard]] std::mt19937_64 make_rng(std::uint64_t seed);

/// One uniform point inside the box.
[[nodiscard]] Point uniform_point(const Box& box, std::mt19937_64& rng);

/// The deterministic grid, 'per_axis' points per axis (endpoints included).
[[nodiscard]] std::vector<Point> grid_points(const Box& box, std::size_t per_axis);

}  // namespace feltfp
