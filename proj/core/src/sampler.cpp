#include "feltfp/sampler.hpp"

#include <array>

namespace feltfp {

namespace {

constexpr std::size_t kGridPerAxis = 21;
constexpr std::size_t kMaxGridTriples = 30000;

}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

Point uniform_point(const Box& box, std::mt19937_64& rng) {
    std::vector<double> c(box.dim());
    for (std::size_t a = 0; a < box.dim(); ++a) {
        std::uniform_real_distribution<double> dist(box.lo(a), box.hi(a));
        c[a] = dist(rng);
    }
    return Point::at(std::move(c));
}

std::vector<Point> grid_points(const Box& box, std::size_t per_axis) {
    if (per_axis < 2) per_axis = 2;
    std::vector<Point> out;
    std::vector<std::size_t> idx(box.dim(), 0);
    while (true) {
        std::vector<double> c(box.dim());
        for (std::size_t a = 0; a < box.dim(); ++a) {
            const double t = static_cast<double>(idx[a]) / static_cast<double>(per_axis - 1);
            c[a] = box.lo(a) + t * (box.hi(a) - box.lo(a));
        }
        out.push_back(Point::at(std::move(c)));
        std::size_t a = box.dim();
        while (a > 0) {
            --a;
            if (++idx[a] < per_axis) break;
            idx[a] = 0;
            if (a == 0) return out;
        }
    }
}

SamplePool::SamplePool(const Box& box, const Tolerances& tol) {
    // Past two axes a 21-per-axis grid makes the pair list explode; thin it
    // out there so the scans stay desk-scale.
    const std::size_t per_axis = box.dim() <= 2 ? kGridPerAxis : 5;
    points_ = grid_points(box, per_axis);
    grid_size_ = points_.size();

    auto rng = make_rng(tol.seed);
    points_.reserve(grid_size_ + tol.sample_count);
    for (std::size_t k = 0; k < tol.sample_count; ++k) points_.push_back(uniform_point(box, rng));

    for (std::size_t i = 0; i < grid_size_; ++i)
        for (std::size_t j = i; j < grid_size_; ++j) pairs_.emplace_back(i, j);
    std::uniform_int_distribution<std::size_t> pick(0, points_.size() - 1);
    for (std::size_t k = 0; k < tol.sample_count; ++k) pairs_.emplace_back(pick(rng), pick(rng));

    if (grid_size_ * grid_size_ * grid_size_ <= kMaxGridTriples) {
        for (std::size_t i = 0; i < grid_size_; ++i)
            for (std::size_t j = 0; j < grid_size_; ++j)
                for (std::size_t k = 0; k < grid_size_; ++k)
                    triples_.push_back({i, j, k});
    }
    for (std::size_t k = 0; k < tol.sample_count; ++k)
        triples_.push_back({pick(rng), pick(rng), pick(rng)});
}

}  // namespace feltfp
