#include "feltfp/space.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace feltfp {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

[[noreturn]] void fail_arg(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

double parse_double(std::string_view s, const std::string& what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail_arg(what + ": cannot parse '" + std::string(s) + "' as a number");
    return v;
}

std::size_t parse_size(std::string_view s, const std::string& what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail_arg(what + ": cannot parse '" + std::string(s) + "' as a nonnegative integer");
    return v;
}

}  // namespace

// ---------------------------------------------------------------- Box

Box::Box(std::vector<double> lo, std::vector<double> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.empty() || lo_.size() != hi_.size())
        fail_arg("box: lo/hi must be nonempty and of equal dimension");
    for (std::size_t i = 0; i < lo_.size(); ++i) {
        if (!std::isfinite(lo_[i]) || !std::isfinite(hi_[i]))
            fail_arg("box: bounds must be finite");
        if (lo_[i] > hi_[i])
            fail_arg("box: lo > hi on axis " + std::to_string(i));
    }
}

bool Box::contains(std::span<const double> x) const noexcept {
    if (x.size() != lo_.size()) return false;
    for (std::size_t i = 0; i < lo_.size(); ++i)
        if (!(x[i] >= lo_[i] && x[i] <= hi_[i])) return false;
    return true;
}

// ---------------------------------------------------------------- Point

std::size_t Point::index() const {
    if (!is_index()) throw std::logic_error("point: index() on a continuous point");
    return std::get<std::size_t>(rep_);
}

std::span<const double> Point::coords() const {
    if (is_index()) throw std::logic_error("point: coords() on a finite-space point");
    return std::get<std::vector<double>>(rep_);
}

double Point::scalar() const {
    auto c = coords();
    if (c.size() != 1) throw std::logic_error("point: scalar() on a non-1-d point");
    return c[0];
}

// ---------------------------------------------------------------- Tolerances

void Tolerances::validate() const {
    if (!(tol_zero > 0)) fail_arg("tolerances: tol_zero must be > 0");
    if (!(tol_fixed > 0)) fail_arg("tolerances: tol_fixed must be > 0");
    if (max_iter < 1) fail_arg("tolerances: max_iter must be >= 1");
    if (window < 1) fail_arg("tolerances: window must be >= 1");
    if (sample_count < 1) fail_arg("tolerances: sample_count must be >= 1");
}

// ---------------------------------------------------------------- FeltSpace

FeltSpace FeltSpace::finite(std::vector<std::vector<double>> matrix,
                            std::vector<std::string> labels, std::string name) {
    const std::size_t n = matrix.size();
    if (n == 0) fail_arg("finite space: distance matrix is empty");
    Finite f;
    f.n = n;
    f.d.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n)
            fail_arg("finite space: distance row " + std::to_string(i) + " has " +
                     std::to_string(matrix[i].size()) + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix[i][j];
            if (!std::isfinite(v))
                fail_arg("finite space: distance[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] is not finite");
            if (v < 0)
                fail_arg("finite space: distance[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] is negative (" + fmt_double(v) + ")");
            f.d.push_back(v);
        }
    }
    if (!labels.empty() && labels.size() != n)
        fail_arg("finite space: " + std::to_string(labels.size()) + " labels for " +
                 std::to_string(n) + " points");
    f.labels = std::move(labels);
    return FeltSpace{std::variant<Finite, Continuous>{std::move(f)}, std::move(name)};
}

FeltSpace FeltSpace::continuous(Box domain, DistanceFn p, std::string name) {
    if (!p) fail_arg("continuous space: null distance function");
    return FeltSpace{std::variant<Finite, Continuous>{Continuous{std::move(domain), std::move(p)}},
                     std::move(name)};
}

FeltSpace::Kind FeltSpace::kind() const noexcept {
    return std::holds_alternative<Finite>(rep_) ? Kind::finite : Kind::continuous;
}

std::size_t FeltSpace::size() const {
    if (!is_finite()) throw std::logic_error("space: size() on a continuous space");
    return std::get<Finite>(rep_).n;
}

double FeltSpace::at(std::size_t i, std::size_t j) const {
    const auto& f = std::get<Finite>(rep_);
    if (i >= f.n || j >= f.n)
        throw std::domain_error("space '" + name_ + "': index out of range (" + std::to_string(i) +
                                "," + std::to_string(j) + ") for size " + std::to_string(f.n));
    return f.d[i * f.n + j];
}

const std::vector<std::string>& FeltSpace::labels() const {
    return std::get<Finite>(rep_).labels;
}

std::optional<std::size_t> FeltSpace::label_index(std::string_view label) const {
    const auto& f = std::get<Finite>(rep_);
    for (std::size_t i = 0; i < f.labels.size(); ++i)
        if (f.labels[i] == label) return i;
    return std::nullopt;
}

std::string FeltSpace::point_label(std::size_t i) const {
    const auto& f = std::get<Finite>(rep_);
    if (i < f.labels.size()) return f.labels[i];
    return std::to_string(i);
}

const Box& FeltSpace::domain() const {
    if (is_finite()) throw std::logic_error("space: domain() on a finite space");
    return std::get<Continuous>(rep_).domain;
}

bool FeltSpace::contains(const Point& x) const {
    if (is_finite()) return x.is_index() && x.index() < size();
    return !x.is_index() && domain().contains(x.coords());
}

double FeltSpace::distance(const Point& x, const Point& y) const {
    if (is_finite()) {
        if (!x.is_index() || !y.is_index())
            throw std::domain_error("space '" + name_ + "': continuous point on a finite space");
        return at(x.index(), y.index());
    }
    const auto& c = std::get<Continuous>(rep_);
    if (x.is_index() || y.is_index())
        throw std::domain_error("space '" + name_ + "': finite-space point on a continuous space");
    if (!c.domain.contains(x.coords()) || !c.domain.contains(y.coords()))
        throw std::domain_error("space '" + name_ + "': point outside the domain box");
    const double v = c.p(x.coords(), y.coords());
    if (!std::isfinite(v) || v < 0)
        throw std::runtime_error("space '" + name_ + "': distance evaluated to " + fmt_double(v));
    return v;
}

// ---------------------------------------------------------------- SelfMap

SelfMap SelfMap::table(std::vector<std::size_t> images, std::string name) {
    if (images.empty()) fail_arg("self-map: empty index table");
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] >= images.size())
            fail_arg("self-map: image of point " + std::to_string(i) + " is " +
                     std::to_string(images[i]) + ", out of range for " +
                     std::to_string(images.size()) + " points");
    return SelfMap{std::variant<std::vector<std::size_t>, MapFn>{std::move(images)},
                   std::move(name)};
}

SelfMap SelfMap::callable(MapFn f, std::string name) {
    if (!f) fail_arg("self-map: null callable");
    return SelfMap{std::variant<std::vector<std::size_t>, MapFn>{std::move(f)}, std::move(name)};
}

bool SelfMap::is_table() const noexcept {
    return std::holds_alternative<std::vector<std::size_t>>(rep_);
}

const std::vector<std::size_t>& SelfMap::images() const {
    if (!is_table()) throw std::logic_error("self-map: images() on a callable map");
    return std::get<std::vector<std::size_t>>(rep_);
}

Point SelfMap::apply(const FeltSpace& space, const Point& x) const {
    if (is_table()) {
        const auto& m = std::get<std::vector<std::size_t>>(rep_);
        if (!space.is_finite() || !x.is_index())
            throw std::domain_error("self-map '" + name_ + "': index table on a continuous space");
        if (m.size() != space.size())
            fail_arg("self-map '" + name_ + "': table size " + std::to_string(m.size()) +
                     " does not match space size " + std::to_string(space.size()));
        if (x.index() >= m.size())
            throw std::domain_error("self-map '" + name_ + "': point index out of range");
        return Point::at_index(m[x.index()]);
    }
    if (space.is_finite())
        throw std::domain_error("self-map '" + name_ + "': callable map on a finite space");
    if (!space.domain().contains(x.coords()))
        throw std::domain_error("self-map '" + name_ + "': point outside the domain box");
    std::vector<double> image = std::get<MapFn>(rep_)(x.coords());
    if (!space.domain().contains(image))
        throw std::domain_error("self-map '" + name_ + "': image escapes the domain (not a self-map)");
    return Point::at(std::move(image));
}

// ---------------------------------------------------------------- builtins

FeltSpace make_builtin_space(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (head == "euclid" || head == "maxpm") {
        const auto parts = split(rest, ',');
        if (parts.size() != 2)
            fail_arg("builtin space '" + std::string(spec) + "': expected two bounds a,b");
        const double a = parse_double(parts[0], "builtin space bound");
        const double b = parse_double(parts[1], "builtin space bound");
        if (!(a < b)) fail_arg("builtin space '" + std::string(spec) + "': need a < b");
        if (head == "euclid") {
            return FeltSpace::continuous(
                Box{{a}, {b}},
                [](std::span<const double> x, std::span<const double> y) {
                    return std::fabs(x[0] - y[0]);
                },
                "euclid:[" + fmt_double(a) + "," + fmt_double(b) + "]");
        }
        if (a != 0) fail_arg("builtin space 'maxpm': domain must start at 0");
        return FeltSpace::continuous(
            Box{{0.0}, {b}},
            [](std::span<const double> x, std::span<const double> y) {
                return std::max(x[0], y[0]);
            },
            "maxpm:[0," + fmt_double(b) + "]");
    }
    if (head == "discrete") {
        const std::size_t n = parse_size(rest, "builtin space 'discrete' size");
        if (n < 1) fail_arg("builtin space 'discrete': need n >= 1");
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
        for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
        return FeltSpace::finite(std::move(d), {}, "discrete:" + std::to_string(n));
    }
    fail_arg("unknown builtin space '" + std::string(spec) + "'");
}

namespace {

SelfMap scalar_map(double (*fn)(double), std::string name, const FeltSpace& space) {
    if (space.is_finite() || space.domain().dim() != 1)
        fail_arg("builtin map '" + name + "': needs a 1-d continuous space");
    return SelfMap::callable(
        [fn](std::span<const double> x) { return std::vector<double>{fn(x[0])}; }, std::move(name));
}

}  // namespace

SelfMap make_builtin_map(std::string_view spec, const FeltSpace& space) {
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (head == "ident") {
        if (space.is_finite()) {
            std::vector<std::size_t> m(space.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
            return SelfMap::table(std::move(m), "ident");
        }
        return SelfMap::callable(
            [](std::span<const double> x) { return std::vector<double>(x.begin(), x.end()); },
            "ident");
    }
    if (head == "cos") return scalar_map([](double x) { return std::cos(x); }, "cos", space);
    if (head == "half") return scalar_map([](double x) { return x / 2; }, "half", space);
    if (head == "const") {
        if (space.is_finite()) {
            std::size_t target = 0;
            if (auto idx = space.label_index(rest); idx.has_value()) {
                target = *idx;
            } else {
                target = parse_size(rest, "builtin map 'const' target");
                if (target >= space.size())
                    fail_arg("builtin map 'const': index " + std::to_string(target) +
                             " out of range for " + std::to_string(space.size()) + " points");
            }
            return SelfMap::table(std::vector<std::size_t>(space.size(), target),
                                  "const:" + std::string(rest));
        }
        if (space.domain().dim() != 1) fail_arg("builtin map 'const': needs a 1-d space");
        const double v = parse_double(rest, "builtin map 'const' value");
        if (!space.domain().contains(std::span<const double>{&v, 1}))
            fail_arg("builtin map 'const': value " + fmt_double(v) + " outside the domain");
        return SelfMap::callable(
            [v](std::span<const double>) { return std::vector<double>{v}; },
            "const:" + std::string(rest));
    }
    if (head == "affine") {
        const auto parts = split(rest, ',');
        if (parts.size() != 2) fail_arg("builtin map 'affine': expected parameters c,b");
        const double c = parse_double(parts[0], "builtin map 'affine' factor");
        const double b = parse_double(parts[1], "builtin map 'affine' offset");
        if (space.is_finite() || space.domain().dim() != 1)
            fail_arg("builtin map 'affine': needs a 1-d continuous space");
        return SelfMap::callable(
            [c, b](std::span<const double> x) { return std::vector<double>{c * x[0] + b}; },
            "affine:" + std::string(rest));
    }
    fail_arg("unknown builtin map '" + std::string(spec) + "'");
}

}  // namespace feltfp
