#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace feltfp {

/// Axis-aligned box in R^d. The only continuous domain shape supported.
class Box {
public:
    Box() = default;
    Box(std::vector<double> lo, std::vector<double> hi);

    [[nodiscard]] std::size_t dim() const noexcept { return lo_.size(); }
    [[nodiscard]] double lo(std::size_t axis) const { return lo_.at(axis); }
    [[nodiscard]] double hi(std::size_t axis) const { return hi_.at(axis); }
    [[nodiscard]] bool contains(std::span<const double> x) const noexcept;

private:
    std::vector<double> lo_;
    std::vector<double> hi_;
};

/// A point of a space: an index into a finite space, or real coordinates
/// inside a continuous space's box.
class Point {
public:
    Point() : rep_(std::size_t{0}) {}

    static Point at_index(std::size_t i) { return Point{Rep{i}}; }
    static Point at(double x) { return Point{Rep{std::vector<double>{x}}}; }
    static Point at(std::vector<double> coords) { return Point{Rep{std::move(coords)}}; }

    [[nodiscard]] bool is_index() const noexcept { return std::holds_alternative<std::size_t>(rep_); }
    [[nodiscard]] std::size_t index() const;
    [[nodiscard]] std::span<const double> coords() const;
    /// Single coordinate of a 1-d continuous point.
    [[nodiscard]] double scalar() const;

    friend bool operator==(const Point& a, const Point& b) { return a.rep_ == b.rep_; }

private:
    using Rep = std::variant<std::size_t, std::vector<double>>;
    explicit Point(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

/// Numeric knobs shared by samplers, checkers and the solver.
///
/// Finite tabulated spaces always compare distances exactly; tol_zero only
/// matters for continuous evaluations.
struct Tolerances {
    double tol_zero = 1e-12;       // below this a continuous distance counts as 0
    double tol_fixed = 1e-9;       // fixed-point residual bound on p(x, fx)
    std::size_t max_iter = 10000;  // Picard iteration cap
    std::size_t window = 3;        // consecutive sub-tol_zero steps to declare vanishing
    std::uint64_t seed = 0;        // sampler seed
    std::size_t sample_count = 2000;

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;
};

using DistanceFn = std::function<double(std::span<const double>, std::span<const double>)>;

/// A felt metric space: a point domain with a symmetric nonnegative distance
/// that may have p(x,x) > 0. Finite spaces tabulate the distance as an n x n
/// matrix; continuous spaces evaluate a callable over a box domain.
///
/// Construction does not require symmetry or any other axiom beyond
/// nonnegativity and finiteness: deciding the axioms is the axioms module's
/// job, so deliberately broken spaces must be representable.
class FeltSpace {
public:
    enum class Kind { finite, continuous };

    static FeltSpace finite(std::vector<std::vector<double>> matrix,
                            std::vector<std::string> labels = {},
                            std::string name = "");
    static FeltSpace continuous(Box domain, DistanceFn p, std::string name = "");

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] bool is_finite() const noexcept { return kind() == Kind::finite; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    /// Number of points; finite spaces only.
    [[nodiscard]] std::size_t size() const;
    /// Tabulated entry D[i][j] without Point wrapping; finite spaces only.
    [[nodiscard]] double at(std::size_t i, std::size_t j) const;
    [[nodiscard]] const std::vector<std::string>& labels() const;
    [[nodiscard]] std::optional<std::size_t> label_index(std::string_view label) const;
    [[nodiscard]] std::string point_label(std::size_t i) const;

    /// Domain box; continuous spaces only.
    [[nodiscard]] const Box& domain() const;

    [[nodiscard]] bool contains(const Point& x) const;

    /// p(x, y). Exact table lookup on finite spaces; callable evaluation on
    /// continuous ones. Throws std::domain_error when a point falls outside
    /// the space and std::runtime_error when the callable returns a value
    /// that is negative or not finite.
    [[nodiscard]] double distance(const Point& x, const Point& y) const;

private:
    struct Finite {
        std::size_t n = 0;
        std::vector<double> d;  // row-major n*n
        std::vector<std::string> labels;
    };
    struct Continuous {
        Box domain;
        DistanceFn p;
    };

    FeltSpace(std::variant<Finite, Continuous> rep, std::string name)
        : rep_(std::move(rep)), name_(std::move(name)) {}

    std::variant<Finite, Continuous> rep_;
    std::string name_;
};

using MapFn = std::function<std::vector<double>(std::span<const double>)>;

/// A total self-map on a space: an index table for finite spaces, a callable
/// for continuous ones. Closure into the domain is validated at apply time
/// for callables; an escaping image signals a non-self-map.
class SelfMap {
public:
    static SelfMap table(std::vector<std::size_t> images, std::string name = "");
    static SelfMap callable(MapFn f, std::string name = "");

    [[nodiscard]] bool is_table() const noexcept;
    [[nodiscard]] const std::vector<std::size_t>& images() const;
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    [[nodiscard]] Point apply(const FeltSpace& space, const Point& x) const;

private:
    SelfMap(std::variant<std::vector<std::size_t>, MapFn> rep, std::string name)
        : rep_(std::move(rep)), name_(std::move(name)) {}

    std::variant<std::vector<std::size_t>, MapFn> rep_;
    std::string name_;
};

/// Builtin spaces, by spec string:
///   "euclid:a,b"    |x - y| on [a, b]
///   "maxpm:0,b"     max(x, y) on [0, b] (nonzero self-distance off the origin)
///   "discrete:n"    n points, 0 on the diagonal, 1 off it
/// Throws std::invalid_argument for unknown names or bad parameters.
FeltSpace make_builtin_space(std::string_view spec);

/// Builtin maps, by spec string: "cos", "half", "ident", "const:v",
/// "affine:c,b" (x -> c*x + b). All except "ident" and "const" require a 1-d
/// continuous space; "ident" works everywhere, "const" takes an index or
/// label on finite spaces and a coordinate on continuous ones.
SelfMap make_builtin_map(std::string_view spec, const FeltSpace& space);

}  // namespace feltfp
