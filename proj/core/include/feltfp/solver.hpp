#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feltfp/space.hpp"

namespace feltfp {

enum class StopReason { vanished, max_iter, cycle_detected };
std::string_view to_string(StopReason r) noexcept;

/// The Picard sequence x0, fx0, f^2 x0, ... with its consecutive-distance
/// record and a tail matrix of pairwise distances over the final window.
struct OrbitTrace {
    std::vector<Point> points;                     // x0..xN
    std::vector<double> consec;                    // consec[k] = p(x_{k+1}, x_k)
    std::vector<std::vector<double>> pair_window;  // p over the last min(window, N+1) points
    StopReason stopped_reason = StopReason::max_iter;

    [[nodiscard]] std::size_t iterations() const noexcept { return consec.size(); }
    [[nodiscard]] const Point& last() const { return points.back(); }
};

/// A fixed-point candidate with its residuals. certified demands both
/// p(x, fx) and p(x, x) within tol_fixed (exact zero on finite spaces).
struct FixedPointResult {
    Point x_star;
    double residual_fix = 0;               // p(x*, f x*)
    double self_dist = 0;                  // p(x*, x*)
    std::optional<double> tail_residual;   // last |p(x_{n+1}, fx*) - p(x*, fx*)|, when an orbit exists
    bool certified = false;
};

/// Everything solve() knows when it stops: the trace, the candidate (present
/// only when the vanishing hypothesis held), the residual diagnostic
/// sequence, and the contradiction-band flag.
struct SolveResult {
    OrbitTrace trace;
    std::optional<FixedPointResult> fixed_point;
    std::vector<double> eq4_residuals;
    bool hypothesis_met = false;
    bool theorem_violation_candidate = false;
    std::string reason;  // human-oriented outcome summary

    [[nodiscard]] bool certified() const noexcept {
        return fixed_point.has_value() && fixed_point->certified;
    }
};

/// Iterate the map from x0. Stops when the orbit provably stabilizes (finite
/// spaces: the step repeats a point at distance exactly 0), when `window`
/// consecutive steps fall below tol_zero (continuous spaces), when a finite
/// orbit revisits a state (the repeat is not recorded), or at max_iter.
OrbitTrace picard_orbit(const FeltSpace& space, const SelfMap& map, const Point& x0,
                        const Tolerances& tol = {});

/// Whether the trace realizes lim p(x_{n+1}, x_n) = 0 in the solver's
/// decidable sense: it stopped with reason vanished.
bool vanishing_hypothesis(const OrbitTrace& trace, const Tolerances& tol = {});

/// Residuals at a claimed fixed point. Equality fx = x is certified through
/// p(x, fx) = 0 (indiscernibility), never by comparing coordinates.
FixedPointResult verify_fixed_point(const FeltSpace& space, const SelfMap& map, const Point& x,
                                    const Tolerances& tol = {});

/// r_n = |p(x_{n+1}, f x_star) - p(x_star, f x_star)| along the recorded
/// orbit; when the orbit 0-converges to x_star the tail must vanish.
std::vector<double> eq4_diagnostic(const FeltSpace& space, const SelfMap& map,
                                   const OrbitTrace& trace, const Point& x_star);

/// Full pipeline: orbit, vanishing hypothesis, fixed-point verification at
/// the last iterate, residual diagnostic, and the contradiction-band flag
/// (residual_fix = 2*beta > 0 while consecutive distances dropped below
/// beta — impossible when the band condition holds, so it flags a would-be
/// theorem violation).
SolveResult solve(const FeltSpace& space, const SelfMap& map, const Point& x0,
                  const Tolerances& tol = {});

}  // namespace feltfp
