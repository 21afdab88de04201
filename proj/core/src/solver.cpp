#include "feltfp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace feltfp {

std::string_view to_string(StopReason r) noexcept {
    switch (r) {
        case StopReason::vanished: return "vanished";
        case StopReason::max_iter: return "max_iter";
        case StopReason::cycle_detected: return "cycle_detected";
    }
    return "?";
}

namespace {

void fill_pair_window(const FeltSpace& space, OrbitTrace& trace, std::size_t window) {
    const std::size_t w = std::min(window, trace.points.size());
    const std::size_t base = trace.points.size() - w;
    trace.pair_window.assign(w, std::vector<double>(w, 0.0));
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = 0; b < w; ++b)
            trace.pair_window[a][b] = space.distance(trace.points[base + a], trace.points[base + b]);
}

}  // namespace

OrbitTrace picard_orbit(const FeltSpace& space, const SelfMap& map, const Point& x0,
                        const Tolerances& tol) {
    tol.validate();
    if (!space.contains(x0)) throw std::domain_error("picard_orbit: x0 outside the domain");

    OrbitTrace trace;
    trace.points.push_back(x0);
    trace.stopped_reason = StopReason::max_iter;

    std::unordered_set<std::size_t> visited;
    if (space.is_finite()) visited.insert(x0.index());

    std::size_t below = 0;  // consecutive sub-tol_zero steps (continuous rule)
    while (trace.consec.size() < tol.max_iter) {
        const Point& xn = trace.points.back();
        Point xn1 = map.apply(space, xn);
        const double d = space.distance(xn1, xn);

        if (space.is_finite()) {
            // Exact stabilization: the step repeats the same index at
            // distance exactly 0, so every later iterate is identical and
            // the limit is attained, not approximated.
            if (d == 0.0 && xn1 == xn) {
                trace.points.push_back(std::move(xn1));
                trace.consec.push_back(d);
                trace.stopped_reason = StopReason::vanished;
                break;
            }
            if (visited.contains(xn1.index())) {
                // Revisit: the orbit is periodic from here on; the repeated
                // state is implied and not recorded.
                trace.stopped_reason = StopReason::cycle_detected;
                break;
            }
            visited.insert(xn1.index());
            trace.points.push_back(std::move(xn1));
            trace.consec.push_back(d);
            continue;
        }

        trace.points.push_back(std::move(xn1));
        trace.consec.push_back(d);
        below = d < tol.tol_zero ? below + 1 : 0;
        if (below >= tol.window) {
            trace.stopped_reason = StopReason::vanished;
            break;
        }
    }

    fill_pair_window(space, trace, tol.window);
    return trace;
}

bool vanishing_hypothesis(const OrbitTrace& trace, const Tolerances& tol) {
    tol.validate();
    if (trace.points.empty()) throw std::invalid_argument("vanishing_hypothesis: empty trace");
    return trace.stopped_reason == StopReason::vanished;
}

FixedPointResult verify_fixed_point(const FeltSpace& space, const SelfMap& map, const Point& x,
                                    const Tolerances& tol) {
    tol.validate();
    FixedPointResult res;
    res.x_star = x;
    const Point fx = map.apply(space, x);
    res.residual_fix = space.distance(x, fx);
    res.self_dist = space.distance(x, x);
    if (space.is_finite())
        res.certified = res.residual_fix == 0.0 && res.self_dist == 0.0;
    else
        res.certified = res.residual_fix <= tol.tol_fixed && res.self_dist <= tol.tol_fixed;
    return res;
}

std::vector<double> eq4_diagnostic(const FeltSpace& space, const SelfMap& map,
                                   const OrbitTrace& trace, const Point& x_star) {
    if (trace.points.empty()) throw std::invalid_argument("eq4_diagnostic: empty trace");
    const Point fx = map.apply(space, x_star);
    const double base = space.distance(x_star, fx);
    std::vector<double> r;
    r.reserve(trace.points.size() - 1);
    for (std::size_t n = 1; n < trace.points.size(); ++n)
        r.push_back(std::fabs(space.distance(trace.points[n], fx) - base));
    return r;
}

SolveResult solve(const FeltSpace& space, const SelfMap& map, const Point& x0,
                  const Tolerances& tol) {
    SolveResult res;
    res.trace = picard_orbit(space, map, x0, tol);
    res.hypothesis_met = vanishing_hypothesis(res.trace, tol);

    if (!res.hypothesis_met) {
        res.reason = std::string("vanishing hypothesis not met (") +
                     std::string(to_string(res.trace.stopped_reason)) + ")";
        return res;
    }

    const Point x_star = res.trace.last();
    FixedPointResult fp = verify_fixed_point(space, map, x_star, tol);
    res.eq4_residuals = eq4_diagnostic(space, map, res.trace, x_star);
    fp.tail_residual = res.eq4_residuals.empty() ? 0.0 : res.eq4_residuals.back();

    // Contradiction band from the convergence proof: a residual 2*beta > 0
    // next to consecutive distances below beta cannot happen under the band
    // condition. Firing is a bug certificate for the toolkit or the input's
    // claimed properties.
    const double beta = fp.residual_fix / 2;
    if (fp.residual_fix > tol.tol_fixed) {
        const double min_consec =
            res.trace.consec.empty()
                ? 0.0
                : *std::min_element(res.trace.consec.begin(), res.trace.consec.end());
        if (min_consec < beta) res.theorem_violation_candidate = true;
    }

    res.reason = fp.certified ? "certified fixed point" : "candidate not within tolerance";
    res.fixed_point = std::move(fp);
    return res;
}

}  // namespace feltfp
