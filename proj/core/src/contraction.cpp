#include "feltfp/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "feltfp/sampler.hpp"

namespace feltfp {

namespace {

/// Sorted distinct values of a finite space's distance matrix.
std::vector<double> distance_values(const FeltSpace& space) {
    std::vector<double> v;
    const std::size_t n = space.size();
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v.push_back(space.at(i, j));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct PairSample {
    const Point* y;
    const Point* x;
    double d;
    double d_image;
};

/// Ordered pair samples (y, x) with both distances precomputed. Pool pairs
/// are unordered, so each off-diagonal pair contributes both orders.
std::vector<PairSample> sampled_pairs(const FeltSpace& space, const SelfMap& map,
                                      const SamplePool& pool) {
    std::vector<Point> images;
    images.reserve(pool.points().size());
    for (const auto& p : pool.points()) images.push_back(map.apply(space, p));

    std::vector<PairSample> out;
    out.reserve(pool.pairs().size() * 2);
    for (const auto& [i, j] : pool.pairs()) {
        const Point& a = pool.points()[i];
        const Point& b = pool.points()[j];
        out.push_back({&a, &b, space.distance(a, b), space.distance(images[i], images[j])});
        if (i != j)
            out.push_back({&b, &a, space.distance(b, a), space.distance(images[j], images[i])});
    }
    return out;
}

}  // namespace

ContractionFactor::ContractionFactor(double c) : c_(c) {
    if (!(c >= 0 && c < 1))
        throw std::invalid_argument("contraction factor must satisfy 0 <= c < 1");
}

Condition3Finite check_condition3_finite(const FeltSpace& space, const SelfMap& map) {
    if (!space.is_finite())
        throw std::invalid_argument("condition_3 (finite): finite spaces only");
    Condition3Finite res;
    res.report.check_name = "condition_3";

    // Finite reduction: on a finite value set the band condition holds iff
    // the map never expands a positive distance. Scanning pairs in index
    // order makes the first violation the lexicographically smallest one.
    const std::size_t n = space.size();
    const auto& m = map.images();
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
            const double d = space.at(y, x);
            if (d <= 0) continue;
            const double d_image = space.at(m[y], m[x]);
            if (d_image > d) {
                res.report.verdict = Verdict::fail;
                res.report.witness = Witness{{Point::at_index(y), Point::at_index(x)},
                                             {d, d_image},
                                             "positive distance expanded by the map"};
                return res;
            }
        }
    }

    res.report.verdict = Verdict::pass;
    const auto values = distance_values(space);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] <= 0) continue;
        const double eps = k + 1 < values.size() ? values[k + 1] - values[k] : 1.0;
        res.profile.levels.push_back({values[k], eps, Scope::exhaustive});
    }
    return res;
}

Condition2Finite check_condition2_finite(const FeltSpace& space, const SelfMap& map) {
    if (!space.is_finite())
        throw std::invalid_argument("condition_2 (finite): finite spaces only");
    Condition2Finite res;
    res.report.check_name = "condition_2";

    const auto values = distance_values(space);
    std::vector<double> positives;
    for (double v : values)
        if (v > 0) positives.push_back(v);
    if (positives.empty()) {
        res.report.verdict = Verdict::pass;
        res.report.detail_note = "no positive distances; every band is empty";
        return res;
    }

    // Shrink epsilon below half the minimal gap so each band isolates one
    // alphabet value, and below alpha itself so alpha - epsilon stays > 0.
    double min_gap = positives.front();  // gap from 0 when 0 is a value; else bounded by v_min anyway
    for (std::size_t k = 1; k < values.size(); ++k)
        min_gap = std::min(min_gap, values[k] - values[k - 1]);
    const double eps0 = min_gap / 2;
    res.epsilon_used = eps0;
    res.report.detail["epsilon"] = eps0;

    const std::size_t n = space.size();
    const auto& m = map.images();
    for (double alpha : positives) {
        const double lo = alpha - eps0;
        const double hi = alpha + eps0;
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t x = 0; x < n; ++x) {
                const double d = space.at(y, x);
                if (!(d > lo && d < hi)) continue;
                const double d_image = space.at(m[y], m[x]);
                if (d_image > alpha) {
                    res.report.verdict = Verdict::fail;
                    res.report.detail["alpha"] = alpha;
                    res.report.witness = Witness{{Point::at_index(y), Point::at_index(x)},
                                                 {d, d_image},
                                                 "band pair mapped above alpha"};
                    return res;
                }
            }
        }
    }
    res.report.verdict = Verdict::pass;
    return res;
}

ModulusProfile Condition3Sampled::profile() const {
    ModulusProfile p;
    for (const auto& l : levels)
        if (l.epsilon) p.levels.push_back({l.alpha, *l.epsilon, Scope::sampled});
    return p;
}

CheckReport Condition3Sampled::report() const {
    CheckReport rep;
    rep.check_name = "condition_3_sampled";
    rep.detail["levels_probed"] = static_cast<double>(levels.size());
    std::size_t failed = 0;
    for (const auto& l : levels) {
        if (l.witness && !rep.witness) {
            rep.witness = l.witness;
            rep.detail["alpha"] = l.alpha;
        }
        if (!l.epsilon) ++failed;
    }
    rep.detail["levels_failed"] = static_cast<double>(failed);
    rep.verdict = failed == 0 ? Verdict::pass_sampled : Verdict::fail;
    return rep;
}

Condition3Sampled check_condition3_sampled(const FeltSpace& space, const SelfMap& map,
                                           const std::vector<double>& alphas,
                                           const std::vector<double>& epsilon_grid,
                                           const Tolerances& tol) {
    tol.validate();
    if (space.is_finite())
        throw std::invalid_argument("condition_3 (sampled): continuous spaces only");
    if (alphas.empty() || epsilon_grid.empty())
        throw std::invalid_argument("condition_3 (sampled): alphas and epsilon_grid must be nonempty");
    for (double a : alphas)
        if (!(a > 0)) throw std::invalid_argument("condition_3 (sampled): alphas must be > 0");
    for (double e : epsilon_grid)
        if (!(e > 0)) throw std::invalid_argument("condition_3 (sampled): epsilons must be > 0");

    const SamplePool pool(space.domain(), tol);
    const auto pairs = sampled_pairs(space, map, pool);

    std::vector<double> grid = epsilon_grid;
    std::sort(grid.begin(), grid.end(), std::greater<>());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    Condition3Sampled res;
    for (double alpha : alphas) {
        BandLevel level;
        level.alpha = alpha;
        const PairSample* last_violation = nullptr;
        for (double eps : grid) {
            const PairSample* violation = nullptr;
            for (const auto& ps : pairs) {
                if (!(ps.d >= alpha && ps.d < alpha + eps)) continue;
                if (ps.d_image > alpha + tol.tol_zero) {
                    violation = &ps;
                    break;
                }
            }
            if (!violation) {
                level.epsilon = eps;
                break;
            }
            last_violation = violation;
        }
        if (!level.epsilon && last_violation) {
            level.witness = Witness{{*last_violation->y, *last_violation->x},
                                    {last_violation->d, last_violation->d_image},
                                    "band pair mapped above alpha at every grid epsilon"};
        }
        res.levels.push_back(std::move(level));
    }
    return res;
}

std::vector<double> default_alpha_levels(const FeltSpace& space, const Tolerances& tol) {
    tol.validate();
    if (space.is_finite())
        throw std::invalid_argument("alpha levels: continuous spaces only");
    const SamplePool pool(space.domain(), tol);
    std::vector<double> d;
    d.reserve(pool.pairs().size());
    for (const auto& [i, j] : pool.pairs())
        d.push_back(space.distance(pool.points()[i], pool.points()[j]));
    std::sort(d.begin(), d.end());

    std::vector<double> out;
    for (int q = 1; q <= 9; ++q) {
        const auto pos = static_cast<std::size_t>(
            static_cast<double>(q) / 10.0 * static_cast<double>(d.size() - 1));
        const double alpha = d[pos];
        if (alpha > tol.tol_zero && (out.empty() || alpha != out.back())) out.push_back(alpha);
    }
    return out;
}

double banach_epsilon(ContractionFactor c, double alpha, double epsilon_cap) {
    if (!(alpha > 0)) throw std::invalid_argument("banach_epsilon: alpha must be > 0");
    if (!(epsilon_cap > 0)) throw std::invalid_argument("banach_epsilon: epsilon cap must be > 0");
    if (c.value() == 0) return epsilon_cap;
    return alpha * (1 - c.value()) / c.value();
}

CheckReport check_equivalence_2_3(const FeltSpace& space, const SelfMap& map) {
    const auto c2 = check_condition2_finite(space, map);
    const auto c3 = check_condition3_finite(space, map);

    CheckReport rep;
    rep.check_name = "equivalence_2_3";
    rep.detail["condition_2_holds"] = c2.pass() ? 1 : 0;
    rep.detail["condition_3_holds"] = c3.pass() ? 1 : 0;
    if (c2.pass() == c3.pass()) {
        rep.verdict = Verdict::pass;
        return rep;
    }
    rep.verdict = Verdict::fail;
    rep.detail_note =
        "implementation bug certificate: conditions (2) and (3) are provably equivalent "
        "on finite spaces but the deciders disagreed";
    rep.witness = c2.pass() ? c3.report.witness : c2.report.witness;
    return rep;
}

CheckReport nonexpansive_on_positive(const FeltSpace& space, const SelfMap& map,
                                     const Tolerances& tol) {
    CheckReport rep;
    rep.check_name = "nonexpansive_on_positive";

    if (space.is_finite()) {
        const std::size_t n = space.size();
        const auto& m = map.images();
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t x = 0; x < n; ++x) {
                const double d = space.at(y, x);
                if (d <= 0) continue;
                const double d_image = space.at(m[y], m[x]);
                if (d_image > d) {
                    rep.verdict = Verdict::fail;
                    rep.witness = Witness{{Point::at_index(y), Point::at_index(x)},
                                          {d, d_image},
                                          "positive distance expanded by the map"};
                    break;
                }
            }
            if (rep.verdict == Verdict::fail) break;
        }
        if (rep.verdict != Verdict::fail) rep.verdict = Verdict::pass;

        // Same predicate as the finite band reduction; a mismatch here is an
        // internal inconsistency, not a property of the input.
        if (check_condition3_finite(space, map).pass() != rep.ok())
            throw std::logic_error(
                "internal: nonexpansive_on_positive disagrees with check_condition3_finite");
        return rep;
    }

    tol.validate();
    const SamplePool pool(space.domain(), tol);
    for (const auto& ps : sampled_pairs(space, map, pool)) {
        if (ps.d <= tol.tol_zero) continue;
        if (ps.d_image > ps.d + tol.tol_zero) {
            rep.verdict = Verdict::fail;
            rep.witness = Witness{{*ps.y, *ps.x}, {ps.d, ps.d_image},
                                  "positive distance expanded by the map"};
            return rep;
        }
    }
    rep.verdict = Verdict::pass_sampled;
    return rep;
}

}  // namespace feltfp
