#pragma once

#include <optional>
#include <vector>

#include "feltfp/report.hpp"
#include "feltfp/space.hpp"

namespace feltfp {

/// For a probe level epsilon, a delta such that every (exhaustively scanned
/// or sampled) triple (x, y, z) with p(z,y) < delta satisfies
/// |p(z,x) - p(y,x)| < epsilon.
struct DeltaCertificate {
    double epsilon = 0;
    double delta = 0;
    Scope scope = Scope::exhaustive;
};

/// Per-epsilon outcome of the uniform-continuity check: a certificate on
/// pass, a witness triple in the report on fail.
struct FeltContinuityEntry {
    double epsilon = 0;
    std::optional<DeltaCertificate> certificate;
    CheckReport report;
};

/// Distinct points at distance zero are forbidden; nonzero self-distance is
/// fine. Exhaustive on finite spaces, sampled (over pairs separated by more
/// than tol_zero in the domain) on continuous ones.
CheckReport check_indiscernibility(const FeltSpace& space, const Tolerances& tol = {});

/// p(x,y) = p(y,x). Exact on finite spaces, within tol_zero on sampled pairs.
CheckReport check_symmetry(const FeltSpace& space, const Tolerances& tol = {});

/// Uniform continuity of p in its first argument: for each probe epsilon,
/// certify a positive delta or exhibit a violating triple.
///
/// On a finite space delta*(eps) = min{ p(z,y) : |p(z,x) - p(y,x)| >= eps }
/// over all ordered triples; an empty set certifies delta = 1, a zero
/// minimum is a hard failure (the witness triple breaks the axiom for every
/// delta). Continuous spaces get the same reduction over a sample pool.
std::vector<FeltContinuityEntry> check_felt_continuity(const FeltSpace& space,
                                                       const std::vector<double>& epsilons,
                                                       const Tolerances& tol = {});

/// Finite spaces satisfying the indiscernibility axiom are 0-complete: a
/// sequence whose pairwise distances vanish is eventually constant at a point
/// with zero self-distance, which is its 0-limit. Returns a structural pass
/// after a seeded sequence simulation fails to construct a counterexample.
/// Throws std::invalid_argument when the space fails indiscernibility.
CheckReport check_zero_completeness_finite(const FeltSpace& space, const Tolerances& tol = {},
                                           std::size_t trials = 1000);

/// 0-continuity of the map at x. Finite rule (exact): vacuous when
/// p(x,x) > 0 (no sequence 0-converges to x), otherwise pass iff
/// p(fx,fx) = 0. Continuous spaces: sampled sequences converging to x in the
/// domain are kept only when p(x_n, x) actually falls below tol_zero, and
/// their images must then do the same.
CheckReport check_zero_continuity(const FeltSpace& space, const SelfMap& map, const Point& x,
                                  const Tolerances& tol = {});

}  // namespace feltfp
