#pragma once

#include <optional>
#include <vector>

#include "feltfp/report.hpp"
#include "feltfp/space.hpp"

namespace feltfp {

/// A certified band modulus: at each level, every probed pair (y, x) with
/// alpha <= p(y,x) < alpha + epsilon satisfied p(fy,fx) <= alpha.
struct ModulusProfile {
    struct Level {
        double alpha = 0;
        double epsilon = 0;
        Scope scope = Scope::exhaustive;
    };
    std::vector<Level> levels;
};

/// c in [0, 1). Constructor rejects anything else.
class ContractionFactor {
public:
    explicit ContractionFactor(double c);
    [[nodiscard]] double value() const noexcept { return c_; }

private:
    double c_;
};

/// Exact verdict for the band condition "alpha <= p(y,x) < alpha + epsilon
/// yields p(fy,fx) <= alpha" on a finite space. Emits a full modulus profile
/// on pass (one level per positive distance value, epsilon = gap to the next
/// larger value, 1 past the largest).
struct Condition3Finite {
    CheckReport report;
    ModulusProfile profile;  // filled on pass
    [[nodiscard]] bool pass() const noexcept { return report.ok(); }
};
Condition3Finite check_condition3_finite(const FeltSpace& space, const SelfMap& map);

/// Exact verdict for the two-sided band condition "alpha - epsilon < p(y,x)
/// < alpha + epsilon yields p(fy,fx) <= alpha" on a finite space.
///
/// Decided independently of check_condition3_finite: a direct band search
/// over the distance alphabet, with epsilon shrunk below half the minimal
/// positive gap between distinct values and below alpha (so alpha - epsilon
/// stays positive).
struct Condition2Finite {
    CheckReport report;
    double epsilon_used = 0;
    [[nodiscard]] bool pass() const noexcept { return report.ok(); }
};
Condition2Finite check_condition2_finite(const FeltSpace& space, const SelfMap& map);

/// Per-alpha outcome of the sampled band check on a continuous space.
struct BandLevel {
    double alpha = 0;
    std::optional<double> epsilon;   // largest grid epsilon with a clean band
    std::optional<Witness> witness;  // set when every grid epsilon fails
};

struct Condition3Sampled {
    std::vector<BandLevel> levels;
    [[nodiscard]] bool pass() const noexcept {
        for (const auto& l : levels)
            if (!l.epsilon) return false;
        return true;
    }
    [[nodiscard]] ModulusProfile profile() const;
    [[nodiscard]] CheckReport report() const;
};

/// For each alpha, scan sampled pairs over each grid epsilon (largest first)
/// and keep the largest epsilon whose band [alpha, alpha+eps) shows no
/// violation; if even the smallest epsilon fails, record the witness pair.
Condition3Sampled check_condition3_sampled(const FeltSpace& space, const SelfMap& map,
                                           const std::vector<double>& alphas,
                                           const std::vector<double>& epsilon_grid,
                                           const Tolerances& tol = {});

/// Deciles of the sampled distance distribution: a probe set that covers the
/// occupied range of a continuous space without caller input.
std::vector<double> default_alpha_levels(const FeltSpace& space, const Tolerances& tol = {});

/// The Banach bridge: the largest epsilon with c*(alpha + epsilon) <= alpha,
/// i.e. alpha*(1-c)/c for c > 0. For c = 0 every epsilon works and the
/// configured cap is returned.
double banach_epsilon(ContractionFactor c, double alpha, double epsilon_cap = 1e9);

/// Runs the two finite band-condition deciders independently and demands
/// identical verdicts; a disagreement is an implementation-bug certificate,
/// not a property of the space.
CheckReport check_equivalence_2_3(const FeltSpace& space, const SelfMap& map);

/// p(fy,fx) <= p(y,x) on every (enumerated/sampled) pair with p(y,x) > 0.
/// On finite spaces this coincides with the band condition; that agreement
/// is asserted internally on every call.
CheckReport nonexpansive_on_positive(const FeltSpace& space, const SelfMap& map,
                                     const Tolerances& tol = {});

}  // namespace feltfp
