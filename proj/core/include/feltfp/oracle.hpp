#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "feltfp/space.hpp"

namespace feltfp {

/// Enumeration bounds for the brute-force stress harness. n is hard-capped
/// at 4: that is the documented desk-scale ceiling for exhaustive runs.
struct EnumerationConfig {
    std::size_t n = 3;
    std::vector<double> alphabet = {0.0, 0.5, 1.0};
    bool include_nonzero_diagonal = true;
    std::uint64_t seed = 0;      // randomized mode
    std::size_t trials = 1000;   // randomized mode

    /// Throws std::invalid_argument on bad bounds (n outside 1..4, empty or
    /// negative alphabet).
    void validate() const;
    /// Alphabet sorted ascending with duplicates removed.
    [[nodiscard]] std::vector<double> normalized_alphabet() const;
};

/// Streams every symmetric matrix over the alphabet with nonzero
/// off-diagonal entries (indiscernibility holds by construction) and, when
/// include_nonzero_diagonal, an unrestricted diagonal, in lexicographic
/// order (off-diagonal cells row-major, then diagonal cells; last cell
/// varies fastest).
class SpaceEnumerator {
public:
    explicit SpaceEnumerator(const EnumerationConfig& cfg);

    std::optional<FeltSpace> next();
    /// Closed-form count of spaces this enumerator yields.
    [[nodiscard]] std::size_t total() const noexcept { return total_; }

private:
    std::size_t n_;
    std::vector<double> offdiag_choices_;
    std::vector<double> diag_choices_;
    std::vector<std::size_t> counter_;  // one digit per cell
    std::size_t offdiag_cells_;
    bool done_ = false;
    std::size_t total_;
};

/// Streams all n^n index tables in lexicographic order.
class SelfMapEnumerator {
public:
    explicit SelfMapEnumerator(std::size_t n);

    std::optional<SelfMap> next();
    [[nodiscard]] std::size_t total() const noexcept { return total_; }

private:
    std::size_t n_;
    std::vector<std::size_t> counter_;
    bool done_ = false;
    std::size_t total_;
};

/// Full reproduction data for one failed case. On a correct implementation
/// no run ever produces one.
struct Counterexample {
    std::size_t case_index = 0;
    FeltSpace space;
    SelfMap map;
    std::optional<std::size_t> start;
    std::string reason;
};

struct StressSummary {
    std::size_t cases_total = 0;           // (space, map) pairs visited
    std::size_t cases_hypothesis_met = 0;  // (space, map, start) runs whose orbit vanished
    std::size_t cases_certified = 0;       // of those, certified fixed points
    std::vector<Counterexample> counterexamples;
    double wall_time_seconds = 0;
};

/// Exhaustive theorem stress: for every enumerated (space, map) pair passing
/// indiscernibility, symmetry and the band condition, every start point
/// whose orbit satisfies the vanishing hypothesis must land on a certified
/// fixed point with p(x,x) = 0 = p(x,fx), and the contradiction-band flag
/// must stay silent. Violations are recorded, not thrown.
StressSummary stress_theorem(const EnumerationConfig& cfg);

/// Randomized differential test of the two band-condition deciders over
/// `trials` seeded (space, map) draws with distances uniform over the
/// alphabet (zeros allowed anywhere; the equivalence does not need the
/// axioms). Disagreements are counterexamples.
StressSummary fuzz_equivalence(const EnumerationConfig& cfg);

}  // namespace feltfp
