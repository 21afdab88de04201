#include "feltfp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "feltfp/axioms.hpp"
#include "feltfp/contraction.hpp"
#include "feltfp/solver.hpp"

namespace feltfp {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < exp; ++k) r *= base;
    return r;
}

FeltSpace build_space(std::size_t n, const std::vector<double>& offdiag,
                      const std::vector<double>& diag) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++c) m[i][j] = m[j][i] = offdiag[c];
    for (std::size_t i = 0; i < n; ++i) m[i][i] = diag[i];
    return FeltSpace::finite(std::move(m));
}

}  // namespace

void EnumerationConfig::validate() const {
    if (n < 1 || n > 4)
        throw std::invalid_argument("enumeration: n must be in 1..4 (desk-scale cap exceeded)");
    if (alphabet.empty()) throw std::invalid_argument("enumeration: empty alphabet");
    for (double v : alphabet)
        if (!(v >= 0) || !std::isfinite(v))
            throw std::invalid_argument("enumeration: alphabet values must be finite and >= 0");
}

std::vector<double> EnumerationConfig::normalized_alphabet() const {
    std::vector<double> a = alphabet;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// ---------------------------------------------------------------- enumerators

SpaceEnumerator::SpaceEnumerator(const EnumerationConfig& cfg) {
    cfg.validate();
    n_ = cfg.n;
    const auto a = cfg.normalized_alphabet();
    for (double v : a)
        if (v > 0) offdiag_choices_.push_back(v);
    if (offdiag_choices_.empty())
        throw std::invalid_argument("enumeration: alphabet has no positive value for off-diagonals");
    diag_choices_ = cfg.include_nonzero_diagonal ? a : std::vector<double>{0.0};

    offdiag_cells_ = n_ * (n_ - 1) / 2;
    counter_.assign(offdiag_cells_ + n_, 0);
    total_ = ipow(offdiag_choices_.size(), offdiag_cells_) * ipow(diag_choices_.size(), n_);
}

std::optional<FeltSpace> SpaceEnumerator::next() {
    if (done_) return std::nullopt;

    std::vector<double> offdiag(offdiag_cells_);
    for (std::size_t c = 0; c < offdiag_cells_; ++c) offdiag[c] = offdiag_choices_[counter_[c]];
    std::vector<double> diag(n_);
    for (std::size_t i = 0; i < n_; ++i) diag[i] = diag_choices_[counter_[offdiag_cells_ + i]];
    FeltSpace space = build_space(n_, offdiag, diag);

    // mixed-radix increment, last cell fastest
    std::size_t c = counter_.size();
    while (c > 0) {
        --c;
        const std::size_t radix = c < offdiag_cells_ ? offdiag_choices_.size() : diag_choices_.size();
        if (++counter_[c] < radix) break;
        counter_[c] = 0;
        if (c == 0) done_ = true;
    }
    return space;
}

SelfMapEnumerator::SelfMapEnumerator(std::size_t n) : n_(n) {
    if (n < 1 || n > 4) throw std::invalid_argument("enumeration: n must be in 1..4");
    counter_.assign(n_, 0);
    total_ = ipow(n_, n_);
}

std::optional<SelfMap> SelfMapEnumerator::next() {
    if (done_) return std::nullopt;
    SelfMap map = SelfMap::table(counter_);

    std::size_t c = counter_.size();
    while (c > 0) {
        --c;
        if (++counter_[c] < n_) break;
        counter_[c] = 0;
        if (c == 0) done_ = true;
    }
    return map;
}

// ---------------------------------------------------------------- stress

StressSummary stress_theorem(const EnumerationConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    StressSummary sum;

    SpaceEnumerator spaces(cfg);
    std::size_t spaces_seen = 0;
    while (auto space = spaces.next()) {
        ++spaces_seen;
        const bool axioms_ok = check_indiscernibility(*space).verdict == Verdict::pass &&
                               check_symmetry(*space).verdict == Verdict::pass;

        SelfMapEnumerator maps(cfg.n);
        while (auto map = maps.next()) {
            const std::size_t case_index = sum.cases_total++;
            if (!axioms_ok) continue;  // outside the theorem's hypotheses
            if (!check_condition3_finite(*space, *map).pass()) continue;

            for (std::size_t start = 0; start < cfg.n; ++start) {
                const SolveResult run = solve(*space, *map, Point::at_index(start));
                if (!run.hypothesis_met) continue;
                ++sum.cases_hypothesis_met;

                std::string reason;
                if (!run.certified()) {
                    reason = "vanishing orbit without a certified fixed point";
                } else if (run.theorem_violation_candidate) {
                    reason = "contradiction-band flag fired under the band condition";
                } else {
                    // independent exact re-evaluation of the conclusion
                    const std::size_t xs = run.fixed_point->x_star.index();
                    if (map->images()[xs] != xs || space->at(xs, map->images()[xs]) != 0.0 ||
                        space->at(xs, xs) != 0.0)
                        reason = "certified point fails exact re-evaluation";
                }
                if (reason.empty()) {
                    ++sum.cases_certified;
                } else {
                    sum.counterexamples.push_back(
                        Counterexample{case_index, *space, *map, start, reason});
                }
            }
        }
    }

    if (spaces_seen != spaces.total())
        throw std::logic_error("enumeration bug: yielded " + std::to_string(spaces_seen) +
                               " spaces, closed form says " + std::to_string(spaces.total()));

    sum.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

StressSummary fuzz_equivalence(const EnumerationConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    StressSummary sum;

    const auto alphabet = cfg.normalized_alphabet();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick_value(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_point(0, cfg.n - 1);

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        std::vector<std::vector<double>> m(cfg.n, std::vector<double>(cfg.n, 0.0));
        for (std::size_t i = 0; i < cfg.n; ++i)
            for (std::size_t j = i; j < cfg.n; ++j) m[i][j] = m[j][i] = alphabet[pick_value(rng)];
        std::vector<std::size_t> images(cfg.n);
        for (std::size_t i = 0; i < cfg.n; ++i) images[i] = pick_point(rng);

        FeltSpace space = FeltSpace::finite(std::move(m));
        SelfMap map = SelfMap::table(std::move(images));

        ++sum.cases_total;
        if (check_condition2_finite(space, map).pass() != check_condition3_finite(space, map).pass())
            sum.counterexamples.push_back(Counterexample{
                t, std::move(space), std::move(map), std::nullopt, "conditions (2)/(3) disagree"});
    }

    sum.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

}  // namespace feltfp
