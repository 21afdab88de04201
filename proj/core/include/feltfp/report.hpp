#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "feltfp/space.hpp"

namespace feltfp {

/// pass and fail certify; pass_sampled is the strongest verdict a sampled
/// scan on a continuous space can give.
enum class Verdict { pass, fail, pass_sampled };

/// How a certificate or modulus level was established.
enum class Scope { exhaustive, sampled, closed_form };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Scope s) noexcept;

/// Concrete points and distance values exhibiting a violation (or, on pass,
/// optionally the extremal case a scan found).
struct Witness {
    std::vector<Point> points;
    std::vector<double> values;
    std::string note;
};

/// Outcome of one axiom/condition check.
struct CheckReport {
    std::string check_name;
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;
    std::map<std::string, double> detail;
    std::string detail_note;

    [[nodiscard]] bool ok() const noexcept { return verdict != Verdict::fail; }
};

}  // namespace feltfp
