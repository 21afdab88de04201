#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "feltfp/axioms.hpp"
#include "feltfp/contraction.hpp"
#include "feltfp/oracle.hpp"
#include "feltfp/report.hpp"
#include "feltfp/solver.hpp"
#include "feltfp/space.hpp"

namespace feltfp {

/// A parsed space file: the finite space and, when the file carries a "map"
/// array, the self-map.
struct SpaceFile {
    FeltSpace space;
    std::optional<SelfMap> map;
};

/// Finite space+map format:
///   {"points": ["a","b"], "distance": [[0,1],[1,0]], "map": [1,0]}
/// "points" and "map" are optional, "distance" must be square with
/// nonnegative entries, map indices must be in range. Violations raise
/// std::invalid_argument with the offending field spelled out.
SpaceFile parse_space_json(const nlohmann::json& j);
SpaceFile load_space_file(const std::filesystem::path& path);

/// The same format back out (used to embed counterexamples).
nlohmann::json space_to_json(const FeltSpace& space, const SelfMap* map = nullptr);

nlohmann::json point_to_json(const FeltSpace& space, const Point& p);
nlohmann::json to_json(const FeltSpace& space, const Witness& w);
nlohmann::json to_json(const FeltSpace& space, const CheckReport& rep);
nlohmann::json to_json(const ModulusProfile& profile);
nlohmann::json to_json(const FeltSpace& space, const FeltContinuityEntry& entry);
nlohmann::json to_json(const FeltSpace& space, const Condition3Sampled& result);
nlohmann::json to_json(const FeltSpace& space, const SolveResult& result);
nlohmann::json to_json(const StressSummary& summary);

}  // namespace feltfp
