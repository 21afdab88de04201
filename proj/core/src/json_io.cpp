#include "feltfp/json_io.hpp"

#include <fstream>
#include <set>

namespace feltfp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("space file: " + msg); }

}  // namespace

SpaceFile parse_space_json(const json& j) {
    if (!j.is_object()) fail("top level must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "points" && key != "distance" && key != "map" && key != "name")
            fail("unknown key '" + key + "'");

    if (!j.contains("distance")) fail("missing required key 'distance'");
    const json& dj = j.at("distance");
    if (!dj.is_array() || dj.empty()) fail("'distance' must be a nonempty array of rows");
    const std::size_t n = dj.size();

    std::vector<std::vector<double>> matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = dj.at(i);
        if (!row.is_array()) fail("distance row " + std::to_string(i) + " is not an array");
        if (row.size() != n)
            fail("matrix is not square: row " + std::to_string(i) + " has " +
                 std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        matrix[i].reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const json& cell = row.at(k);
            if (!cell.is_number())
                fail("distance[" + std::to_string(i) + "][" + std::to_string(k) +
                     "] is not a number");
            const double v = cell.get<double>();
            if (v < 0)
                fail("distance[" + std::to_string(i) + "][" + std::to_string(k) +
                     "] is negative (" + cell.dump() + ")");
            matrix[i].push_back(v);
        }
    }

    std::vector<std::string> labels;
    if (j.contains("points")) {
        const json& pj = j.at("points");
        if (!pj.is_array()) fail("'points' must be an array of labels");
        if (pj.size() != n)
            fail("'points' has " + std::to_string(pj.size()) + " labels for " + std::to_string(n) +
                 " matrix rows");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < n; ++i) {
            if (!pj.at(i).is_string()) fail("points[" + std::to_string(i) + "] is not a string");
            auto label = pj.at(i).get<std::string>();
            if (!seen.insert(label).second) fail("duplicate point label '" + label + "'");
            labels.push_back(std::move(label));
        }
    }

    std::string name = j.value("name", std::string{});
    SpaceFile out{FeltSpace::finite(std::move(matrix), std::move(labels), std::move(name)),
                  std::nullopt};

    if (j.contains("map")) {
        const json& mj = j.at("map");
        if (!mj.is_array()) fail("'map' must be an array of point indices");
        if (mj.size() != n)
            fail("'map' has " + std::to_string(mj.size()) + " entries for " + std::to_string(n) +
                 " points");
        std::vector<std::size_t> images;
        images.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& cell = mj.at(i);
            if (!cell.is_number_integer() || cell.get<long long>() < 0)
                fail("map[" + std::to_string(i) + "] is not a nonnegative integer");
            const auto img = cell.get<unsigned long long>();
            if (img >= n)
                fail("map[" + std::to_string(i) + "] = " + std::to_string(img) +
                     " out of range for " + std::to_string(n) + " points");
            images.push_back(static_cast<std::size_t>(img));
        }
        out.map = SelfMap::table(std::move(images));
    }
    return out;
}

SpaceFile load_space_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open space file '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("space file '" + path.string() + "': " + e.what());
    }
    return parse_space_json(j);
}

json space_to_json(const FeltSpace& space, const SelfMap* map) {
    json j;
    const std::size_t n = space.size();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) row.push_back(space.at(i, k));
        rows.push_back(std::move(row));
    }
    j["distance"] = std::move(rows);
    if (!space.labels().empty()) j["points"] = space.labels();
    if (!space.name().empty()) j["name"] = space.name();
    if (map && map->is_table()) j["map"] = map->images();
    return j;
}

json point_to_json(const FeltSpace& space, const Point& p) {
    json j;
    if (p.is_index()) {
        j["index"] = p.index();
        if (!space.labels().empty()) j["label"] = space.point_label(p.index());
        return j;
    }
    j["coords"] = std::vector<double>(p.coords().begin(), p.coords().end());
    return j;
}

json to_json(const FeltSpace& space, const Witness& w) {
    json j;
    json pts = json::array();
    for (const auto& p : w.points) pts.push_back(point_to_json(space, p));
    j["points"] = std::move(pts);
    j["values"] = w.values;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

json to_json(const FeltSpace& space, const CheckReport& rep) {
    json j;
    j["check"] = rep.check_name;
    j["verdict"] = std::string(to_string(rep.verdict));
    j["witness"] = rep.witness ? to_json(space, *rep.witness) : json(nullptr);
    json detail(rep.detail);
    if (!rep.detail_note.empty()) detail["note"] = rep.detail_note;
    j["detail"] = std::move(detail);
    return j;
}

json to_json(const ModulusProfile& profile) {
    json levels = json::array();
    for (const auto& l : profile.levels)
        levels.push_back(
            {{"alpha", l.alpha}, {"epsilon", l.epsilon}, {"scope", std::string(to_string(l.scope))}});
    return json{{"levels", std::move(levels)}};
}

json to_json(const FeltSpace& space, const FeltContinuityEntry& entry) {
    json j = to_json(space, entry.report);
    j["epsilon"] = entry.epsilon;
    if (entry.certificate)
        j["certificate"] = {{"epsilon", entry.certificate->epsilon},
                            {"delta", entry.certificate->delta},
                            {"scope", std::string(to_string(entry.certificate->scope))}};
    return j;
}

json to_json(const FeltSpace& space, const Condition3Sampled& result) {
    json j = to_json(space, result.report());
    j["profile"] = to_json(result.profile());
    json levels = json::array();
    for (const auto& l : result.levels) {
        json lj;
        lj["alpha"] = l.alpha;
        lj["epsilon"] = l.epsilon ? json(*l.epsilon) : json(nullptr);
        if (l.witness) lj["witness"] = to_json(space, *l.witness);
        levels.push_back(std::move(lj));
    }
    j["levels"] = std::move(levels);
    return j;
}

json to_json(const FeltSpace& space, const SolveResult& result) {
    json j;
    j["trace_length"] = result.trace.points.size();
    j["iterations"] = result.trace.iterations();
    j["stopped_reason"] = std::string(to_string(result.trace.stopped_reason));
    j["hypothesis_met"] = result.hypothesis_met;
    j["certified"] = result.certified();
    j["theorem_violation_candidate"] = result.theorem_violation_candidate;
    j["reason"] = result.reason;
    if (result.fixed_point) {
        const auto& fp = *result.fixed_point;
        j["x_star"] = point_to_json(space, fp.x_star);
        j["residual_fix"] = fp.residual_fix;
        j["self_dist"] = fp.self_dist;
        j["tail_residual"] = fp.tail_residual ? json(*fp.tail_residual) : json(nullptr);
    }
    // last few diagnostic residuals; full orbits can run to thousands
    const std::size_t keep = std::min<std::size_t>(result.eq4_residuals.size(), 8);
    j["eq4_tail"] =
        std::vector<double>(result.eq4_residuals.end() - static_cast<std::ptrdiff_t>(keep),
                            result.eq4_residuals.end());
    return j;
}

json to_json(const StressSummary& summary) {
    // wall_time_seconds is deliberately left out: JSON output is required to
    // be byte-identical across reruns with the same flags and seed.
    json j;
    j["cases_total"] = summary.cases_total;
    j["cases_hypothesis_met"] = summary.cases_hypothesis_met;
    j["cases_certified"] = summary.cases_certified;
    json cex = json::array();
    for (const auto& c : summary.counterexamples) {
        json cj;
        cj["case_index"] = c.case_index;
        cj["reason"] = c.reason;
        cj["space"] = space_to_json(c.space, &c.map);
        if (c.start) cj["start"] = *c.start;
        cex.push_back(std::move(cj));
    }
    j["counterexamples"] = std::move(cex);
    return j;
}

}  // namespace feltfp
