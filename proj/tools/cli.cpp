#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feltfp/axioms.hpp"
#include "feltfp/contraction.hpp"
#include "feltfp/json_io.hpp"
#include "feltfp/oracle.hpp"
#include "feltfp/solver.hpp"
#include "feltfp/space.hpp"

namespace feltfp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

/// Shortest decimal form that round-trips to the same double.
std::string fmt(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string_view strip_builtin(std::string_view s) {
    constexpr std::string_view prefix = "builtin:";
    return s.starts_with(prefix) ? s.substr(prefix.size()) : s;
}

struct Options {
    std::string space_src;
    std::string map_src;
    std::string x0;
    Tolerances tol;
    bool json = false;
    // stress/fuzz
    std::size_t n = 3;
    std::vector<double> alphabet = {0.0, 0.5, 1.0};
    std::size_t trials = 1000;
};

/// Space source: "builtin:NAME" or a path to a space file.
struct LoadedInput {
    FeltSpace space;
    std::optional<SelfMap> map;
};

LoadedInput load_input(const Options& opt) {
    std::optional<FeltSpace> space;
    std::optional<SelfMap> map;
    if (opt.space_src.starts_with("builtin:")) {
        space = make_builtin_space(strip_builtin(opt.space_src));
    } else {
        SpaceFile f = load_space_file(opt.space_src);
        space = std::move(f.space);
        map = std::move(f.map);
    }
    if (!opt.map_src.empty()) {
        if (map)
            throw std::invalid_argument("map given twice: the space file already embeds one");
        map = make_builtin_map(strip_builtin(opt.map_src), *space);
    }
    return LoadedInput{std::move(*space), std::move(map)};
}

Point parse_x0(const FeltSpace& space, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("iterate requires --x0");
    if (space.is_finite()) {
        if (auto idx = space.label_index(text)) return Point::at_index(*idx);
        std::size_t idx = 0;
        bool numeric = false;
        try {
            std::size_t used = 0;
            idx = std::stoul(text, &used);
            numeric = used == text.size();
        } catch (const std::exception&) {
            numeric = false;
        }
        if (!numeric)
            throw std::invalid_argument("--x0 '" + text + "' is neither a label nor an index");
        if (idx >= space.size())
            throw std::invalid_argument("--x0 index " + text + " out of range for " +
                                        std::to_string(space.size()) + " points");
        return Point::at_index(idx);
    }
    std::vector<double> coords;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string piece(rest.substr(0, comma));
        try {
            std::size_t used = 0;
            coords.push_back(std::stod(piece, &used));
            if (used != piece.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("--x0 '" + text + "' is not a coordinate list");
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    Point p = Point::at(std::move(coords));
    if (!space.contains(p))
        throw std::invalid_argument("--x0 '" + text + "' lies outside the space domain");
    return p;
}

std::string witness_inline(const FeltSpace& space, const Witness& w) {
    std::string s = " [witness:";
    for (const auto& p : w.points) {
        s += ' ';
        if (p.is_index()) {
            s += space.point_label(p.index());
        } else {
            s += '(';
            for (std::size_t i = 0; i < p.coords().size(); ++i) {
                if (i) s += ',';
                s += fmt(p.coords()[i]);
            }
            s += ')';
        }
    }
    if (!w.values.empty()) {
        s += " values";
        for (double v : w.values) {
            s += ' ';
            s += fmt(v);
        }
    }
    if (!w.note.empty()) s += " | " + w.note;
    s += ']';
    return s;
}

void print_report_line(std::ostream& out, const FeltSpace& space, const CheckReport& rep,
                       const std::string& name_override = {}) {
    const char* tag = rep.verdict == Verdict::pass           ? "PASS         "
                      : rep.verdict == Verdict::pass_sampled ? "PASS(sampled)"
                                                             : "FAIL         ";
    out << tag << "  " << (name_override.empty() ? rep.check_name : name_override);
    if (rep.witness) out << witness_inline(space, *rep.witness);
    out << '\n';
}

// ------------------------------------------------------------- check

int cmd_check(const Options& opt, std::ostream& out) {
    LoadedInput in = load_input(opt);
    const FeltSpace& space = in.space;
    const std::vector<double> epsilons = {1e-3, 1e-2, 0.1, 0.5, 1.0};
    const std::vector<double> eps_grid = {1.0, 0.5, 0.25, 0.1, 0.05, 0.025, 0.01};

    nlohmann::json checks = nlohmann::json::array();
    bool all_ok = true;
    auto take = [&](const CheckReport& rep, nlohmann::json j) {
        all_ok = all_ok && rep.ok();
        checks.push_back(std::move(j));
        if (!opt.json) print_report_line(out, space, rep);
    };

    const CheckReport indis = check_indiscernibility(space, opt.tol);
    take(indis, to_json(space, indis));
    const CheckReport sym = check_symmetry(space, opt.tol);
    take(sym, to_json(space, sym));

    for (const auto& entry : check_felt_continuity(space, epsilons, opt.tol)) {
        all_ok = all_ok && entry.report.ok();
        checks.push_back(to_json(space, entry));
        if (!opt.json)
            print_report_line(out, space, entry.report,
                              "felt_continuity(eps=" + fmt(entry.epsilon) + ")");
    }

    if (space.is_finite() && indis.verdict == Verdict::pass) {
        const CheckReport complete = check_zero_completeness_finite(space, opt.tol);
        take(complete, to_json(space, complete));
    }

    if (in.map) {
        const SelfMap& map = *in.map;
        if (space.is_finite()) {
            const Condition2Finite c2 = check_condition2_finite(space, map);
            take(c2.report, to_json(space, c2.report));
            const Condition3Finite c3 = check_condition3_finite(space, map);
            {
                nlohmann::json j = to_json(space, c3.report);
                j["profile"] = to_json(c3.profile);
                take(c3.report, std::move(j));
            }
            const CheckReport eq = check_equivalence_2_3(space, map);
            take(eq, to_json(space, eq));
        } else {
            const auto alphas = default_alpha_levels(space, opt.tol);
            const Condition3Sampled c3 = check_condition3_sampled(space, map, alphas, eps_grid, opt.tol);
            const CheckReport c3rep = c3.report();
            all_ok = all_ok && c3rep.ok();
            checks.push_back(to_json(space, c3));
            if (!opt.json) print_report_line(out, space, c3rep);
        }
        const CheckReport nonexp = nonexpansive_on_positive(space, map, opt.tol);
        take(nonexp, to_json(space, nonexp));
    }

    if (opt.json) {
        nlohmann::json j;
        j["space"] = space.name();
        j["map"] = in.map ? nlohmann::json(in.map->name()) : nlohmann::json(nullptr);
        j["checks"] = std::move(checks);
        j["all_ok"] = all_ok;
        out << j.dump(2) << '\n';
    } else {
        out << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
    }
    return all_ok ? kOk : kCheckFailed;
}

// ------------------------------------------------------------- iterate

int cmd_iterate(const Options& opt, std::ostream& out) {
    LoadedInput in = load_input(opt);
    if (!in.map) throw std::invalid_argument("iterate requires a map (--map or a file with one)");
    const Point x0 = parse_x0(in.space, opt.x0);

    const SolveResult res = solve(in.space, *in.map, x0, opt.tol);

    if (opt.json) {
        out << to_json(in.space, res).dump(2) << '\n';
    } else {
        out << "orbit: " << res.trace.iterations() << " iterations, stopped: "
            << to_string(res.trace.stopped_reason) << '\n';
        out << "vanishing hypothesis: " << (res.hypothesis_met ? "met" : "not met") << '\n';
        if (res.fixed_point) {
            const auto& fp = *res.fixed_point;
            out << "x_star: ";
            if (fp.x_star.is_index()) {
                out << in.space.point_label(fp.x_star.index());
            } else {
                for (std::size_t i = 0; i < fp.x_star.coords().size(); ++i)
                    out << (i ? "," : "") << fmt(fp.x_star.coords()[i]);
            }
            out << '\n';
            out << "residual_fix: " << fmt(fp.residual_fix) << "  self_dist: " << fmt(fp.self_dist)
                << "  tail_residual: " << (fp.tail_residual ? fmt(*fp.tail_residual) : "n/a")
                << '\n';
        }
        if (res.theorem_violation_candidate) out << "WARNING: theorem-violation candidate\n";
        out << "result: " << res.reason << '\n';
        out << (res.certified() ? "certified\n" : "not certified\n");
    }
    return res.certified() ? kOk : kCheckFailed;
}

// ------------------------------------------------------------- stress/fuzz

int run_summary(const Options& opt, bool fuzz, std::ostream& out) {
    EnumerationConfig cfg;
    cfg.n = opt.n;
    cfg.alphabet = opt.alphabet;
    cfg.seed = opt.tol.seed;
    cfg.trials = opt.trials;
    cfg.validate();

    const StressSummary sum = fuzz ? fuzz_equivalence(cfg) : stress_theorem(cfg);
    if (opt.json) {
        out << to_json(sum).dump(2) << '\n';
    } else {
        out << (fuzz ? "fuzz_equivalence" : "stress_theorem") << ": " << sum.cases_total
            << " cases, " << sum.cases_hypothesis_met << " vanishing orbits, "
            << sum.cases_certified << " certified, " << sum.counterexamples.size()
            << " counterexamples (" << fmt(sum.wall_time_seconds) << "s)\n";
        for (const auto& c : sum.counterexamples)
            out << "counterexample case " << c.case_index << ": " << c.reason << '\n'
                << "  " << space_to_json(c.space, &c.map).dump() << '\n';
    }
    return sum.counterexamples.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(std::span<const char* const> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fixed-point toolkit for felt metric spaces"};
    app.name("feltfp");
    Options opt;

    auto add_space_opts = [&](CLI::App* cmd, bool needs_space) {
        auto* s = cmd->add_option("--space", opt.space_src, "space source: builtin:NAME or a JSON file");
        if (needs_space) s->required();
        cmd->add_option("--map", opt.map_src, "builtin map name (cos, half, ident, const:v, affine:c,b)");
        cmd->add_option("--tol-zero", opt.tol.tol_zero, "numeric zero threshold");
        cmd->add_option("--tol-fixed", opt.tol.tol_fixed, "fixed-point residual bound");
        cmd->add_option("--max-iter", opt.tol.max_iter, "iteration cap");
        cmd->add_option("--window", opt.tol.window, "consecutive vanishing steps required");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.tol.seed, "sampler seed")->envname("FELTFP_SEED");
        cmd->add_flag("--json", opt.json, "emit JSON instead of human-readable lines");
    };

    auto* check = app.add_subcommand("check", "decide axioms and contraction conditions");
    add_space_opts(check, true);
    add_common(check);

    auto* iterate = app.add_subcommand("iterate", "run Picard iteration and certify a fixed point");
    add_space_opts(iterate, true);
    iterate->add_option("--x0", opt.x0, "start point (index/label or coordinates)")->required();
    add_common(iterate);

    auto* stress = app.add_subcommand("stress", "exhaustive theorem stress over small finite spaces");
    stress->add_option("--n", opt.n, "points per space (1..4)");
    stress->add_option("--alphabet", opt.alphabet, "distance alphabet")->delimiter(',');
    add_common(stress);

    auto* fuzz = app.add_subcommand("fuzz", "randomized condition-(2)/(3) differential test");
    fuzz->add_option("--n", opt.n, "points per space (1..4)");
    fuzz->add_option("--alphabet", opt.alphabet, "distance alphabet")->delimiter(',');
    fuzz->add_option("--trials", opt.trials, "random (space, map) draws");
    add_common(fuzz);

    app.require_subcommand(1);

    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        opt.tol.validate();
        if (check->parsed()) return cmd_check(opt, out);
        if (iterate->parsed()) return cmd_iterate(opt, out);
        if (stress->parsed()) return run_summary(opt, /*fuzz=*/false, out);
        return run_summary(opt, /*fuzz=*/true, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace feltfp::cli
