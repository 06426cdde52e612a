// nonadd: partition-net integrals and non-additive set functions from the
// command line. Verdicts print as JSON; exit codes encode the outcome so
// scripts can branch on integrability:
//   0 value | 1 error | 2 divergent | 3 unknown | 4 unsupported family/ground

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "nonadd/json_io.hpp"
#include "nonadd/variation.hpp"

using namespace nonadd;

namespace {

constexpr int kExitValue = 0;
constexpr int kExitError = 1;
constexpr int kExitDivergent = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitUnsupported = 4;

GouldBudget parse_budget_spec(const std::string& spec, GouldBudget base) {
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string field =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("budget: fields look like key=value");
        std::string key = field.substr(0, eq);
        std::string val = field.substr(eq + 1);
        if (key == "depth") {
            base.depth = std::stoi(val);
        } else if (key == "chains") {
            base.chains = std::stoi(val);
        } else if (key == "arity") {
            base.split_arity = std::stoi(val);
        } else if (key == "tol") {
            base.tol = std::stod(val);
        } else if (key == "seed") {
            base.seed = std::stoull(val);
        } else {
            throw ParseError("budget: unknown key '" + key + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return base;
}

GouldBudget budget_from_env() {
    GouldBudget b;
    if (const char* env = std::getenv("NONADD_BUDGET")) {
        b = parse_budget_spec(env, b);
    }
    return b;
}

int status_exit(const IntegralVerdict& v) {
    switch (v.status) {
        case VerdictStatus::Value: return kExitValue;
        case VerdictStatus::Divergent: return kExitDivergent;
        case VerdictStatus::Unknown: return kExitUnknown;
    }
    return kExitError;
}

void emit(const Json& j, bool compact) {
    if (compact) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-net integrals over non-additive set functions"};
    app.require_subcommand(1);

    std::string file, set_lit, engine = "rl", budget_spec, report_path, csv_path;
    std::string profile_arg = "all";
    double tol = 1e-9;
    bool compact = false;
    std::uint64_t seed = 20240811ULL;
    int count = 25;

    auto* integrate = app.add_subcommand("integrate", "run an integral engine on a scenario file");
    integrate->add_option("file", file, "scenario JSON file")->required();
    integrate->add_option("--engine", engine, "rl | bs | gould")->check(CLI::IsMember({"rl", "bs", "gould"}));
    integrate->add_option("--set", set_lit, "restrict to a set literal");
    integrate->add_option("--budget", budget_spec, "depth=..,chains=..,arity=..,tol=..,seed=..");
    integrate->add_option("--tol", tol, "probe agreement tolerance");
    integrate->add_flag("--json", compact, "compact single-line JSON");

    auto* variation_cmd = app.add_subcommand("variation", "variation of the measure over a set");
    variation_cmd->add_option("file", file, "scenario JSON file")->required();
    variation_cmd->add_option("--set", set_lit, "set literal (default: the whole ground)");
    variation_cmd->add_flag("--json", compact, "compact single-line JSON");

    auto* properties_cmd = app.add_subcommand("properties", "property lattice of the measure");
    properties_cmd->add_option("file", file, "scenario JSON file")->required();
    properties_cmd->add_flag("--json", compact, "compact single-line JSON");

    auto* atoms_cmd = app.add_subcommand("atoms", "list the atoms of a finite-ground measure");
    atoms_cmd->add_option("file", file, "scenario JSON file")->required();
    atoms_cmd->add_flag("--json", compact, "compact single-line JSON");

    auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite on generated scenarios");
    verify_cmd->add_option("--profile", profile_arg, "finite | omega | all");
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--count", count, "scenarios per profile");
    verify_cmd->add_option("--report", report_path, "write the full JSON report here");
    verify_cmd->add_option("--tol", tol, "omega-ground tolerance");

    auto* trace_cmd = app.add_subcommand("trace", "emit sigma values along a refinement chain as CSV");
    trace_cmd->add_option("file", file, "scenario JSON file")->required();
    trace_cmd->add_option("--engine", engine, "gould (the only traced engine)");
    trace_cmd->add_option("--csv", csv_path, "output CSV path")->required();
    trace_cmd->add_option("--budget", budget_spec, "depth=..,chains=..,arity=..,tol=..,seed=..");

    CLI11_PARSE(app, argc, argv);

    try {
        if (integrate->parsed()) {
            ScenarioFile sc = load_scenario_file(file);
            FuncSpec f = sc.function;
            MSet domain = MSet::full(sc.ground);
            if (!set_lit.empty()) domain = parse_set_literal(set_lit, sc.ground);
            GouldBudget budget = budget_from_env();
            if (!budget_spec.empty()) budget = parse_budget_spec(budget_spec, budget);
            budget.tol = tol;
            IntegralVerdict v;
            if (engine == "rl") {
                v = rl_integrate(f, *sc.measure, domain);
            } else if (engine == "bs") {
                if (!set_lit.empty()) f = FuncSpec::chi_multiply(f, domain);
                v = birkhoff_simple(f, *sc.measure);
            } else {
                if (!set_lit.empty()) f = FuncSpec::chi_multiply(f, domain);
                v = gould_integrate(f, *sc.measure, budget);
            }
            emit(verdict_to_json(v), compact);
            return status_exit(v);
        }
        if (variation_cmd->parsed()) {
            ScenarioFile sc = load_scenario_file(file);
            MSet e = set_lit.empty() ? MSet::full(sc.ground) : parse_set_literal(set_lit, sc.ground);
            ExtValue v = variation(*sc.measure, e);
            Json j;
            j["set"] = e.to_literal();
            j["variation"] = extvalue_to_json(v);
            emit(j, compact);
            return kExitValue;
        }
        if (properties_cmd->parsed()) {
            ScenarioFile sc = load_scenario_file(file);
            emit(property_report_to_json(check_properties(*sc.measure)), compact);
            return kExitValue;
        }
        if (atoms_cmd->parsed()) {
            ScenarioFile sc = load_scenario_file(file);
            if (!sc.ground.is_finite()) {
                throw UnsupportedGround("atoms: only decidable on finite grounds here");
            }
            Json arr = Json::array();
            std::uint64_t full = 1ULL << sc.ground.size;
            for (std::uint64_t a = 1; a < full; ++a) {
                MSet s = MSet::finite(sc.ground, a);
                if (is_atom(*sc.measure, s)) arr.push_back(s.to_literal());
            }
            Json j;
            j["atoms"] = std::move(arr);
            emit(j, compact);
            return kExitValue;
        }
        if (verify_cmd->parsed()) {
            std::vector<Profile> profiles;
            for (const auto& p : default_profiles()) {
                if (profile_arg == "all" ||
                    (profile_arg == "finite" && p.kind == Profile::Kind::Finite) ||
                    (profile_arg == "omega" && p.kind == Profile::Kind::Omega)) {
                    profiles.push_back(p);
                }
            }
            if (profiles.empty()) throw ParseError("verify: profile must be finite, omega or all");
            CheckOptions opts;
            opts.tol = tol;
            auto reports = run_all(profiles, count, seed, opts);
            Json all = Json::array();
            for (const auto& r : reports) {
                std::cout << r.theorem << ": " << r.passes << " passed, " << r.failures.size()
                          << " failed, " << r.skips.size() << " skipped (of " << r.scenarios
                          << ")\n";
                all.push_back(theorem_report_to_json(r));
            }
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) throw Error("cannot write report to " + report_path);
                out << all.dump(2) << "\n";
            }
            return any_failure(reports) ? kExitError : kExitValue;
        }
        if (trace_cmd->parsed()) {
            if (engine != "gould") throw ParseError("trace: only the gould engine is traced");
            ScenarioFile sc = load_scenario_file(file);
            GouldBudget budget = budget_from_env();
            if (!budget_spec.empty()) budget = parse_budget_spec(budget_spec, budget);
            budget.want_trace = true;
            IntegralVerdict v = gould_integrate(sc.function, *sc.measure, budget);
            const auto& rows = v.trace.empty() ? v.certificate : v.trace;
            std::ofstream out(csv_path);
            if (!out) throw Error("cannot write CSV to " + csv_path);
            out << "step,k_blocks";
            for (int i = 0; i < sc.function.dim(); ++i) out << ",sigma_" << i;
            out << ",radius\n";
            for (std::size_t step = 0; step < rows.size(); ++step) {
                const auto& rec = rows[step];
                out << step << "," << rec.k_blocks;
                for (const auto& s : rec.sigma) {
                    char buf[64];
                    std::snprintf(buf, sizeof(buf), "%.17g", s.value());
                    out << "," << buf;
                }
                out << "," << rec.radius << "\n";
            }
            return status_exit(v);
        }
    } catch (const UnsupportedFamily& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const UnsupportedGround& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
