#include "nonadd/json_io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>

namespace nonadd {

namespace {

std::string decimal17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ParseError(std::string(where) + ": unknown field '" + key + "'");
    }
}

std::int64_t int_from(const Json& j, const char* where) {
    if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Json rat_to_json(const Rat& q) {
    Json j;
    j["num"] = q.num();
    j["den"] = q.den();
    j["decimal"] = decimal17(q.to_double());
    return j;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        auto q = Rat::parse(j.get<std::string>());
        if (!q) throw ParseError("rational: cannot parse '" + j.get<std::string>() + "'");
        return *q;
    }
    if (j.is_object()) {
        reject_unknown(j, {"num", "den", "decimal"}, "rational");
        if (!j.contains("num") || !j.contains("den")) {
            throw ParseError("rational: object form needs num and den");
        }
        return Rat(int_from(j["num"], "rational num"), int_from(j["den"], "rational den"));
    }
    throw ParseError("rational: expected integer, \"a/b\" string, or {num,den}");
}

Json scalar_to_json(const Scalar& s) {
    if (s.exact()) {
        Json j = rat_to_json(s.rat());
        j["radius"] = 0.0;
        return j;
    }
    Json j;
    j["decimal"] = decimal17(s.value());
    j["radius"] = s.radius();
    return j;
}

Json extvalue_to_json(const ExtValue& v) {
    if (v.infinite) return Json("inf");
    return scalar_to_json(v.finite);
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

Json verdict_to_json(const IntegralVerdict& v) {
    Json j;
    switch (v.status) {
        case VerdictStatus::Value: j["status"] = "value"; break;
        case VerdictStatus::Divergent: j["status"] = "divergent"; break;
        case VerdictStatus::Unknown: j["status"] = "unknown"; break;
    }
    if (v.status == VerdictStatus::Value) {
        j["value"] = vec_to_json(v.value);
        j["radius"] = v.radius();
        j["abs_convergent"] = v.abs_convergent;
        j["probe_max_dev"] = v.probe_max_dev;
    }
    if (v.status == VerdictStatus::Divergent) {
        Json cert = Json::array();
        for (const auto& rec : v.certificate) {
            Json r;
            r["partition"] = rec.partition;
            r["k_blocks"] = rec.k_blocks;
            r["sigma"] = vec_to_json(rec.sigma);
            r["radius"] = rec.radius;
            cert.push_back(std::move(r));
        }
        j["certificate"] = std::move(cert);
    }
    if (v.status == VerdictStatus::Unknown) {
        Json b;
        b["lo"] = v.lo;
        b["hi"] = v.hi;
        j["bounds"] = std::move(b);
    }
    j["budget_spent"] = v.budget_spent;
    return j;
}

namespace {

Json witness_to_json(const Witness& w) {
    Json j;
    Json sets = Json::array();
    for (const auto& s : w.sets) sets.push_back(s.to_literal());
    j["sets"] = std::move(sets);
    if (!w.parts.empty()) {
        Json parts = Json::array();
        for (const auto& s : w.parts) parts.push_back(s.to_literal());
        j["parts"] = std::move(parts);
    }
    if (w.tail) j["tail"] = w.tail->to_literal();
    if (w.bound) j["bound"] = rat_to_json(*w.bound);
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

}  // namespace

Json property_report_to_json(const PropertyReport& rep) {
    Json j;
    j["ground"] = rep.ground.is_finite() ? Json{{"finite", rep.ground.size}} : Json("omega");
    Json props;
    for (Prop p : kAllProps) {
        const auto& v = rep.of(p);
        Json pv;
        switch (v.kind) {
            case VKind::Proved: pv["verdict"] = "proved"; break;
            case VKind::Refuted: pv["verdict"] = "refuted"; break;
            case VKind::Probed: pv["verdict"] = "probed"; break;
        }
        if (v.kind == VKind::Probed) pv["probes"] = v.probes;
        if (v.witness) pv["witness"] = witness_to_json(*v.witness);
        if (!v.note.empty()) pv["note"] = v.note;
        props[prop_name(p)] = std::move(pv);
    }
    j["properties"] = std::move(props);
    return j;
}

Json theorem_report_to_json(const TheoremReport& rep) {
    Json j;
    j["theorem"] = rep.theorem;
    if (!rep.note.empty()) j["note"] = rep.note;
    j["scenarios"] = rep.scenarios;
    j["passes"] = rep.passes;
    Json failures = Json::array();
    for (const auto& f : rep.failures) {
        Json fj;
        fj["index"] = f.index;
        fj["seed"] = f.seed;
        fj["witness"] = f.witness;
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    Json skips = Json::array();
    for (const auto& s : rep.skips) {
        Json sj;
        sj["index"] = s.index;
        sj["reason"] = s.reason;
        skips.push_back(std::move(sj));
    }
    j["skips"] = std::move(skips);
    return j;
}

MSet parse_set_literal(const std::string& lit, const Ground& g) {
    auto fail = [&](const std::string& why) -> MSet {
        throw ParseError("set literal '" + lit + "': " + why);
    };
    if (lit == "all") return MSet::full(g);
    if (lit == "empty") return MSet::empty(g);
    if (lit == "evens" || lit == "odds") {
        if (g.is_finite()) return fail("parity sugar is omega-only");
        return MSet::omega(lit == "evens" ? UPSet::evens() : UPSet::odds());
    }
    if (lit.rfind("finite:[", 0) == 0) {
        if (lit.back() != ']') return fail("missing closing bracket");
        std::string body = lit.substr(8, lit.size() - 9);
        std::vector<std::int64_t> elems;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            if (!tok.empty()) {
                for (char ch : tok) {
                    if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("bad element");
                }
                elems.push_back(std::stoll(tok));
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return MSet::of_elements(g, elems);
    }
    if (lit.rfind("upset:", 0) == 0) {
        if (g.is_finite()) return fail("upset literals are omega-only");
        // upset:N=4;prefix=0110;p=2;R={0,1}
        std::int64_t n = -1, p = -1;
        std::vector<bool> prefix;
        std::vector<std::int64_t> residues;
        std::string body = lit.substr(6);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t semi = body.find(';', pos);
            std::string field =
                body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
            std::size_t eq = field.find('=');
            if (eq == std::string::npos) return fail("field without '='");
            std::string key = field.substr(0, eq);
            std::string val = field.substr(eq + 1);
            if (key == "N") {
                n = std::stoll(val);
            } else if (key == "prefix") {
                for (char ch : val) {
                    if (ch != '0' && ch != '1') return fail("prefix must be bits");
                    prefix.push_back(ch == '1');
                }
            } else if (key == "p") {
                p = std::stoll(val);
            } else if (key == "R") {
                if (val.size() < 2 || val.front() != '{' || val.back() != '}') {
                    return fail("R must be {..}");
                }
                std::string rbody = val.substr(1, val.size() - 2);
                std::size_t rp = 0;
                while (rp < rbody.size()) {
                    std::size_t comma = rbody.find(',', rp);
                    std::string tok = rbody.substr(
                        rp, comma == std::string::npos ? std::string::npos : comma - rp);
                    if (!tok.empty()) residues.push_back(std::stoll(tok));
                    if (comma == std::string::npos) break;
                    rp = comma + 1;
                }
            } else {
                return fail("unknown field '" + key + "'");
            }
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        if (p < 1) return fail("period missing or < 1");
        if (n >= 0 && static_cast<std::int64_t>(prefix.size()) != n) {
            return fail("prefix length disagrees with N");
        }
        return MSet::omega(UPSet::make(prefix, p, residues));
    }
    return fail("unrecognized form");
}

Ground ground_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "omega") return Ground::omega();
    if (j.is_object()) {
        reject_unknown(j, {"finite"}, "ground");
        if (j.contains("finite")) {
            return Ground::finite(static_cast<int>(int_from(j["finite"], "ground finite")));
        }
    }
    throw ParseError("ground: expected \"omega\" or {\"finite\": n}");
}

Json ground_to_json(const Ground& g) {
    if (g.is_finite()) return Json{{"finite", g.size}};
    return Json("omega");
}

namespace {

Measure::PointMass pointmass_from_json(const Json& j) {
    reject_unknown(j, {"family", "weights", "tail"}, "pointmass");
    Measure::PointMass pm;
    if (j.contains("weights")) {
        for (const auto& w : j["weights"]) pm.w.push_back(rat_from_json(w));
    }
    if (j.contains("tail")) {
        const Json& t = j["tail"];
        reject_unknown(t, {"c", "r"}, "pointmass tail");
        if (t.contains("c")) pm.c = rat_from_json(t["c"]);
        if (t.contains("r")) pm.r = rat_from_json(t["r"]);
    }
    return pm;
}

GSpec gspec_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "sqrt") return GSpec::sqrt();
        throw ParseError("distortion g: unknown named map '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("pwl")) {
        reject_unknown(j, {"pwl"}, "distortion g");
        std::vector<std::pair<Rat, Rat>> pts;
        for (const auto& p : j["pwl"]) {
            if (!p.is_array() || p.size() != 2) throw ParseError("pwl: points are [x,y] pairs");
            pts.emplace_back(rat_from_json(p[0]), rat_from_json(p[1]));
        }
        return GSpec::pwl(std::move(pts));
    }
    throw ParseError("distortion g: expected \"sqrt\" or {\"pwl\": [[x,y],...]}");
}

std::uint64_t table_key_to_mask(const std::string& key, const Ground& g) {
    // "" is the empty set; otherwise a comma list of elements, or a full set
    // literal for convenience.
    if (key.empty()) return 0;
    if (key.find(':') != std::string::npos || key == "all" || key == "empty") {
        return parse_set_literal(key, g).mask();
    }
    std::uint64_t mask = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t comma = key.find(',', pos);
        std::string tok =
            key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        for (char ch : tok) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw ParseError("table key '" + key + "': expected element numbers");
            }
        }
        std::int64_t e = std::stoll(tok);
        if (e < 0 || e >= g.size) throw ParseError("table key element outside the ground");
        mask |= 1ULL << e;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return mask;
}

}  // namespace

MeasurePtr measure_from_json(const Json& j, const Ground& g) {
    if (!j.is_object() || !j.contains("family")) {
        throw ParseError("measure: expected an object with a family tag");
    }
    std::string family = j["family"].get<std::string>();
    if (family == "pointmass") {
        auto pm = pointmass_from_json(j);
        return Measure::point_mass(g, pm.w, pm.c, pm.r);
    }
    if (family == "cardclass") {
        reject_unknown(j, {"family", "theta"}, "cardclass");
        if (!j.contains("theta")) throw ParseError("cardclass: theta map required");
        Rat theta_inf(0);
        std::int64_t kmax = 0;
        for (const auto& [key, val] : j["theta"].items()) {
            (void)val;
            if (key == "inf") continue;
            for (char ch : key) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    throw ParseError("cardclass: theta keys are sizes or \"inf\"");
                }
            }
            kmax = std::max<std::int64_t>(kmax, std::stoll(key));
        }
        if (kmax > 32) throw ParseError("cardclass: finite cardinality keys capped at 32");
        std::vector<Rat> theta(static_cast<std::size_t>(kmax + 1), Rat(0));
        bool have[64] = {false};
        for (const auto& [key, val] : j["theta"].items()) {
            if (key == "inf") {
                theta_inf = rat_from_json(val);
                continue;
            }
            std::int64_t k = std::stoll(key);
            theta[static_cast<std::size_t>(k)] = rat_from_json(val);
            if (k < 64) have[k] = true;
        }
        // unspecified interior sizes inherit the previous value
        for (std::int64_t k = 1; k <= kmax; ++k) {
            if (k < 64 && !have[k]) theta[static_cast<std::size_t>(k)] = theta[static_cast<std::size_t>(k - 1)];
        }
        return Measure::card_class(g, theta, theta_inf);
    }
    if (family == "distortion") {
        reject_unknown(j, {"family", "g", "base"}, "distortion");
        if (!j.contains("g") || !j.contains("base")) {
            throw ParseError("distortion: needs g and base");
        }
        const Json& base = j["base"];
        if (!base.is_object() || !base.contains("family") ||
            base["family"].get<std::string>() != "pointmass") {
            throw ParseError("distortion: base must be a pointmass literal");
        }
        return Measure::distortion(g, gspec_from_json(j["g"]), pointmass_from_json(base));
    }
    if (family == "table") {
        reject_unknown(j, {"family", "values"}, "table");
        if (!g.is_finite()) throw ParseError("table: finite grounds only");
        if (!j.contains("values")) throw ParseError("table: values map required");
        std::vector<Rat> v(1ULL << g.size, Rat(0));
        for (const auto& [key, val] : j["values"].items()) {
            v[table_key_to_mask(key, g)] = rat_from_json(val);
        }
        return Measure::table(g, v);
    }
    if (family == "sum") {
        reject_unknown(j, {"family", "of"}, "sum");
        if (!j.contains("of") || !j["of"].is_array() || j["of"].size() != 2) {
            throw ParseError("sum: expects \"of\": [m1, m2]");
        }
        return Measure::sum(measure_from_json(j["of"][0], g), measure_from_json(j["of"][1], g));
    }
    if (family == "scale") {
        reject_unknown(j, {"family", "alpha", "of"}, "scale");
        if (!j.contains("alpha") || !j.contains("of")) {
            throw ParseError("scale: expects alpha and of");
        }
        return Measure::scale(rat_from_json(j["alpha"]), measure_from_json(j["of"], g));
    }
    throw ParseError("measure: unknown family '" + family + "'");
}

namespace {

QVec row_from_json(const Json& j, int* dim) {
    QVec row;
    if (j.is_array()) {
        for (const auto& x : j) row.push_back(rat_from_json(x));
    } else {
        row.push_back(rat_from_json(j));
    }
    if (*dim == 0) *dim = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != *dim) throw ParseError("function: ragged rows");
    return row;
}

}  // namespace

FuncSpec func_from_json(const Json& j, const Ground& g) {
    if (!j.is_object() || !j.contains("rule")) {
        throw ParseError("function: expected an object with a rule tag");
    }
    std::string rule = j["rule"].get<std::string>();
    if (rule == "constant") {
        reject_unknown(j, {"rule", "value", "dim"}, "constant function");
        if (!j.contains("value")) throw ParseError("constant: value required");
        int dim = 0;
        QVec v = row_from_json(j["value"], &dim);
        return FuncSpec::constant(g, v);
    }
    if (rule == "table") {
        reject_unknown(j, {"rule", "rows"}, "table function");
        if (!g.is_finite()) throw ParseError("table function: finite grounds only");
        if (!j.contains("rows")) throw ParseError("table function: rows required");
        int dim = 0;
        std::vector<QVec> rows;
        for (const auto& r : j["rows"]) rows.push_back(row_from_json(r, &dim));
        return FuncSpec::table(g, std::move(rows));
    }
    if (rule == "evperiodic") {
        reject_unknown(j, {"rule", "prefix", "cycle"}, "evperiodic function");
        if (g.is_finite()) throw ParseError("evperiodic function: omega grounds only");
        if (!j.contains("cycle")) throw ParseError("evperiodic: cycle required");
        int dim = 0;
        std::vector<QVec> prefix, cycle;
        if (j.contains("prefix")) {
            for (const auto& r : j["prefix"]) prefix.push_back(row_from_json(r, &dim));
        }
        for (const auto& r : j["cycle"]) cycle.push_back(row_from_json(r, &dim));
        return FuncSpec::eventually_periodic(std::move(prefix), std::move(cycle));
    }
    throw ParseError("function: unknown rule '" + rule + "'");
}

ScenarioFile scenario_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("scenario: expected an object");
    reject_unknown(j, {"version", "ground", "measure", "function", "function_g"}, "scenario");
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != 1) {
        throw ParseError("scenario: version 1 required");
    }
    for (const char* req : {"ground", "measure", "function"}) {
        if (!j.contains(req)) throw ParseError(std::string("scenario: missing ") + req);
    }
    ScenarioFile f;
    f.ground = ground_from_json(j["ground"]);
    f.measure = measure_from_json(j["measure"], f.ground);
    f.function = func_from_json(j["function"], f.ground);
    if (j.contains("function_g")) f.function_g = func_from_json(j["function_g"], f.ground);
    return f;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("scenario file is not valid JSON: " + std::string(e.what()));
    }
    return scenario_from_json(j);
}

}  // namespace nonadd
