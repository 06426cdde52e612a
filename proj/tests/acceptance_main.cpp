// Acceptance suite: one pass/fail line per criterion, nonzero exit iff any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nonadd/json_io.hpp"
#include "nonadd/variation.hpp"
#include "oracle_helpers.hpp"

using namespace nonadd;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- criteria

bool c1_counterexample(std::string& detail) {
    auto t0 = Clock::now();
    auto m = Measure::card_class(Ground::omega(), {Rat(0)}, Rat(1));
    auto f = FuncSpec::constant(Ground::omega(), {Rat(1)});

    auto rl = rl_integrate(f, *m);
    if (rl.status != VerdictStatus::Value || !rl.value[0].exact() || !rl.value[0].rat().is_zero()) {
        detail = "rl verdict is not exactly zero";
        return false;
    }
    auto bs = birkhoff_simple(f, *m);
    if (bs.status != VerdictStatus::Value || !bs.value[0].exact() || !bs.value[0].rat().is_zero()) {
        detail = "bs verdict is not exactly zero";
        return false;
    }
    auto gd = gould_integrate(f, *m);
    if (gd.status != VerdictStatus::Divergent) {
        detail = "gould verdict is not divergent";
        return false;
    }
    if (gd.certificate.size() < 11) {
        detail = "certificate shorter than K=10";
        return false;
    }
    for (std::size_t i = 0; i < gd.certificate.size(); ++i) {
        const auto& s = gd.certificate[i].sigma[0];
        if (!s.exact() || !(s.rat() == Rat(static_cast<std::int64_t>(i + 1)))) {
            detail = "sigma chain is not exactly 1,2,...,K";
            return false;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream os;
    os << "K=" << gd.certificate.size() << ", " << secs << "s";
    detail = os.str();
    return secs < 1.0;
}

bool c2_pointmass_oracle(std::string& detail) {
    auto t0 = Clock::now();
    auto scenarios = gen_scenarios(Profile::omega(Profile::Flavor::PointMassOnly), 50, 424242);
    double worst_engine_vs_oracle = 0.0, worst_probe = 0.0;
    for (const auto& s : scenarios) {
        const auto& pm = std::get<Measure::PointMass>(s.m->family());
        // independent oracle: direct partial sums from the family parameters
        const std::int64_t cut = 400;
        std::vector<long double> oracle_val(static_cast<std::size_t>(s.f.dim()), 0.0L);
        for (std::int64_t t = 0; t < cut; ++t) {
            long double w = t < static_cast<std::int64_t>(pm.w.size())
                                ? static_cast<long double>(pm.w[static_cast<std::size_t>(t)].to_double())
                                : static_cast<long double>(pm.c.to_double()) *
                                      std::pow(static_cast<long double>(pm.r.to_double()),
                                               static_cast<long double>(t));
            const QVec& ft = s.f.eval(t);
            for (int i = 0; i < s.f.dim(); ++i) {
                oracle_val[static_cast<std::size_t>(i)] += w * static_cast<long double>(ft[static_cast<std::size_t>(i)].to_double());
            }
        }
        long double r = static_cast<long double>(pm.r.to_double());
        long double tail_bound = static_cast<long double>(s.f.sup_norm().to_double()) *
                                 static_cast<long double>(pm.c.to_double()) *
                                 std::pow(r, static_cast<long double>(cut)) / (1.0L - r);

        auto rl = rl_integrate(s.f, *s.m);
        auto gd = gould_integrate(s.f, *s.m);
        if (rl.status != VerdictStatus::Value || gd.status != VerdictStatus::Value) {
            detail = "an engine failed to produce a value";
            return false;
        }
        for (int i = 0; i < s.f.dim(); ++i) {
            double o = static_cast<double>(oracle_val[static_cast<std::size_t>(i)]);
            double allow = 1e-9 + static_cast<double>(tail_bound);
            worst_engine_vs_oracle = std::max(
                worst_engine_vs_oracle,
                std::max(std::fabs(rl.value[static_cast<std::size_t>(i)].value() - o),
                         std::fabs(gd.value[static_cast<std::size_t>(i)].value() - o)) -
                    static_cast<double>(tail_bound));
            if (std::fabs(rl.value[static_cast<std::size_t>(i)].value() - o) > allow ||
                std::fabs(gd.value[static_cast<std::size_t>(i)].value() - o) > allow) {
                detail = "engine disagrees with the direct series oracle";
                return false;
            }
        }
        worst_probe = std::max(worst_probe, gd.probe_max_dev);
        if (gd.probe_max_dev > 1e-9) {
            detail = "a refinement probe left the claimed radius";
            return false;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream os;
    os << "50 scenarios, worst oracle gap " << worst_engine_vs_oracle << ", worst probe "
       << worst_probe << ", " << secs << "s";
    detail = os.str();
    return secs < 30.0;
}

bool c3_submeasure(std::string& detail) {
    auto scenarios = gen_scenarios(Profile::omega(Profile::Flavor::DistortionOnly), 20, 777);
    int used = 0;
    for (const auto& s : scenarios) {
        ExtValue var = variation(*s.m, MSet::full(s.ground));
        if (var.infinite) {
            detail = "a distortion scenario has infinite variation";
            return false;
        }
        ++used;
        auto rl = rl_integrate(s.f, *s.m);
        auto gd = gould_integrate(s.f, *s.m);
        if (rl.status != VerdictStatus::Value || gd.status != VerdictStatus::Value) {
            detail = "an engine failed to produce a value";
            return false;
        }
        for (int i = 0; i < s.f.dim(); ++i) {
            double gap = std::fabs(rl.value[static_cast<std::size_t>(i)].value() -
                                   gd.value[static_cast<std::size_t>(i)].value());
            if (gap > 1e-9 + rl.value[static_cast<std::size_t>(i)].radius() +
                          gd.value[static_cast<std::size_t>(i)].radius()) {
                detail = "gould and rl disagree on a submeasure scenario";
                return false;
            }
        }
    }
    std::ostringstream os;
    os << used << " scenarios, all verified of finite variation";
    detail = os.str();
    return used == 20;
}

bool run_exact_suite(TheoremId id, const std::vector<Scenario>& scenarios, int expect,
                     std::string& detail) {
    auto rep = run_check(id, scenarios);
    if (!rep.failures.empty()) {
        detail = std::string(theorem_name(id)) + ": " + rep.failures.front().witness;
        return false;
    }
    if (rep.passes < expect) {
        std::ostringstream os;
        os << theorem_name(id) << ": only " << rep.passes << " passes (" << rep.skips.size()
           << " skips)";
        detail = os.str();
        return false;
    }
    return true;
}

bool c4_exact_s3(std::string& detail) {
    auto t0 = Clock::now();
    std::vector<Scenario> scenarios;
    for (int n : {4, 5, 6}) {
        auto batch = gen_scenarios(Profile::finite(n), n == 5 ? 168 : 166, 1001 + static_cast<std::uint64_t>(n));
        scenarios.insert(scenarios.end(), batch.begin(), batch.end());
    }
    if (scenarios.size() != 500) {
        detail = "scenario count mismatch";
        return false;
    }
    for (TheoremId id : {TheoremId::T3_7_linearity, TheoremId::T3_10_measure_sum,
                         TheoremId::C3_8_additivity, TheoremId::T3_4_restriction}) {
        if (!run_exact_suite(id, scenarios, 500, detail)) return false;
    }
    double secs = seconds_since(t0);
    std::ostringstream os;
    os << "500 scenarios x 4 theorems, exact rationals, " << secs << "s";
    detail = os.str();
    return secs < 60.0;
}

bool c5_bounds(std::string& detail) {
    std::vector<Scenario> scenarios;
    for (int n : {4, 5, 6}) {
        auto batch = gen_scenarios(Profile::finite(n), n == 5 ? 168 : 166, 1001 + static_cast<std::uint64_t>(n));
        scenarios.insert(scenarios.end(), batch.begin(), batch.end());
    }
    for (TheoremId id : {TheoremId::P3_5_bound, TheoremId::T3_11_lipschitz}) {
        if (!run_exact_suite(id, scenarios, 500, detail)) return false;
    }
    detail = "P3.5 and T3.11 exact on all 500 scenarios";
    return true;
}

bool c6_order(std::string& detail) {
    auto ordered = gen_scenarios(Profile::finite(5, Profile::Flavor::OrderedFG), 120, 6001);
    if (!run_exact_suite(TheoremId::T3_12_monotone_f, ordered, 100, detail)) return false;
    auto mono = gen_scenarios(Profile::finite(5, Profile::Flavor::MonotoneM), 120, 6002);
    if (!run_exact_suite(TheoremId::T3_13_monotone_m, mono, 100, detail)) return false;
    if (!run_exact_suite(TheoremId::T3_14ii_monotone_If, mono, 100, detail)) return false;
    detail = "T3.12 / T3.13 / T3.14ii each >= 100 non-skipped, zero failures";
    return true;
}

bool c7_variation(std::string& detail) {
    oracle::XorShift rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        Ground g = Ground::finite(n);
        std::vector<Rat> v(1ULL << n);
        v[0] = Rat(0);
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = Rat(rng.below(24), 1 + rng.below(8));
        auto m = Measure::table(g, v);
        std::uint64_t full = (1ULL << n) - 1;
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            Rat expect = oracle::brute_force_variation(sub, [&](std::uint64_t s) { return v[s]; });
            ExtValue got = variation(*m, MSet::finite(g, sub));
            if (got.infinite || !(got.finite.rat() == expect)) {
                detail = "DP disagrees with brute force";
                return false;
            }
            if (sub == 0) break;
        }
    }
    // the three worked values
    {
        auto m = Measure::point_mass(Ground::finite(3), {Rat(1), Rat(2), Rat(3)});
        if (!(variation(*m, MSet::full(Ground::finite(3))).finite.rat() == Rat(6))) {
            detail = "point-mass worked value 6 failed";
            return false;
        }
        Ground g4 = Ground::finite(4);
        std::vector<Rat> sq(16), root(16);
        std::vector<Rat> root_by_card = {Rat(0), Rat(1), Rat(7, 5), Rat(12, 7), Rat(2)};
        for (std::uint64_t s = 0; s < 16; ++s) {
            std::int64_t c = __builtin_popcountll(s);
            sq[s] = Rat(c * c);
            root[s] = root_by_card[static_cast<std::size_t>(c)];
        }
        if (!(variation(*Measure::table(g4, sq), MSet::full(g4)).finite.rat() == Rat(16))) {
            detail = "square worked value 16 failed";
            return false;
        }
        if (!(variation(*Measure::table(g4, root), MSet::full(g4)).finite.rat() == Rat(4))) {
            detail = "root worked value 4 failed";
            return false;
        }
    }
    detail = "100 tables, every subset, exact; worked values 6/16/4 reproduced";
    return true;
}

bool c8_remark25(std::string& detail) {
    oracle::XorShift rng(2525);
    // subadditive tables: min-partition envelope construction
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));  // up to 6
        Ground g = Ground::finite(n);
        std::uint64_t full = (1ULL << n) - 1;
        std::vector<Rat> h(full + 1);
        h[0] = Rat(0);
        for (std::uint64_t s = 1; s <= full; ++s) h[s] = Rat(1 + rng.below(16), 1 + rng.below(4));
        std::vector<Rat> v(full + 1);
        v[0] = Rat(0);
        for (std::uint64_t s = 1; s <= full; ++s) {
            Rat best = h[s];
            std::uint64_t low = s & (~s + 1);
            for (std::uint64_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
                if ((sub & low) == 0) continue;
                Rat cand = v[sub] + v[s ^ sub];
                if (cand < best) best = cand;
            }
            v[s] = best;
        }
        auto m = Measure::table(g, v);
        // variation must be finitely additive across every disjoint pair
        std::vector<Rat> var(full + 1);
        for (std::uint64_t s = 0; s <= full; ++s) {
            var[s] = variation(*m, MSet::finite(g, s)).finite.rat();
        }
        for (std::uint64_t a = 1; a <= full; ++a) {
            std::uint64_t rest = full & ~a;
            for (std::uint64_t b = rest; b != 0; b = (b - 1) & rest) {
                if (!(var[a | b] == var[a] + var[b])) {
                    detail = "variation of a subadditive table is not additive";
                    return false;
                }
            }
        }
    }
    // additive tables: variation equals the measure pointwise
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.below(4));
        Ground g = Ground::finite(n);
        std::vector<Rat> w;
        for (int i = 0; i < n; ++i) w.push_back(Rat(rng.below(10), 1 + rng.below(5)));
        std::vector<Rat> v(1ULL << n);
        for (std::uint64_t s = 0; s < v.size(); ++s) {
            Rat acc(0);
            for (int i = 0; i < n; ++i) {
                if ((s >> i) & 1ULL) acc += w[static_cast<std::size_t>(i)];
            }
            v[s] = acc;
        }
        auto m = Measure::table(g, v);
        for (std::uint64_t s = 0; s < v.size(); ++s) {
            if (!(variation(*m, MSet::finite(g, s)).finite.rat() == v[s])) {
                detail = "variation of an additive table differs from the measure";
                return false;
            }
        }
    }
    detail = "30 subadditive + 30 additive tables, exact";
    return true;
}

bool c9_null_ae(std::string& detail) {
    auto fin = gen_scenarios(Profile::finite(5, Profile::Flavor::NullSupport), 50, 9001);
    auto om = gen_scenarios(Profile::omega(Profile::Flavor::NullSupport), 50, 9002);
    std::vector<Scenario> scenarios = fin;
    scenarios.insert(scenarios.end(), om.begin(), om.end());
    for (TheoremId id : {TheoremId::T3_6_null_ae, TheoremId::C3_9_ae_equal}) {
        if (!run_exact_suite(id, scenarios, 100, detail)) return false;
    }
    detail = "T3.6 and C3.9 pass on all 100 constructed-null scenarios";
    return true;
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "counterexample separation (RL/Bs value 0, Gould divergent 1..K)", c1_counterexample},
        {2, "gould/rl agree with the direct series oracle under sigma-additivity", c2_pointmass_oracle},
        {3, "submeasure equivalence on concave distortions", c3_submeasure},
        {4, "exact finite-ground suite: linearity, measure sum, additivity, restriction", c4_exact_s3},
        {5, "norm and Lipschitz bounds on the same 500 scenarios", c5_bounds},
        {6, "order transfer: monotone in f, in m, and of the indefinite integral", c6_order},
        {7, "variation DP equals brute force; worked values 6/16/4", c7_variation},
        {8, "variation of subadditive tables is additive; of additive tables is itself", c8_remark25},
        {9, "null-almost-everywhere theorems on constructed supports", c9_null_ae},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = seconds_since(t0);
        std::printf("[%s] C%d (%.2fs): %s — %s\n", ok ? "PASS" : "FAIL", c.id, secs, c.label,
                    detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
