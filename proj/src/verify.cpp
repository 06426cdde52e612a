#include "nonadd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nonadd/properties.hpp"
#include "nonadd/variation.hpp"

namespace nonadd {

namespace {

const char* kTheoremNames[] = {
    "T3.4-restriction",    "P3.5-bound",          "T3.6-null-ae",
    "T3.7-linearity",      "C3.8-additivity",     "C3.9-ae-equal",
    "T3.10-measure-sum",   "T3.11-lipschitz",     "T3.12-monotone-f",
    "T3.13-monotone-m",    "T3.14i-abscont-finvar", "T3.14ib-ocont-exhaustive",
    "T3.14ii-monotone-If", "T4.5-rl-implies-bs",  "P4.10-gould-eq-rl",
    "E4.12-counterexample", "T4.13-submeasure-equiv", "T4.14-atom-finite",
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

std::int64_t draw(Rng& rng, std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

Rat rat_signed(Rng& rng, std::int64_t maxnum, std::int64_t maxden) {
    return Rat(draw(rng, 2 * maxnum + 1) - maxnum, 1 + draw(rng, maxden));
}

Rat rat_nonneg(Rng& rng, std::int64_t maxnum, std::int64_t maxden) {
    return Rat(draw(rng, maxnum + 1), 1 + draw(rng, maxden));
}

// ------------------------------------------------------------- generators

MeasurePtr gen_finite_table(Rng& rng, Ground g) {
    std::vector<Rat> v(1ULL << g.size);
    v[0] = Rat(0);
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = rat_nonneg(rng, 12, 6);
    return Measure::table(g, v);
}

MeasurePtr gen_finite_additive(Rng& rng, Ground g, const std::vector<int>* zero_positions = nullptr) {
    std::vector<Rat> w;
    for (int i = 0; i < g.size; ++i) {
        bool zero = zero_positions && std::find(zero_positions->begin(), zero_positions->end(), i) !=
                                          zero_positions->end();
        w.push_back(zero ? Rat(0) : rat_nonneg(rng, 8, 4));
    }
    std::vector<Rat> v(1ULL << g.size);
    for (std::uint64_t s = 0; s < v.size(); ++s) {
        Rat acc(0);
        for (int i = 0; i < g.size; ++i) {
            if ((s >> i) & 1ULL) acc += w[static_cast<std::size_t>(i)];
        }
        v[s] = acc;
    }
    return Measure::table(g, v);
}

/// Totally monotone table via random masses on subsets: m(A) = sum of the
/// masses of the subsets of A.
MeasurePtr gen_finite_monotone(Rng& rng, Ground g) {
    std::uint64_t full = 1ULL << g.size;
    std::vector<Rat> mass(full, Rat(0));
    int picks = g.size * 2;
    for (int i = 0; i < picks; ++i) {
        std::uint64_t s = 1 + static_cast<std::uint64_t>(draw(rng, static_cast<std::int64_t>(full - 1)));
        mass[s] += rat_nonneg(rng, 4, 3);
    }
    std::vector<Rat> v(full, Rat(0));
    for (std::uint64_t s = 1; s < full; ++s) {
        // subset-sum (zeta transform without bit tricks: n <= 8 keeps it cheap)
        for (std::uint64_t sub = s;; sub = (sub - 1) & s) {
            v[s] += mass[sub];
            if (sub == 0) break;
        }
    }
    return Measure::table(g, v);
}

/// Subadditive-by-construction table: the min-partition envelope of a random
/// nonnegative table.
MeasurePtr gen_finite_subadditive(Rng& rng, Ground g) {
    std::uint64_t full = 1ULL << g.size;
    std::vector<Rat> h(full);
    h[0] = Rat(0);
    for (std::uint64_t s = 1; s < full; ++s) h[s] = rat_nonneg(rng, 12, 4) + Rat(1, 4);
    std::vector<Rat> v(full);
    v[0] = Rat(0);
    for (std::uint64_t s = 1; s < full; ++s) {
        Rat best = h[s];
        std::uint64_t low = s & (~s + 1);
        for (std::uint64_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
            if ((sub & low) == 0) continue;
            Rat cand = v[sub] + v[s ^ sub];
            if (cand < best) best = cand;
        }
        v[s] = best;
    }
    return Measure::table(g, v);
}

const Rat kRatios[] = {Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(2, 3), Rat(3, 4)};
const Rat kSquareRatios[] = {Rat(1, 4), Rat(1, 9), Rat(4, 9), Rat(9, 16)};

Measure::PointMass gen_pm_family(Rng& rng, bool squares) {
    Measure::PointMass pm;
    std::int64_t plen = draw(rng, 4);
    for (std::int64_t i = 0; i < plen; ++i) {
        pm.w.push_back(squares ? pow(rat_nonneg(rng, 2, 3), 2) : rat_nonneg(rng, 4, 4));
    }
    pm.c = squares ? kSquareRatios[draw(rng, 4)] : rat_nonneg(rng, 3, 2) + Rat(1, 2);
    pm.r = squares ? kSquareRatios[draw(rng, 4)] : kRatios[draw(rng, 5)];
    return pm;
}

MeasurePtr gen_omega_pointmass(Rng& rng) {
    auto pm = gen_pm_family(rng, false);
    return Measure::point_mass(Ground::omega(), pm.w, pm.c, pm.r);
}

GSpec gen_pwl(Rng& rng) {
    Rat x1 = Rat(1, 1 + draw(rng, 8));
    Rat s0 = Rat(1 + draw(rng, 3));
    Rat y1 = x1 * s0;
    if (draw(rng, 2) == 0) return GSpec::pwl({{x1, y1}});
    Rat x2 = x1 + Rat(1 + draw(rng, 2));
    Rat s1 = s0 * Rat(1, 2 + draw(rng, 2));
    return GSpec::pwl({{x1, y1}, {x2, y1 + s1 * (x2 - x1)}});
}

MeasurePtr gen_omega_distortion(Rng& rng, int index) {
    switch (index % 3) {
        case 0:  // exact sqrt: perfect-square base
            return Measure::distortion(Ground::omega(), GSpec::sqrt(), gen_pm_family(rng, true));
        case 1:  // numeric sqrt
            return Measure::distortion(Ground::omega(), GSpec::sqrt(), gen_pm_family(rng, false));
        default:  // piecewise-linear concave
            return Measure::distortion(Ground::omega(), gen_pwl(rng), gen_pm_family(rng, false));
    }
}

MeasurePtr gen_omega_cardclass(Rng& rng, bool monotone) {
    std::int64_t k = 1 + draw(rng, 3);
    std::vector<Rat> theta = {Rat(0)};
    Rat cur(0);
    for (std::int64_t j = 1; j <= k; ++j) {
        if (monotone) {
            cur += rat_nonneg(rng, 3, 2);
            theta.push_back(cur);
        } else {
            theta.push_back(rat_nonneg(rng, 4, 2));
        }
    }
    Rat ti = monotone ? theta.back() + rat_nonneg(rng, 3, 2) : rat_nonneg(rng, 4, 2);
    return Measure::card_class(Ground::omega(), theta, ti);
}

MeasurePtr gen_omega_measure(Rng& rng, int index) {
    switch (index % 6) {
        case 0:
        case 1:
            return gen_omega_pointmass(rng);
        case 2:
            return gen_omega_distortion(rng, static_cast<int>(draw(rng, 3)));
        case 3:
            return gen_omega_cardclass(rng, draw(rng, 2) == 0);
        case 4:
            return Measure::sum(gen_omega_pointmass(rng), gen_omega_pointmass(rng));
        default:
            return Measure::scale(rat_nonneg(rng, 3, 2), gen_omega_pointmass(rng));
    }
}

MeasurePtr gen_finite_measure(Rng& rng, Ground g, int index) {
    switch (index % 5) {
        case 0:
        case 1:
            return gen_finite_table(rng, g);
        case 2:
            return gen_finite_additive(rng, g);
        case 3:
            return gen_finite_monotone(rng, g);
        default: {
            std::vector<Rat> w;
            for (int i = 0; i < g.size; ++i) w.push_back(rat_nonneg(rng, 4, 3));
            return Measure::sum(gen_finite_table(rng, g), Measure::point_mass(g, w));
        }
    }
}

FuncSpec gen_finite_func(Rng& rng, Ground g, int dim, bool nonneg) {
    std::vector<QVec> rows;
    for (int t = 0; t < g.size; ++t) {
        QVec row;
        for (int i = 0; i < dim; ++i) {
            row.push_back(nonneg ? rat_nonneg(rng, 8, 3) : rat_signed(rng, 8, 3));
        }
        rows.push_back(std::move(row));
    }
    return FuncSpec::table(g, std::move(rows));
}

FuncSpec gen_omega_func(Rng& rng, int dim, bool nonneg) {
    std::vector<QVec> prefix, cycle;
    std::int64_t plen = draw(rng, 3);
    std::int64_t qlen = 1 + draw(rng, 4);
    auto row = [&] {
        QVec r;
        for (int i = 0; i < dim; ++i) r.push_back(nonneg ? rat_nonneg(rng, 6, 3) : rat_signed(rng, 6, 3));
        return r;
    };
    for (std::int64_t t = 0; t < plen; ++t) prefix.push_back(row());
    for (std::int64_t t = 0; t < qlen; ++t) cycle.push_back(row());
    return FuncSpec::eventually_periodic(std::move(prefix), std::move(cycle));
}


}  // namespace

const char* theorem_name(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kAllTheorems.size(); ++i) {
        if (name == kTheoremNames[i]) return kAllTheorems[i];
    }
    return std::nullopt;
}

std::string Profile::to_string() const {
    std::ostringstream os;
    if (kind == Kind::Finite) {
        os << "finite(" << n << ")";
    } else {
        os << "omega";
    }
    static const char* flavors[] = {"default",  "monotone-m", "ordered-fg",
                                    "null-support", "pointmass", "distortion",
                                    "additive", "subadditive", "example"};
    os << ":" << flavors[static_cast<int>(flavor)];
    return os.str();
}

Scenario gen_scenario(const Profile& profile, std::uint64_t seed, int index) {
    Rng rng(splitmix64(seed ^ (static_cast<std::uint64_t>(index) * 0x9e3779b97f4a7c15ULL) ^
                       static_cast<std::uint64_t>(kGeneratorVersion)));
    Scenario s;
    s.seed = seed;
    s.index = index;
    s.note = profile.to_string();
    using F = Profile::Flavor;
    if (profile.kind == Profile::Kind::Finite) {
        Ground g = Ground::finite(profile.n);
        s.ground = g;
        int dim = 1 + static_cast<int>(draw(rng, 3));
        switch (profile.flavor) {
            case F::Default:
                s.m = gen_finite_measure(rng, g, index);
                s.m2 = gen_finite_measure(rng, g, index + 1);
                s.f = gen_finite_func(rng, g, dim, false);
                s.g = gen_finite_func(rng, g, dim, false);
                break;
            case F::MonotoneM: {
                s.m = gen_finite_monotone(rng, g);
                s.m2 = Measure::sum(s.m, gen_finite_monotone(rng, g));
                s.f = gen_finite_func(rng, g, 1, true);
                s.g = FuncSpec::add(s.f, gen_finite_func(rng, g, 1, true));
                break;
            }
            case F::OrderedFG:
                s.m = gen_finite_measure(rng, g, index);
                s.m2 = Measure::sum(s.m, gen_finite_measure(rng, g, index + 2));
                s.f = gen_finite_func(rng, g, 1, false);
                s.g = FuncSpec::add(s.f, gen_finite_func(rng, g, 1, true));
                break;
            case F::Additive:
                s.m = gen_finite_additive(rng, g);
                s.m2 = gen_finite_additive(rng, g);
                s.f = gen_finite_func(rng, g, dim, false);
                s.g = gen_finite_func(rng, g, dim, false);
                break;
            case F::Subadditive:
                s.m = gen_finite_subadditive(rng, g);
                s.m2 = gen_finite_subadditive(rng, g);
                s.f = gen_finite_func(rng, g, dim, false);
                s.g = gen_finite_func(rng, g, dim, false);
                break;
            case F::NullSupport: {
                // additive table with null elements; f and g - f live on them
                std::vector<int> zeros;
                for (int i = 0; i < g.size; ++i) {
                    if (draw(rng, 2) == 0 || i == 0) zeros.push_back(i);
                }
                s.m = gen_finite_additive(rng, g, &zeros);
                s.m2 = s.m;
                std::uint64_t zmask = 0;
                for (int i : zeros) zmask |= 1ULL << i;
                MSet z = MSet::finite(g, zmask);
                s.f = FuncSpec::chi_multiply(gen_finite_func(rng, g, 1, false), z);
                s.g = FuncSpec::add(s.f, FuncSpec::chi_multiply(gen_finite_func(rng, g, 1, false), z));
                break;
            }
            default:  // remaining flavors fall back to the default mix
                s.m = gen_finite_measure(rng, g, index);
                s.m2 = gen_finite_measure(rng, g, index + 1);
                s.f = gen_finite_func(rng, g, dim, false);
                s.g = gen_finite_func(rng, g, dim, false);
                break;
        }
        return s;
    }

    s.ground = Ground::omega();
    int dim = 1 + static_cast<int>(draw(rng, 2));
    switch (profile.flavor) {
        case F::PointMassOnly:
            s.m = gen_omega_pointmass(rng);
            s.m2 = gen_omega_pointmass(rng);
            s.f = gen_omega_func(rng, dim, false);
            s.g = gen_omega_func(rng, dim, false);
            break;
        case F::DistortionOnly:
            s.m = gen_omega_distortion(rng, index);
            s.m2 = gen_omega_distortion(rng, index + 1);
            s.f = gen_omega_func(rng, 1, false);
            s.g = gen_omega_func(rng, 1, false);
            break;
        case F::Example: {
            Rat ti = Rat(1 + draw(rng, 2), 1 + draw(rng, 2));
            s.m = Measure::card_class(Ground::omega(), {Rat(0)}, ti);
            s.m2 = s.m;
            Rat c = Rat(1 + draw(rng, 3), 1 + draw(rng, 2));
            s.f = FuncSpec::constant(Ground::omega(), {c});
            s.g = s.f;
            break;
        }
        case F::MonotoneM: {
            s.m = draw(rng, 2) == 0 ? gen_omega_pointmass(rng) : gen_omega_cardclass(rng, true);
            s.m2 = Measure::sum(s.m, gen_omega_pointmass(rng));
            s.f = gen_omega_func(rng, 1, true);
            s.g = FuncSpec::add(s.f, gen_omega_func(rng, 1, true));
            break;
        }
        case F::OrderedFG:
            s.m = gen_omega_pointmass(rng);
            s.m2 = Measure::sum(s.m, gen_omega_pointmass(rng));
            s.f = gen_omega_func(rng, 1, false);
            s.g = FuncSpec::add(s.f, gen_omega_func(rng, 1, true));
            break;
        case F::NullSupport: {
            if (index % 2 == 0) {
                // zero-weight prefix elements of an otherwise positive point mass
                std::vector<Rat> w = {Rat(0), rat_nonneg(rng, 3, 2) + Rat(1, 3), Rat(0),
                                      rat_nonneg(rng, 3, 2)};
                s.m = Measure::point_mass(Ground::omega(), w, rat_nonneg(rng, 2, 2) + Rat(1, 2),
                                          kRatios[draw(rng, 5)]);
                MSet z = MSet::omega(UPSet::finite_set(std::vector<std::int64_t>{0, 2}));
                s.f = FuncSpec::chi_multiply(gen_omega_func(rng, 1, false), z);
                s.g = FuncSpec::add(s.f, FuncSpec::chi_multiply(gen_omega_func(rng, 1, false), z));
            } else {
                // finite supports are null under the infinite-indicator measure
                s.m = Measure::card_class(Ground::omega(), {Rat(0)}, Rat(1 + draw(rng, 2)));
                MSet z = MSet::omega(UPSet::range(0, 1 + draw(rng, 4)));
                s.f = FuncSpec::chi_multiply(gen_omega_func(rng, 1, false), z);
                s.g = FuncSpec::add(s.f, FuncSpec::chi_multiply(gen_omega_func(rng, 1, false), z));
            }
            s.m2 = s.m;
            break;
        }
        default:
            s.m = gen_omega_measure(rng, index);
            s.m2 = gen_omega_measure(rng, index + 3);
            s.f = gen_omega_func(rng, dim, false);
            s.g = gen_omega_func(rng, dim, false);
            break;
    }
    return s;
}

std::vector<Scenario> gen_scenarios(const Profile& profile, int count, std::uint64_t seed) {
    std::vector<Scenario> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(gen_scenario(profile, seed, i));
    return out;
}

// ---------------------------------------------------------------- checking

namespace {

bool scalar_eq(const Scalar& a, const Scalar& b, double tol) {
    if (a.exact() && b.exact()) return a.rat() == b.rat();
    return std::fabs(a.value() - b.value()) <= a.radius() + b.radius() + tol;
}

bool vec_eq(const Vec& a, const Vec& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!scalar_eq(a[i], b[i], tol)) return false;
    }
    return true;
}

bool scalar_le(const Scalar& a, const Scalar& b, double tol) {
    if (a.exact() && b.exact()) return a.rat() <= b.rat();
    return a.value() <= b.value() + a.radius() + b.radius() + tol;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].to_string();
    }
    os << "]";
    return os.str();
}

CheckOutcome pass() { return {OutcomeKind::Pass, ""}; }
CheckOutcome fail(std::string d) { return {OutcomeKind::Fail, std::move(d)}; }
CheckOutcome skip(std::string d) { return {OutcomeKind::Skip, std::move(d)}; }

/// Deterministic per-(scenario, theorem) sample sets.
std::vector<MSet> sample_sets(const Scenario& s, TheoremId id, int count) {
    Rng rng(splitmix64(s.seed ^ (static_cast<std::uint64_t>(s.index) << 20) ^
                       static_cast<std::uint64_t>(static_cast<int>(id) + 1)));
    std::vector<MSet> out;
    if (s.ground.is_finite()) {
        std::uint64_t full = (1ULL << s.ground.size) - 1;
        for (int i = 0; i < count; ++i) {
            out.push_back(MSet::finite(s.ground, rng() & full));
        }
        return out;
    }
    for (int i = 0; i < count; ++i) {
        switch (draw(rng, 5)) {
            case 0: {
                std::int64_t p = 2 + draw(rng, 5);
                out.push_back(MSet::omega(UPSet::residue_class(draw(rng, p), p)));
                break;
            }
            case 1: {
                std::int64_t lo = draw(rng, 6);
                out.push_back(MSet::omega(UPSet::range(lo, lo + 1 + draw(rng, 5))));
                break;
            }
            case 2:
                out.push_back(MSet::omega(UPSet::tail(draw(rng, 8))));
                break;
            case 3: {
                std::int64_t p = 2 + draw(rng, 4);
                out.push_back(MSet::omega(UPSet::union_of(
                    UPSet::residue_class(draw(rng, p), p), UPSet::range(0, draw(rng, 4)))));
                break;
            }
            default:
                out.push_back(MSet::omega(draw(rng, 2) == 0 ? UPSet::evens() : UPSet::odds()));
                break;
        }
    }
    return out;
}

struct Ctx {
    const Scenario& s;
    const CheckOptions& opts;
    std::optional<PropertyReport> props_m;
    std::optional<ExtValue> var_t;
    std::optional<IntegralVerdict> rl_f;

    const PropertyReport& props() {
        if (!props_m) props_m = check_properties(*s.m);
        return *props_m;
    }
    const ExtValue& variation_total() {
        if (!var_t) var_t = variation(*s.m, MSet::full(s.ground));
        return *var_t;
    }
    const IntegralVerdict& rl() {
        if (!rl_f) rl_f = rl_integrate(s.f, *s.m);
        return *rl_f;
    }
    double tol() const { return s.ground.is_finite() ? 0.0 : opts.tol; }
};

CheckOutcome check_restriction(Ctx& c) {
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable on T");
    for (const auto& a : sample_sets(c.s, TheoremId::T3_4_restriction, c.opts.samples)) {
        auto lhs = rl_integrate(c.s.f, *c.s.m, a);
        auto rhs = rl_integrate(FuncSpec::chi_multiply(c.s.f, a), *c.s.m);
        if (lhs.status != VerdictStatus::Value || rhs.status != VerdictStatus::Value) {
            return fail("restriction lost integrability on " + a.to_literal());
        }
        if (!vec_eq(lhs.value, rhs.value, c.tol())) {
            return fail("I_f(A) != int f*chi_A on A=" + a.to_literal() + ": " +
                        vec_str(lhs.value) + " vs " + vec_str(rhs.value));
        }
    }
    return pass();
}

CheckOutcome check_bound(Ctx& c) {
    ExtValue var = c.variation_total();
    if (var.infinite) return skip("variation of the ground set is infinite");
    if (c.rl().status != VerdictStatus::Value) {
        return fail("bounded f with finite variation must be integrable");
    }
    Scalar lhs = norm_inf(c.rl().value);
    Scalar rhs = Scalar(c.s.f.sup_norm()) * var.finite;
    if (!scalar_le(lhs, rhs, c.tol())) {
        return fail("||int f|| = " + lhs.to_string() + " exceeds sup|f|*var = " + rhs.to_string());
    }
    return pass();
}

CheckOutcome check_null_ae(Ctx& c) {
    // The stated hypothesis also asks for finite variation of the ground set;
    // under the singleton reduction the conclusion holds from the null
    // support alone, so the check gates only on that and covers the
    // infinite-variation counterexample measure too.
    AeZeroResult ae = ae_zero_set(c.s.f, *c.s.m);
    if (!ae.holds) return skip("f is not null m-almost everywhere");
    if (c.rl().status != VerdictStatus::Value) return fail("null-a.e. f must be integrable");
    if (!vec_eq(c.rl().value, vec_zero(c.s.f.dim()), c.tol())) {
        return fail("integral of a null-a.e. function is " + vec_str(c.rl().value));
    }
    return pass();
}

CheckOutcome check_linearity(Ctx& c) {
    if (!c.s.g) return skip("scenario carries no second function");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    auto rg = rl_integrate(*c.s.g, *c.s.m);
    if (rg.status != VerdictStatus::Value) return skip("g is not RL m-integrable");
    Rng rng(splitmix64(c.s.seed ^ 0xa11ceULL));
    Rat alpha = rat_signed(rng, 5, 3);
    auto sum = rl_integrate(FuncSpec::add(c.s.f, *c.s.g), *c.s.m);
    auto diff = rl_integrate(FuncSpec::sub(c.s.f, *c.s.g), *c.s.m);
    auto scaled = rl_integrate(FuncSpec::scale(alpha, c.s.f), *c.s.m);
    if (sum.status != VerdictStatus::Value || diff.status != VerdictStatus::Value ||
        scaled.status != VerdictStatus::Value) {
        return fail("linear combination lost integrability");
    }
    Vec alpha_f = vec_scale(Scalar(alpha), c.rl().value);
    if (!vec_eq(sum.value, vec_add(c.rl().value, rg.value), c.tol())) {
        return fail("int(f+g) != int f + int g: " + vec_str(sum.value));
    }
    if (!vec_eq(diff.value, vec_sub(c.rl().value, rg.value), c.tol())) {
        return fail("int(f-g) != int f - int g");
    }
    if (!vec_eq(scaled.value, alpha_f, c.tol())) {
        return fail("int(alpha f) != alpha int f with alpha=" + alpha.to_string());
    }
    // scale in the measure: int f d(beta m) = beta int f dm, beta >= 0
    Rat beta = rat_nonneg(rng, 5, 3);
    auto scaled_m = rl_integrate(c.s.f, *Measure::scale(beta, c.s.m));
    if (scaled_m.status != VerdictStatus::Value ||
        !vec_eq(scaled_m.value, vec_scale(Scalar(beta), c.rl().value), c.tol())) {
        return fail("int f d(beta m) != beta int f dm with beta=" + beta.to_string());
    }
    return pass();
}

CheckOutcome check_additivity(Ctx& c) {
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    auto sets = sample_sets(c.s, TheoremId::C3_8_additivity, c.opts.samples * 2);
    int used = 0;
    for (std::size_t i = 0; i + 1 < sets.size(); i += 2) {
        MSet a = sets[i];
        MSet b = MSet::difference(sets[i + 1], a);
        if (b.is_empty()) continue;
        ++used;
        auto ia = rl_integrate(c.s.f, *c.s.m, a);
        auto ib = rl_integrate(c.s.f, *c.s.m, b);
        auto iu = rl_integrate(c.s.f, *c.s.m, MSet::union_of(a, b));
        if (!vec_eq(iu.value, vec_add(ia.value, ib.value), c.tol())) {
            return fail("I_f not additive on " + a.to_literal() + " and " + b.to_literal());
        }
    }
    return used > 0 ? pass() : skip("no nontrivial disjoint pair sampled");
}

CheckOutcome check_ae_equal(Ctx& c) {
    if (!c.s.g) return skip("scenario carries no second function");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    AeZeroResult ae = ae_zero_set(FuncSpec::sub(*c.s.g, c.s.f), *c.s.m);
    if (!ae.holds) return skip("f and g differ on a non-null set");
    auto rg = rl_integrate(*c.s.g, *c.s.m);
    if (rg.status != VerdictStatus::Value) return fail("a.e.-equal g lost integrability");
    if (!vec_eq(c.rl().value, rg.value, c.tol())) {
        return fail("int f != int g for a.e.-equal pair: " + vec_str(c.rl().value) + " vs " +
                    vec_str(rg.value));
    }
    return pass();
}

CheckOutcome check_measure_sum(Ctx& c) {
    if (!c.s.m2) return skip("scenario carries no second measure");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m1-integrable");
    auto r2 = rl_integrate(c.s.f, *c.s.m2);
    if (r2.status != VerdictStatus::Value) return skip("f is not RL m2-integrable");
    auto rs = rl_integrate(c.s.f, *Measure::sum(c.s.m, c.s.m2));
    if (rs.status != VerdictStatus::Value) return fail("sum measure lost integrability");
    if (!vec_eq(rs.value, vec_add(c.rl().value, r2.value), c.tol())) {
        return fail("int f d(m1+m2) != int f dm1 + int f dm2");
    }
    return pass();
}

CheckOutcome check_lipschitz(Ctx& c) {
    if (!c.s.g) return skip("scenario carries no second function");
    ExtValue var = c.variation_total();
    if (var.infinite) return skip("variation of the ground set is infinite");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    auto rg = rl_integrate(*c.s.g, *c.s.m);
    if (rg.status != VerdictStatus::Value) return skip("g is not RL m-integrable");
    Scalar lhs = norm_inf(vec_sub(c.rl().value, rg.value));
    Scalar rhs = Scalar(FuncSpec::sub(c.s.f, *c.s.g).sup_norm()) * var.finite;
    if (!scalar_le(lhs, rhs, c.tol())) {
        return fail("||int f - int g|| = " + lhs.to_string() + " exceeds sup|f-g|*var = " +
                    rhs.to_string());
    }
    return pass();
}

CheckOutcome check_monotone_f(Ctx& c) {
    if (!c.s.g) return skip("scenario carries no second function");
    if (c.s.f.dim() != 1) return skip("order statement needs scalar functions");
    if (!FuncSpec::le_pointwise(c.s.f, *c.s.g)) return skip("f <= g fails pointwise");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    auto rg = rl_integrate(*c.s.g, *c.s.m);
    if (rg.status != VerdictStatus::Value) return skip("g is not RL m-integrable");
    if (!scalar_le(c.rl().value[0], rg.value[0], c.tol())) {
        return fail("int f > int g despite f <= g: " + c.rl().value[0].to_string() + " vs " +
                    rg.value[0].to_string());
    }
    return pass();
}

CheckOutcome check_monotone_m(Ctx& c) {
    if (!c.s.m2) return skip("scenario carries no second measure");
    if (!c.s.f.nonneg()) return skip("f must be nonnegative");
    // verify m1 <= m2: exhaustively on finite grounds, structurally or by
    // sampling on omega
    if (c.s.ground.is_finite()) {
        std::uint64_t full = 1ULL << c.s.ground.size;
        for (std::uint64_t a = 0; a < full; ++a) {
            MSet s = MSet::finite(c.s.ground, a);
            if (!scalar_le(c.s.m->eval(s), c.s.m2->eval(s), 0.0)) {
                return skip("m1 <= m2 fails at " + s.to_literal());
            }
        }
    } else {
        bool structural = false;
        if (const auto* sum = std::get_if<Measure::Sum>(&c.s.m2->family())) {
            structural = sum->a == c.s.m || sum->b == c.s.m;
        }
        if (!structural) {
            for (const auto& a : sample_sets(c.s, TheoremId::T3_13_monotone_m, 12)) {
                if (!scalar_le(c.s.m->eval(a), c.s.m2->eval(a), 0.0)) {
                    return skip("m1 <= m2 fails at " + a.to_literal());
                }
            }
        }
    }
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m1-integrable");
    auto r2 = rl_integrate(c.s.f, *c.s.m2);
    if (r2.status != VerdictStatus::Value) return skip("f is not RL m2-integrable");
    if (!scalar_le(c.rl().value[0], r2.value[0], c.tol())) {
        return fail("int f dm1 > int f dm2 despite m1 <= m2");
    }
    return pass();
}

CheckOutcome check_abscont_finvar(Ctx& c) {
    ExtValue var = c.variation_total();
    if (var.infinite) return skip("variation of the ground set is infinite");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    Scalar supf{c.s.f.sup_norm()};
    // dominating bound ||I_f(A)|| <= sup|f| * variation(A) on sampled sets
    for (const auto& a : sample_sets(c.s, TheoremId::T3_14i_abscont_finvar, c.opts.samples)) {
        ExtValue va = variation(*c.s.m, a);
        if (va.infinite) continue;
        Scalar lhs = norm_inf(rl_integrate(c.s.f, *c.s.m, a).value);
        if (!scalar_le(lhs, supf * va.finite, c.tol())) {
            return fail("||I_f(A)|| exceeds sup|f|*var(A) at " + a.to_literal());
        }
    }
    // finite variation of I_f itself
    Scalar bound = supf * var.finite;
    if (c.s.ground.is_finite()) {
        std::uint64_t full = 1ULL << c.s.ground.size;
        std::vector<Scalar> norms(full);
        for (std::uint64_t a = 0; a < full; ++a) {
            norms[a] = norm_inf(rl_integrate(c.s.f, *c.s.m, MSet::finite(c.s.ground, a)).value);
        }
        auto v = variation_dp_serial(norms);
        if (!scalar_le(v.back(), bound, c.tol())) {
            return fail("variation of I_f exceeds sup|f|*var(T)");
        }
    } else {
        // sampled disjoint families
        auto sets = sample_sets(c.s, TheoremId::T3_14i_abscont_finvar, c.opts.samples * 2);
        Scalar acc{Rat(0)};
        MSet used = MSet::empty(c.s.ground);
        for (const auto& a : sets) {
            MSet piece = MSet::difference(a, used);
            if (piece.is_empty()) continue;
            used = MSet::union_of(used, piece);
            acc += norm_inf(rl_integrate(c.s.f, *c.s.m, piece).value);
        }
        if (!scalar_le(acc, bound, c.tol())) {
            return fail("sampled disjoint family exceeds sup|f|*var(T)");
        }
    }
    return pass();
}

CheckOutcome check_ocont_exhaustive(Ctx& c) {
    if (c.s.ground.is_finite()) {
        return skip("probe chains are defined on the omega ground");
    }
    ExtValue var = c.variation_total();
    if (var.infinite) return skip("variation of the ground set is infinite");
    const auto& props = c.props();
    if (!(props.proved(Prop::SigmaAdditive) || props.proved(Prop::SigmaSubadditive))) {
        return skip("variation is not certified o-continuous/exhaustive");
    }
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    Scalar supf{c.s.f.sup_norm()};
    // decreasing chains to empty: tails and thinning residue sets
    std::vector<std::vector<MSet>> chains(2);
    for (int k = 0; k < 6; ++k) {
        chains[0].push_back(MSet::omega(UPSet::tail(1LL << (2 * k))));
        chains[1].push_back(MSet::omega(
            UPSet::intersect(UPSet::residue_class(0, 1LL << k), UPSet::tail(1LL << k))));
    }
    // disjoint sequence: odd multiples of growing powers of two
    std::vector<MSet> disj;
    for (int k = 0; k < 6; ++k) {
        disj.push_back(MSet::omega(UPSet::residue_class(1LL << k, 1LL << (k + 1))));
    }
    auto value_at = [&](const MSet& a) {
        return norm_inf(rl_integrate(c.s.f, *c.s.m, a).value);
    };
    for (const auto& chain : chains) {
        for (const auto& a : chain) {
            ExtValue va = variation(*c.s.m, a);
            if (va.infinite) return fail("finite-variation measure produced an infinite tail");
            if (!scalar_le(value_at(a), supf * va.finite, c.tol())) {
                return fail("||I_f|| exceeds the dominating bound along a chain");
            }
        }
        Scalar last = value_at(chain.back());
        ExtValue vlast = variation(*c.s.m, chain.back());
        Scalar allowed = supf * vlast.finite;
        if (!scalar_le(last, allowed, c.opts.tol)) {
            return fail("chain tail fails to shrink: " + last.to_string());
        }
    }
    for (const auto& a : disj) {
        ExtValue va = variation(*c.s.m, a);
        if (va.infinite) return fail("finite-variation measure produced an infinite piece");
        if (!scalar_le(value_at(a), supf * va.finite, c.tol())) {
            return fail("||I_f|| exceeds the dominating bound along a disjoint sequence");
        }
    }
    return pass();
}

CheckOutcome check_monotone_If(Ctx& c) {
    if (c.s.f.dim() != 1) return skip("order statement needs scalar functions");
    if (!c.s.f.nonneg()) return skip("f must be nonnegative");
    if (!c.props().proved(Prop::Monotone)) return skip("m is not certified monotone");
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    if (c.s.ground.is_finite()) {
        std::uint64_t full = 1ULL << c.s.ground.size;
        for (std::uint64_t b = 0; b < full; ++b) {
            for (std::uint64_t a = b; a != 0; a = (a - 1) & b) {
                auto ia = rl_integrate(c.s.f, *c.s.m, MSet::finite(c.s.ground, a));
                auto ib = rl_integrate(c.s.f, *c.s.m, MSet::finite(c.s.ground, b));
                if (!scalar_le(ia.value[0], ib.value[0], 0.0)) {
                    return fail("I_f not monotone on nested masks");
                }
            }
        }
        return pass();
    }
    auto sets = sample_sets(c.s, TheoremId::T3_14ii_monotone_If, c.opts.samples * 2);
    int used = 0;
    for (std::size_t i = 0; i + 1 < sets.size(); i += 2) {
        MSet a = MSet::intersect(sets[i], sets[i + 1]);
        MSet b = sets[i + 1];
        if (a.is_empty()) continue;
        ++used;
        auto ia = rl_integrate(c.s.f, *c.s.m, a);
        auto ib = rl_integrate(c.s.f, *c.s.m, b);
        if (!scalar_le(ia.value[0], ib.value[0], c.tol())) {
            return fail("I_f not monotone on " + a.to_literal() + " inside " + b.to_literal());
        }
    }
    return used > 0 ? pass() : skip("no nontrivial nested pair sampled");
}

CheckOutcome check_rl_implies_bs(Ctx& c) {
    if (c.rl().status != VerdictStatus::Value) return skip("f is not RL m-integrable");
    auto bs = birkhoff_simple(c.s.f, *c.s.m);
    if (bs.status != VerdictStatus::Value) {
        return fail("RL-integrable f not Birkhoff simple integrable");
    }
    if (!vec_eq(bs.value, c.rl().value, c.tol())) {
        return fail("Birkhoff simple and RL values differ");
    }
    return pass();
}

CheckOutcome check_gould_eq_rl(Ctx& c) {
    if (!c.props().proved(Prop::SigmaAdditive)) return skip("m is not certified sigma-additive");
    ExtValue var = c.variation_total();
    if (var.infinite) return skip("variation of the ground set is infinite");
    auto gd = gould_integrate(c.s.f, *c.s.m, c.opts.gould);
    if (c.rl().status != VerdictStatus::Value) {
        return fail("sigma-additive finite-variation scenario lost RL integrability");
    }
    if (gd.status != VerdictStatus::Value) return fail("gould did not dispatch to a value");
    if (!vec_eq(gd.value, c.rl().value, std::max(c.opts.tol, c.tol()))) {
        return fail("gould and RL values differ: " + vec_str(gd.value) + " vs " +
                    vec_str(c.rl().value));
    }
    return pass();
}

CheckOutcome check_counterexample(Ctx& c) {
    const auto* cc = std::get_if<Measure::CardClass>(&c.s.m->family());
    if (!cc || c.s.ground.is_finite()) return skip("not an infinite-indicator scenario");
    bool finite_null = std::all_of(cc->theta.begin(), cc->theta.end(),
                                   [](const Rat& x) { return x.is_zero(); });
    if (!finite_null || cc->theta_inf.is_zero()) return skip("theta is not the indicator shape");
    if (c.s.f.dim() != 1 || c.s.f.prefix_len() != 0 || c.s.f.period() != 1 ||
        c.s.f.eval(0)[0].is_zero()) {
        return skip("f is not a nonzero constant");
    }
    Rat cval = c.s.f.eval(0)[0];
    if (c.rl().status != VerdictStatus::Value || !c.rl().value[0].exact() ||
        !c.rl().value[0].rat().is_zero()) {
        return fail("RL integral must be exactly zero");
    }
    auto bs = birkhoff_simple(c.s.f, *c.s.m);
    if (bs.status != VerdictStatus::Value || !bs.value[0].rat().is_zero()) {
        return fail("Birkhoff simple integral must be exactly zero");
    }
    auto gd = gould_integrate(c.s.f, *c.s.m, c.opts.gould);
    if (gd.status != VerdictStatus::Divergent) return fail("gould must diverge");
    if (static_cast<int>(gd.certificate.size()) < 11) {
        return fail("divergence chain shorter than K=10 steps");
    }
    Rat step = cval * cc->theta_inf;
    for (std::size_t i = 0; i < gd.certificate.size(); ++i) {
        const auto& rec = gd.certificate[i];
        if (!rec.sigma[0].exact() ||
            !(rec.sigma[0].rat() == step * Rat(static_cast<std::int64_t>(i + 1)))) {
            return fail("sigma chain is not the exact arithmetic progression");
        }
    }
    return pass();
}

CheckOutcome check_submeasure_equiv(Ctx& c) {
    const auto& props = c.props();
    if (!props.proved(Prop::Monotone)) return skip("m is not certified monotone");
    if (!props.proved(Prop::SigmaSubadditive)) return skip("m is not certified sigma-subadditive");
    ExtValue var = c.variation_total();
    if (var.infinite) return skip("variation of the ground set is infinite");
    auto gd = gould_integrate(c.s.f, *c.s.m, c.opts.gould);
    if (c.rl().status != VerdictStatus::Value) {
        return fail("submeasure scenario of finite variation lost RL integrability");
    }
    if (gd.status != VerdictStatus::Value) return fail("gould did not reach a value");
    if (!vec_eq(gd.value, c.rl().value, std::max(c.opts.tol, c.tol()))) {
        return fail("gould and RL values differ under the submeasure hypotheses");
    }
    return pass();
}

CheckOutcome check_atom_finite(Ctx& c) {
    if (!c.s.ground.is_finite()) return skip("atom check runs on finite grounds only");
    const auto& props = c.props();
    if (!props.proved(Prop::PropertySigma)) return skip("m lacks property (sigma)");
    if (!props.proved(Prop::Monotone)) return skip("m is not certified monotone");
    if (!props.proved(Prop::NullAdditive)) return skip("m is not certified null-additive");
    std::uint64_t full = 1ULL << c.s.ground.size;
    int atoms = 0;
    for (std::uint64_t a = 1; a < full; ++a) {
        MSet s = MSet::finite(c.s.ground, a);
        if (!is_atom(*c.s.m, s)) continue;
        ++atoms;
        auto rl = rl_integrate(c.s.f, *c.s.m, s);
        Vec gould_on_a = singleton_sum_finite(c.s.f, a, *c.s.m);
        if (!vec_eq(rl.value, gould_on_a, 0.0)) {
            return fail("Gould and RL differ on atom " + s.to_literal());
        }
    }
    return atoms > 0 ? pass() : skip("measure has no atoms");
}

}  // namespace

CheckOutcome check_one(TheoremId id, const Scenario& s, const CheckOptions& opts) {
    Ctx c{s, opts, {}, {}, {}};
    try {
        switch (id) {
            case TheoremId::T3_4_restriction: return check_restriction(c);
            case TheoremId::P3_5_bound: return check_bound(c);
            case TheoremId::T3_6_null_ae: return check_null_ae(c);
            case TheoremId::T3_7_linearity: return check_linearity(c);
            case TheoremId::C3_8_additivity: return check_additivity(c);
            case TheoremId::C3_9_ae_equal: return check_ae_equal(c);
            case TheoremId::T3_10_measure_sum: return check_measure_sum(c);
            case TheoremId::T3_11_lipschitz: return check_lipschitz(c);
            case TheoremId::T3_12_monotone_f: return check_monotone_f(c);
            case TheoremId::T3_13_monotone_m: return check_monotone_m(c);
            case TheoremId::T3_14i_abscont_finvar: return check_abscont_finvar(c);
            case TheoremId::T3_14ib_ocont_exhaustive: return check_ocont_exhaustive(c);
            case TheoremId::T3_14ii_monotone_If: return check_monotone_If(c);
            case TheoremId::T4_5_rl_implies_bs: return check_rl_implies_bs(c);
            case TheoremId::P4_10_gould_eq_rl: return check_gould_eq_rl(c);
            case TheoremId::E4_12_counterexample: return check_counterexample(c);
            case TheoremId::T4_13_submeasure_equiv: return check_submeasure_equiv(c);
            case TheoremId::T4_14_atom_finite: return check_atom_finite(c);
        }
    } catch (const UnsupportedFamily& e) {
        return skip(std::string("unsupported: ") + e.what());
    } catch (const LimitExceeded& e) {
        return skip(std::string("limit: ") + e.what());
    } catch (const Error& e) {
        return fail(std::string("error: ") + e.what());
    }
    return skip("unknown theorem");
}

TheoremReport run_check(TheoremId id, const std::vector<Scenario>& scenarios,
                        const CheckOptions& opts) {
    TheoremReport rep;
    rep.theorem = theorem_name(id);
    if (id == TheoremId::T3_14i_abscont_finvar) {
        rep.note = "absolute continuity verified via the dominating bound ||I_f(A)|| <= sup|f|*var(A)";
    } else if (id == TheoremId::T3_14ib_ocont_exhaustive) {
        rep.note = "necessary-condition probing along a fixed chain/sequence family";
    } else if (id == TheoremId::T4_14_atom_finite) {
        rep.note = "finite grounds only; both integrals reduce to the singleton sum there";
    }
    rep.scenarios = static_cast<int>(scenarios.size());
    std::vector<CheckOutcome> outcomes(scenarios.size());
    const std::int64_t count = static_cast<std::int64_t>(scenarios.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        outcomes[static_cast<std::size_t>(i)] = check_one(id, scenarios[static_cast<std::size_t>(i)], opts);
    }
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const auto& o = outcomes[i];
        switch (o.kind) {
            case OutcomeKind::Pass:
                ++rep.passes;
                break;
            case OutcomeKind::Fail: {
                std::ostringstream w;
                w << "{\"theorem\":\"" << rep.theorem << "\",\"index\":" << scenarios[i].index
                  << ",\"seed\":" << scenarios[i].seed << ",\"note\":\"" << scenarios[i].note
                  << "\",\"detail\":\"" << o.detail << "\"}";
                rep.failures.push_back({scenarios[i].index, scenarios[i].seed, w.str()});
                break;
            }
            case OutcomeKind::Skip:
                rep.skips.push_back({scenarios[i].index, o.detail});
                break;
        }
    }
    return rep;
}

std::vector<TheoremReport> run_all(const std::vector<Profile>& profiles, int count,
                                   std::uint64_t seed, const CheckOptions& opts) {
    std::vector<Scenario> all;
    for (const auto& p : profiles) {
        auto batch = gen_scenarios(p, count, seed);
        all.insert(all.end(), batch.begin(), batch.end());
    }
    std::vector<TheoremReport> reports;
    reports.reserve(kAllTheorems.size());
    for (TheoremId id : kAllTheorems) reports.push_back(run_check(id, all, opts));
    return reports;
}

bool any_failure(const std::vector<TheoremReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const TheoremReport& r) { return !r.failures.empty(); });
}

ReplayResult replay(TheoremId id, const Profile& profile, std::uint64_t seed, int index,
                    const CheckOptions& opts) {
    Scenario s = gen_scenario(profile, seed, index);
    CheckOutcome o = check_one(id, s, opts);
    return {o.kind == OutcomeKind::Fail, o.detail};
}

std::vector<Profile> default_profiles() {
    using F = Profile::Flavor;
    return {
        Profile::finite(5, F::Default),    Profile::finite(5, F::MonotoneM),
        Profile::finite(5, F::OrderedFG),  Profile::finite(5, F::Additive),
        Profile::finite(4, F::Subadditive), Profile::finite(5, F::NullSupport),
        Profile::omega(F::Default),        Profile::omega(F::PointMassOnly),
        Profile::omega(F::DistortionOnly), Profile::omega(F::MonotoneM),
        Profile::omega(F::OrderedFG),      Profile::omega(F::NullSupport),
        Profile::omega(F::Example),
    };
}

}  // namespace nonadd
