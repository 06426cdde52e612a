#include "nonadd/variation.hpp"

#include <algorithm>
#include <cmath>

#include "nonadd/series.hpp"

namespace nonadd {

namespace {

constexpr int kDpLimit = 22;

/// Best total theta over compositions of e into positive part sizes.
Rat cardclass_finite_optimum(const Measure::CardClass& cc, std::int64_t e) {
    std::int64_t k = static_cast<std::int64_t>(cc.theta.size()) - 1;
    auto theta = [&](std::int64_t j) { return cc.theta[static_cast<std::size_t>(std::min(j, k))]; };
    std::vector<Rat> best(static_cast<std::size_t>(e + 1), Rat(0));
    for (std::int64_t n = 1; n <= e; ++n) {
        Rat b(0);
        for (std::int64_t s = 1; s <= n; ++s) {
            b = max(b, theta(s) + best[static_cast<std::size_t>(n - s)]);
        }
        best[static_cast<std::size_t>(n)] = b;
    }
    return best[static_cast<std::size_t>(e)];
}

bool theta_all_zero(const Measure::CardClass& cc) {
    return cc.theta_inf.is_zero() &&
           std::all_of(cc.theta.begin(), cc.theta.end(), [](const Rat& x) { return x.is_zero(); });
}

std::optional<ExtValue> variation_omega(const Measure& m, const MSet& e);

/// Rule: sigma-subadditive m has sigma-additive variation, which agrees
/// with m on singletons, so variation(E) is the singleton series.
ExtValue variation_by_singleton_series(const Measure& m, const MSet& e) {
    auto f1 = FuncSpec::constant(Ground::omega(), QVec{Rat(1)});
    auto s = singleton_series(f1, e.upset(), m);
    if (s.divergent) return ExtValue::inf();
    return ExtValue::of(s.value[0]);
}

std::optional<ExtValue> variation_omega(const Measure& m, const MSet& e) {
    // CardClass first: its variation can be infinite and has its own rule.
    if (const auto* cc = std::get_if<Measure::CardClass>(&m.family())) {
        if (!e.is_finite_set()) {
            if (theta_all_zero(*cc)) return ExtValue::of(Scalar(Rat(0)));
            // Every k admits k disjoint subsets of any fixed positive size
            // (or k infinite residue classes), so any positive theta value
            // pumps the sum without bound.
            return ExtValue::inf();
        }
        return ExtValue::of(Scalar(cardclass_finite_optimum(*cc, *e.cardinality())));
    }
    if (const auto* sc = std::get_if<Measure::Scale>(&m.family())) {
        if (sc->alpha.is_zero()) return ExtValue::of(Scalar(Rat(0)));
        auto inner = variation_omega(*sc->inner, e);
        if (!inner) return std::nullopt;
        if (inner->infinite) return inner;
        return ExtValue::of(Scalar(sc->alpha) * inner->finite);
    }
    PropertyReport props = structural_properties(m);
    if (props.proved(Prop::FinitelyAdditive)) {
        // Additive m has variation equal to m itself.
        return ExtValue::of(m.eval(e));
    }
    if (props.proved(Prop::SigmaSubadditive)) {
        return variation_by_singleton_series(m, e);
    }
    if (const auto* sum = std::get_if<Measure::Sum>(&m.family())) {
        // Variation is monotone in the measure: either side infinite forces
        // the sum infinite.
        auto va = variation_omega(*sum->a, e);
        auto vb = variation_omega(*sum->b, e);
        if (va && va->infinite) return ExtValue::inf();
        if (vb && vb->infinite) return ExtValue::inf();
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Scalar> subset_values(const Measure& m, const MSet& e) {
    if (!e.ground().is_finite()) throw UnsupportedGround("subset_values: finite grounds only");
    std::vector<std::int64_t> bits = e.elements_below(e.ground().size);
    int k = static_cast<int>(bits.size());
    if (k > kDpLimit) throw LimitExceeded("variation: subset too large for the DP");
    std::vector<Scalar> values(1ULL << k);
    for (std::uint64_t s = 0; s < values.size(); ++s) {
        std::uint64_t mask = 0;
        for (int i = 0; i < k; ++i) {
            if ((s >> i) & 1ULL) mask |= 1ULL << bits[static_cast<std::size_t>(i)];
        }
        values[s] = m.eval(MSet::finite(e.ground(), mask));
    }
    return values;
}

ExtValue variation(const Measure& m, const MSet& e) {
    require_same_ground(m.ground(), e.ground(), "variation");
    if (m.ground().is_finite()) {
        std::vector<Scalar> values = subset_values(m, e);
        if (vec_exact(values)) {
            std::vector<Rat> qs(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) qs[i] = values[i].rat();
            auto v = values.size() > (1ULL << 10) ? variation_dp_parallel(qs)
                                                  : variation_dp_serial(qs);
            return ExtValue::of(Scalar(v.back()));
        }
        auto v = variation_dp_serial(values);
        return ExtValue::of(v.back());
    }
    auto out = variation_omega(m, e);
    if (!out) {
        // Finite subsets of omega always admit the exact finite-combinatorics
        // optimum, whatever the family.
        auto card = e.cardinality();
        if (card && *card <= kDpLimit) {
            auto elems = e.elements_below(e.upset().prefix_len());
            int k = static_cast<int>(elems.size());
            std::vector<Scalar> values(1ULL << k);
            for (std::uint64_t s = 0; s < values.size(); ++s) {
                std::vector<std::int64_t> members;
                for (int i = 0; i < k; ++i) {
                    if ((s >> i) & 1ULL) members.push_back(elems[static_cast<std::size_t>(i)]);
                }
                values[s] = m.eval(MSet::omega(UPSet::finite_set(members)));
            }
            auto v = variation_dp_serial(values);
            return ExtValue::of(v.back());
        }
        throw UnsupportedFamily("variation: no derivation rule for " + m.describe());
    }
    return *out;
}

ExtValue mtilde(const Measure& m, const MSet& a) {
    // Power-set sigma-algebra: A itself is an admissible superset and the
    // variation is monotone, so the infimum is attained at A.
    return variation(m, a);
}

bool is_atom(const Measure& m, const MSet& a) {
    require_same_ground(m.ground(), a.ground(), "is_atom");
    if (!m.ground().is_finite()) {
        throw UnsupportedGround("is_atom: only decidable on finite grounds here");
    }
    Scalar ma = m.eval(a);
    if (!(ma.exact() ? !ma.rat().is_zero() : ma.value() - ma.radius() > 0.0)) return false;
    std::uint64_t full = a.mask();
    for (std::uint64_t b = full; b != 0; b = (b - 1) & full) {
        Scalar mb = m.eval(MSet::finite(m.ground(), b));
        Scalar mrest = m.eval(MSet::finite(m.ground(), full & ~b));
        auto zero = [](const Scalar& s) {
            return s.exact() ? s.rat().is_zero() : std::fabs(s.value()) <= s.radius();
        };
        if (!zero(mb) && !zero(mrest)) return false;
    }
    return true;
}

AeZeroResult ae_zero_set(const FuncSpec& f, const Measure& m) {
    require_same_ground(f.ground(), m.ground(), "ae_zero_set");
    AeZeroResult r;
    r.support = f.support();
    r.mtilde_value = mtilde(m, r.support);
    if (r.mtilde_value.infinite) {
        r.holds = false;
    } else {
        const Scalar& v = r.mtilde_value.finite;
        r.holds = v.exact() ? v.rat().is_zero() : std::fabs(v.value()) <= v.radius();
    }
    return r;
}

}  // namespace nonadd
