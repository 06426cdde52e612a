#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/measure.hpp"
#include "nonadd/partition.hpp"

namespace nonadd {

enum class Prop {
    Monotone,
    Subadditive,
    SigmaSubadditive,
    NullAdditive,
    FinitelyAdditive,
    SigmaAdditive,
    Exhaustive,
    OContinuous,
    PropertySigma,
    Submeasure,
};

inline constexpr std::array<Prop, 10> kAllProps = {
    Prop::Monotone,        Prop::Subadditive,      Prop::SigmaSubadditive, Prop::NullAdditive,
    Prop::FinitelyAdditive, Prop::SigmaAdditive,   Prop::Exhaustive,       Prop::OContinuous,
    Prop::PropertySigma,   Prop::Submeasure,
};

const char* prop_name(Prop p);
std::optional<Prop> prop_from_name(std::string_view name);

enum class VKind { Proved, Refuted, Probed };

/// Concrete material realizing a violation. `sets` carries the primary sets;
/// `parts`/`tail` describe a countable decomposition of sets[0] when the
/// refuted property is a sigma property; `bound` is a claimed lower bound for
/// limit-property counterexample families.
struct Witness {
    std::vector<MSet> sets;
    std::vector<MSet> parts;
    std::optional<UPSet> tail;
    std::optional<Rat> bound;
    std::string note;
};

struct PropertyVerdict {
    VKind kind = VKind::Probed;
    std::optional<Witness> witness;
    int probes = 0;
    std::string note;
};

struct PropertyReport {
    Ground ground = Ground::omega();
    std::map<Prop, PropertyVerdict> verdicts;

    const PropertyVerdict& of(Prop p) const { return verdicts.at(p); }
    bool proved(Prop p) const { return of(p).kind == VKind::Proved; }
    bool refuted(Prop p) const { return of(p).kind == VKind::Refuted; }
};

/// Finite ground + table-like families: exhaustive decision over all pairs,
/// decompositions and chains. Omega rule families: family-level certificates
/// where a proof or a constructive refutation is known, falsification probes
/// over generated set sequences otherwise.
PropertyReport check_properties(const Measure& m);

/// Structural certificates only (no probing): the fast path used by the
/// variation and integral dispatch rules.
PropertyReport structural_properties(const Measure& m);

/// Re-evaluates a refutation witness under eval_measure; true iff the
/// violation is (still) realized.
bool recheck_witness(const Measure& m, Prop p, const Witness& w);

}  // namespace nonadd
