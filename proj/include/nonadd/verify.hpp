#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/integrals.hpp"

namespace nonadd {

enum class TheoremId {
    T3_4_restriction,
    P3_5_bound,
    T3_6_null_ae,
    T3_7_linearity,
    C3_8_additivity,
    C3_9_ae_equal,
    T3_10_measure_sum,
    T3_11_lipschitz,
    T3_12_monotone_f,
    T3_13_monotone_m,
    T3_14i_abscont_finvar,
    T3_14ib_ocont_exhaustive,
    T3_14ii_monotone_If,
    T4_5_rl_implies_bs,
    P4_10_gould_eq_rl,
    E4_12_counterexample,
    T4_13_submeasure_equiv,
    T4_14_atom_finite,
};

inline constexpr std::array<TheoremId, 18> kAllTheorems = {
    TheoremId::T3_4_restriction,      TheoremId::P3_5_bound,
    TheoremId::T3_6_null_ae,          TheoremId::T3_7_linearity,
    TheoremId::C3_8_additivity,       TheoremId::C3_9_ae_equal,
    TheoremId::T3_10_measure_sum,     TheoremId::T3_11_lipschitz,
    TheoremId::T3_12_monotone_f,      TheoremId::T3_13_monotone_m,
    TheoremId::T3_14i_abscont_finvar, TheoremId::T3_14ib_ocont_exhaustive,
    TheoremId::T3_14ii_monotone_If,   TheoremId::T4_5_rl_implies_bs,
    TheoremId::P4_10_gould_eq_rl,     TheoremId::E4_12_counterexample,
    TheoremId::T4_13_submeasure_equiv, TheoremId::T4_14_atom_finite,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// Scenario generator profile: ground shape plus a construction flavor that
/// settles which hypotheses hold by construction (they are still re-verified
/// by check_properties before any assertion).
struct Profile {
    enum class Kind { Finite, Omega };
    enum class Flavor {
        Default,         // mixed random families
        MonotoneM,       // monotone measure, nonnegative f, m2 >= m
        OrderedFG,       // scalar pair with f <= g pointwise
        NullSupport,     // f (and g - f) supported on a null set
        PointMassOnly,   // sigma-additive omega scenarios
        DistortionOnly,  // concave distortions of point masses
        Additive,        // additive tables
        Subadditive,     // subadditive-by-construction tables
        Example,         // the Gould/RL separation scenario
    };

    Kind kind = Kind::Finite;
    int n = 5;
    Flavor flavor = Flavor::Default;

    static Profile finite(int n, Flavor f = Flavor::Default) { return {Kind::Finite, n, f}; }
    static Profile omega(Flavor f = Flavor::Default) { return {Kind::Omega, 0, f}; }
    std::string to_string() const;
};

struct Scenario {
    Ground ground = Ground::omega();
    MeasurePtr m;
    MeasurePtr m2;  // second measure (sum / ordering checks)
    FuncSpec f = FuncSpec::zero(Ground::omega(), 1);
    std::optional<FuncSpec> g;
    std::uint64_t seed = 0;
    int index = 0;
    std::string note;
};

inline constexpr int kGeneratorVersion = 1;

/// Deterministic scenario stream: element `index` depends only on
/// (profile, seed, index, generator version).
Scenario gen_scenario(const Profile& profile, std::uint64_t seed, int index);
std::vector<Scenario> gen_scenarios(const Profile& profile, int count, std::uint64_t seed);

struct CheckOptions {
    double tol = 1e-9;
    int samples = 8;
    GouldBudget gould;
};

struct TheoremReport {
    std::string theorem;
    std::string note;  // verification-strength caveats, when any
    int scenarios = 0;
    int passes = 0;
    struct Failure {
        int index = 0;
        std::uint64_t seed = 0;
        std::string witness;
    };
    struct Skip {
        int index = 0;
        std::string reason;
    };
    std::vector<Failure> failures;
    std::vector<Skip> skips;
};

enum class OutcomeKind { Pass, Fail, Skip };
struct CheckOutcome {
    OutcomeKind kind = OutcomeKind::Skip;
    std::string detail;
};

/// One scenario against one theorem: hypothesis gates first (unmet -> Skip
/// with the violated hypothesis named), then the assertion (exact on finite
/// grounds, within declared radii plus tol on omega).
CheckOutcome check_one(TheoremId id, const Scenario& s, const CheckOptions& opts = {});

TheoremReport run_check(TheoremId id, const std::vector<Scenario>& scenarios,
                        const CheckOptions& opts = {});

/// Every theorem over the concatenated profile streams; failure iff any
/// report carries a failure.
std::vector<TheoremReport> run_all(const std::vector<Profile>& profiles, int count,
                                   std::uint64_t seed, const CheckOptions& opts = {});

bool any_failure(const std::vector<TheoremReport>& reports);

/// Regenerates the scenario and re-runs the check; used to confirm that a
/// recorded failure deterministically reproduces.
struct ReplayResult {
    bool reproduced = false;
    std::string detail;
};
ReplayResult replay(TheoremId id, const Profile& profile, std::uint64_t seed, int index,
                    const CheckOptions& opts = {});

/// Default shipped corpus: the profile list the CLI `verify` command runs.
std::vector<Profile> default_profiles();

}  // namespace nonadd
