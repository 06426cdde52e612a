#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/funcspec.hpp"
#include "nonadd/measure.hpp"
#include "nonadd/partition.hpp"
#include "nonadd/series.hpp"

namespace nonadd {

enum class VerdictStatus { Value, Divergent, Unknown };

/// One evaluated partition along a refinement chain.
struct ChainRecord {
    std::string partition;  // printable description
    std::int64_t k_blocks = 0;
    Vec sigma;
    double radius = 0.0;
};

/// Outcome of an integral engine: a value with rigorous radius, a divergence
/// certificate (replayable refinement chain), or bounded-unknown.
struct IntegralVerdict {
    VerdictStatus status = VerdictStatus::Unknown;
    Vec value;
    bool abs_convergent = false;
    std::vector<ChainRecord> certificate;  // Divergent
    std::vector<double> lo, hi;            // Unknown: componentwise sigma range seen
    std::int64_t budget_spent = 0;
    double probe_max_dev = 0.0;  // worst Cauchy-probe deviation backing a Value
    std::vector<ChainRecord> trace;  // principal chain for CSV traces

    double radius() const { return value.empty() ? 0.0 : vec_radius(value); }
    bool is_value() const { return status == VerdictStatus::Value; }
};

struct SigmaResult {
    Vec value;
    bool abs_convergent = true;
    bool tail_divergent = false;
    std::vector<ChainRecord> growth;  // partial-sum records when divergent
};

/// sigma(P) = sum of f(t_B) m(B) over explicit blocks plus the singleton tail
/// series. tail_divergent flags a non-admissible countable sum.
SigmaResult sigma_sum(const FuncSpec& f, const TaggedPartition& tp, const Measure& m);

/// Riemann-Lebesgue integral over A (default: the whole ground) via the
/// singleton-partition reduction: the all-singletons partition is the maximum
/// of the countable refinement order, so integrability is absolute
/// convergence of the singleton series.
IntegralVerdict rl_integrate(const FuncSpec& f, const Measure& m);
IntegralVerdict rl_integrate(const FuncSpec& f, const Measure& m, const MSet& a);

/// Birkhoff simple integral: limsup criterion on the singleton partition,
/// checked as absolute convergence plus agreement under a reordering probe
/// set (reversed windows, parity interleave).
IntegralVerdict birkhoff_simple(const FuncSpec& f, const Measure& m);

struct GouldBudget {
    int depth = 12;
    int chains = 64;
    int split_arity = 8;
    double tol = 1e-9;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    bool want_trace = false;
};

/// Gould integral over the net of finite partitions. Three stages:
/// (1) theorem-backed dispatch (sigma-additive or monotone sigma-subadditive
/// measures of finite variation) cross-checked by an empirical Cauchy probe
/// over random refinement chains, (2) divergence search along splitting
/// chains, (3) bounded-unknown.
IntegralVerdict gould_integrate(const FuncSpec& f, const Measure& m, const GouldBudget& budget = {});

/// The set function I_f(A) = integral of f over A; requires rl_integrate
/// to return Value on the whole ground.
class IndefiniteIntegral {
public:
    IndefiniteIntegral(FuncSpec f, MeasurePtr m);
    IntegralVerdict operator()(const MSet& a) const;
    const FuncSpec& func() const { return f_; }

private:
    FuncSpec f_;
    MeasurePtr m_;
};

IndefiniteIntegral indefinite(const FuncSpec& f, MeasurePtr m);

}  // namespace nonadd
