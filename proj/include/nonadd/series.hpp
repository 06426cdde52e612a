#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nonadd/funcspec.hpp"
#include "nonadd/measure.hpp"

namespace nonadd {

/// Outcome of summing the singleton series  sum_{t in A} f(t) * m({t}).
struct SeriesOutcome {
    Vec value;                  // d components; meaningful when !divergent
    bool abs_convergent = true;
    bool divergent = false;
    /// Partial sums at growing cutoffs; certificate data when divergent.
    std::vector<std::pair<std::int64_t, Vec>> partials;
};

/// Closed-form evaluation on omega via the measure's eventually geometric
/// weight rules. Exact when every rule is exact; otherwise numeric with a
/// rigorous radius. A constant positive tail (ratio 1) meeting nonzero f
/// values makes the series absolutely divergent.
SeriesOutcome singleton_series(const FuncSpec& f, const UPSet& over, const Measure& m);

/// Finite-ground singleton sum over a mask (always a finite exact sum).
Vec singleton_sum_finite(const FuncSpec& f, std::uint64_t mask, const Measure& m);

/// Double-precision partial sum over {t in A : t < cutoff} (oracle/probes).
std::vector<double> series_partial_num(const FuncSpec& f, const UPSet& over, const Measure& m,
                                       std::int64_t cutoff);

}  // namespace nonadd
