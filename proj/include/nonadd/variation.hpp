#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nonadd/funcspec.hpp"
#include "nonadd/measure.hpp"
#include "nonadd/properties.hpp"

namespace nonadd {

inline Rat max_of(const Rat& a, const Rat& b) { return max(a, b); }
inline double max_of(double a, double b) { return a < b ? b : a; }
inline Scalar max_of(const Scalar& a, const Scalar& b) { return Scalar::max(a, b); }

/// Partition dynamic program over subset masks:
///   v(S) = max(m(S), max over proper splits v(S') + v(S \ S')),
/// with the lowest bit of S pinned inside S' so each unordered split is seen
/// once. values[s] = m of the s-th subset (values[0] must be 0); returns the
/// whole table v. O(3^k) over k = log2(values.size()).
///
/// Serial reference implementation; kept alongside the OpenMP kernel and
/// compared against it in the tests and the benchmark.
template <typename T>
std::vector<T> variation_dp_serial(const std::vector<T>& values) {
    const std::size_t full = values.size();
    std::vector<T> v(full);
    v[0] = T{};
    for (std::uint64_t s = 1; s < full; ++s) {
        T best = values[s];
        const std::uint64_t low = s & (~s + 1);
        for (std::uint64_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
            if ((sub & low) == 0) continue;
            T cand = v[sub] + v[s ^ sub];
            best = max_of(best, cand);
        }
        v[s] = best;
    }
    return v;
}

/// Same recurrence, parallel over popcount layers: every mask in a layer
/// depends only on strictly smaller popcounts, so layers synchronize and
/// masks within a layer are independent. Produces bitwise-identical results
/// to the serial kernel.
template <typename T>
std::vector<T> variation_dp_parallel(const std::vector<T>& values) {
    const std::size_t full = values.size();
    const int k = std::bit_width(full) - 1;
    std::vector<T> v(full);
    v[0] = T{};
    std::vector<std::vector<std::uint64_t>> layers(static_cast<std::size_t>(k + 1));
    for (std::uint64_t s = 1; s < full; ++s) {
        layers[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    }
    for (int level = 1; level <= k; ++level) {
        const auto& layer = layers[static_cast<std::size_t>(level)];
        const std::int64_t count = static_cast<std::int64_t>(layer.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (std::int64_t i = 0; i < count; ++i) {
            const std::uint64_t s = layer[static_cast<std::size_t>(i)];
            T best = values[s];
            const std::uint64_t low = s & (~s + 1);
            for (std::uint64_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
                if ((sub & low) == 0) continue;
                T cand = v[sub] + v[s ^ sub];
                best = max_of(best, cand);
            }
            v[s] = best;
        }
    }
    return v;
}

/// m-values of every subset of E, indexed by masks compressed to E's bits.
std::vector<Scalar> subset_values(const Measure& m, const MSet& e);

/// Variation of the measure: supremum of sums over finite disjoint
/// families inside E. Exact DP on finite grounds; rule-derived on omega. Throws
/// UnsupportedFamily when no derivation exists.
ExtValue variation(const Measure& m, const MSet& e);

/// inf of variation over measurable supersets; on a power-set sigma-algebra
/// this equals variation itself.
ExtValue mtilde(const Measure& m, const MSet& a);

/// Atom test (finite grounds): m(A) > 0 and every B inside A has m(B) = 0 or
/// m(A \ B) = 0.
bool is_atom(const Measure& m, const MSet& a);

struct AeZeroResult {
    bool holds = false;
    MSet support;
    ExtValue mtilde_value;
};

/// Computes the support of f and decides whether f = 0 m-a.e.
AeZeroResult ae_zero_set(const FuncSpec& f, const Measure& m);

}  // namespace nonadd
