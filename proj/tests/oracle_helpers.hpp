#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: Bell numbers by recursion, brute-force partition optima, and
// geometric series partial sums with explicit tail bounds.

#include <cstdint>
#include <functional>
#include <vector>

#include "nonadd/rational.hpp"

namespace oracle {

inline std::uint64_t bell_number(int n) {
    // B(n+1) = sum C(n,k) B(k)
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j) {
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    std::vector<std::uint64_t> b = {1};
    for (int i = 0; i < n; ++i) {
        std::uint64_t next = 0;
        for (int k = 0; k <= i; ++k) {
            next += c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    b[static_cast<std::size_t>(k)];
        }
        b.push_back(next);
    }
    return b[static_cast<std::size_t>(n)];
}

/// Enumerates every partition of the bit set `mask` and reports the best
/// sum of m over blocks (recursive, no memoization: an independent oracle).
inline nonadd::Rat brute_force_variation(std::uint64_t mask,
                                         const std::function<nonadd::Rat(std::uint64_t)>& m) {
    if (mask == 0) return nonadd::Rat(0);
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t rest = mask ^ low;
    nonadd::Rat best = m(mask);
    // The block containing `low` ranges over low | (subset of rest).
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        std::uint64_t block = low | sub;
        if (block != mask) {
            nonadd::Rat cand = m(block) + brute_force_variation(mask ^ block, m);
            if (cand > best) best = cand;
        }
        if (sub == 0) break;
    }
    return best;
}

/// Supremum of sum of m over arbitrary pairwise disjoint nonempty families
/// inside `mask` (not required to cover); used to confirm the partition
/// optimum coincides with the family optimum for non-negative measures.
inline nonadd::Rat brute_force_family_sup(std::uint64_t mask,
                                          const std::function<nonadd::Rat(std::uint64_t)>& m) {
    if (mask == 0) return nonadd::Rat(0);
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t rest = mask ^ low;
    // Either `low` is uncovered, or its block is low | (subset of rest).
    nonadd::Rat best = brute_force_family_sup(rest, m);
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        nonadd::Rat cand = m(low | sub) + brute_force_family_sup(rest & ~sub, m);
        if (cand > best) best = cand;
        if (sub == 0) break;
    }
    return best;
}

struct GeomPartial {
    long double sum = 0.0L;
    long double tail_bound = 0.0L;
};

/// Partial sum of c*r^t over t in [0, cutoff) intersected with a residue
/// class (or all naturals when p == 1), plus a geometric tail bound.
inline GeomPartial geometric_partial(long double c, long double r, std::int64_t cutoff,
                                     std::int64_t residue = 0, std::int64_t p = 1) {
    GeomPartial g;
    long double term = 1.0L;
    for (std::int64_t t = 0; t < cutoff; ++t) {
        if (t % p == residue) g.sum += c * term;
        term *= r;
    }
    g.tail_bound = c * term / (1.0L - r);
    return g;
}

struct XorShift {
    std::uint64_t s;
    explicit XorShift(std::uint64_t seed) : s(seed ? seed : 0x2545F4914F6CDD1DULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace oracle
