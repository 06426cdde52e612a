#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nonadd/errors.hpp"

namespace nonadd {

/// Ultimately periodic subset of the naturals: explicit membership bits for
/// 0..N-1, then membership of n >= N decided by n mod p against a residue set.
/// Instances are canonical (minimal period, then minimal prefix), so syntactic
/// equality coincides with set equality.
class UPSet {
public:
    UPSet() : period_(1), residues_(1, false) {}  // empty set

    /// Canonicalizing constructor; residues.size() is the period (>= 1).
    UPSet(std::vector<bool> prefix, std::vector<bool> residues);

    static UPSet make(const std::vector<bool>& prefix_bits, std::int64_t period,
                      std::span<const std::int64_t> residue_set);

    static UPSet empty_set() { return UPSet(); }
    static UPSet all();
    static UPSet evens();
    static UPSet odds();
    static UPSet singleton(std::int64_t n);
    static UPSet finite_set(std::span<const std::int64_t> elems);
    static UPSet range(std::int64_t lo, std::int64_t hi);  // [lo, hi)
    static UPSet tail(std::int64_t lo);                    // [lo, inf)
    static UPSet residue_class(std::int64_t r, std::int64_t p);

    bool contains(std::int64_t n) const;
    bool is_empty() const { return prefix_none() && residues_none(); }
    bool is_finite() const { return residues_none(); }
    bool is_infinite() const { return !is_finite(); }

    std::optional<std::int64_t> cardinality() const;
    std::optional<std::int64_t> min_element() const;

    std::int64_t prefix_len() const { return static_cast<std::int64_t>(prefix_.size()); }
    std::int64_t period() const { return period_; }
    const std::vector<bool>& prefix_bits() const { return prefix_; }
    const std::vector<bool>& residue_bits() const { return residues_; }
    std::vector<std::int64_t> residues() const;

    UPSet complement() const;
    static UPSet union_of(const UPSet& a, const UPSet& b);
    static UPSet intersect(const UPSet& a, const UPSet& b);
    static UPSet difference(const UPSet& a, const UPSet& b);

    bool subset_of(const UPSet& other) const;
    bool disjoint_with(const UPSet& other) const;

    std::vector<std::int64_t> elements_below(std::int64_t bound) const;
    std::int64_t count_below(std::int64_t bound) const;

    bool operator==(const UPSet&) const = default;

    /// Literal of the form "upset:N=..;prefix=..;p=..;R={..}" (with sugar for
    /// all/empty/evens/odds/finite sets).
    std::string to_literal() const;

private:
    void canonicalize();
    bool prefix_none() const;
    bool residues_none() const;

    std::vector<bool> prefix_;    // size N
    std::int64_t period_;         // p >= 1
    std::vector<bool> residues_;  // size p, membership of n >= N via n % p
};

}  // namespace nonadd
