#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/ground.hpp"
#include "nonadd/upset.hpp"

namespace nonadd {

/// A measurable set on either ground model: a bit mask over {0..n-1} on
/// finite grounds, an ultimately periodic set on omega.
class MSet {
public:
    MSet() = default;

    static MSet finite(Ground g, std::uint64_t mask);
    static MSet omega(UPSet u);
    static MSet empty(Ground g);
    static MSet full(Ground g);
    static MSet single(Ground g, std::int64_t t);
    static MSet of_elements(Ground g, const std::vector<std::int64_t>& elems);

    const Ground& ground() const { return g_; }
    std::uint64_t mask() const { return mask_; }
    const UPSet& upset() const { return up_; }

    bool contains(std::int64_t t) const;
    bool is_empty() const;
    bool is_finite_set() const;
    std::optional<std::int64_t> cardinality() const;
    std::optional<std::int64_t> min_element() const;

    MSet complement() const;
    static MSet union_of(const MSet& a, const MSet& b);
    static MSet intersect(const MSet& a, const MSet& b);
    static MSet difference(const MSet& a, const MSet& b);
    bool subset_of(const MSet& other) const;
    bool disjoint_with(const MSet& other) const;

    std::vector<std::int64_t> elements_below(std::int64_t bound) const;

    bool operator==(const MSet&) const = default;

    std::string to_literal() const;

private:
    Ground g_ = Ground::omega();
    std::uint64_t mask_ = 0;  // Finite
    UPSet up_{};              // Omega
};

}  // namespace nonadd
