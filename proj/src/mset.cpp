#include "nonadd/mset.hpp"

#include <bit>
#include <sstream>

namespace nonadd {

MSet MSet::finite(Ground g, std::uint64_t mask) {
    if (!g.is_finite()) throw GroundMismatch("mset: mask form requires finite ground");
    MSet s;
    s.g_ = g;
    s.mask_ = mask & ((g.size >= 64 ? ~0ULL : (1ULL << g.size) - 1ULL));
    return s;
}

MSet MSet::omega(UPSet u) {
    MSet s;
    s.g_ = Ground::omega();
    s.up_ = std::move(u);
    return s;
}

MSet MSet::empty(Ground g) {
    return g.is_finite() ? finite(g, 0) : omega(UPSet::empty_set());
}

MSet MSet::full(Ground g) {
    return g.is_finite() ? finite(g, (1ULL << g.size) - 1ULL) : omega(UPSet::all());
}

MSet MSet::single(Ground g, std::int64_t t) {
    if (g.is_finite()) {
        if (t < 0 || t >= g.size) throw Error("mset: element outside finite ground");
        return finite(g, 1ULL << t);
    }
    return omega(UPSet::singleton(t));
}

MSet MSet::of_elements(Ground g, const std::vector<std::int64_t>& elems) {
    if (g.is_finite()) {
        std::uint64_t m = 0;
        for (auto e : elems) {
            if (e < 0 || e >= g.size) throw Error("mset: element outside finite ground");
            m |= 1ULL << e;
        }
        return finite(g, m);
    }
    return omega(UPSet::finite_set(elems));
}

bool MSet::contains(std::int64_t t) const {
    if (g_.is_finite()) return t >= 0 && t < g_.size && ((mask_ >> t) & 1ULL) != 0;
    return up_.contains(t);
}

bool MSet::is_empty() const { return g_.is_finite() ? mask_ == 0 : up_.is_empty(); }

bool MSet::is_finite_set() const { return g_.is_finite() || up_.is_finite(); }

std::optional<std::int64_t> MSet::cardinality() const {
    if (g_.is_finite()) return static_cast<std::int64_t>(std::popcount(mask_));
    return up_.cardinality();
}

std::optional<std::int64_t> MSet::min_element() const {
    if (g_.is_finite()) {
        if (mask_ == 0) return std::nullopt;
        return std::countr_zero(mask_);
    }
    return up_.min_element();
}

MSet MSet::complement() const {
    if (g_.is_finite()) return finite(g_, ~mask_);
    return omega(up_.complement());
}

MSet MSet::union_of(const MSet& a, const MSet& b) {
    require_same_ground(a.g_, b.g_, "mset union");
    if (a.g_.is_finite()) return finite(a.g_, a.mask_ | b.mask_);
    return omega(UPSet::union_of(a.up_, b.up_));
}

MSet MSet::intersect(const MSet& a, const MSet& b) {
    require_same_ground(a.g_, b.g_, "mset intersect");
    if (a.g_.is_finite()) return finite(a.g_, a.mask_ & b.mask_);
    return omega(UPSet::intersect(a.up_, b.up_));
}

MSet MSet::difference(const MSet& a, const MSet& b) {
    require_same_ground(a.g_, b.g_, "mset difference");
    if (a.g_.is_finite()) return finite(a.g_, a.mask_ & ~b.mask_);
    return omega(UPSet::difference(a.up_, b.up_));
}

bool MSet::subset_of(const MSet& other) const {
    require_same_ground(g_, other.g_, "mset subset");
    if (g_.is_finite()) return (mask_ & ~other.mask_) == 0;
    return up_.subset_of(other.up_);
}

bool MSet::disjoint_with(const MSet& other) const {
    require_same_ground(g_, other.g_, "mset disjoint");
    if (g_.is_finite()) return (mask_ & other.mask_) == 0;
    return up_.disjoint_with(other.up_);
}

std::vector<std::int64_t> MSet::elements_below(std::int64_t bound) const {
    if (!g_.is_finite()) return up_.elements_below(bound);
    std::vector<std::int64_t> out;
    for (std::int64_t t = 0; t < std::min<std::int64_t>(bound, g_.size); ++t) {
        if (contains(t)) out.push_back(t);
    }
    return out;
}

std::string MSet::to_literal() const {
    if (!g_.is_finite()) return up_.to_literal();
    if (mask_ == MSet::full(g_).mask_) return "all";
    std::ostringstream os;
    os << "finite:[";
    bool first = true;
    for (auto e : elements_below(g_.size)) {
        if (!first) os << ",";
        os << e;
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace nonadd
