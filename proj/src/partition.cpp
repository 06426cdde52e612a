#include "nonadd/partition.hpp"

#include <algorithm>
#include <sstream>

namespace nonadd {

void Partition::normalize() {
    for (const auto& b : blocks_) {
        if (b.is_empty()) throw Error("partition: empty block");
    }
    if (tail_) {
        // Absorb explicit singletons into the tail, then recompute D.
        std::vector<MSet> keep;
        for (auto& b : blocks_) {
            auto c = b.cardinality();
            if (!(c && *c == 1)) keep.push_back(std::move(b));
        }
        blocks_ = std::move(keep);
        MSet u = MSet::empty(g_);
        for (const auto& b : blocks_) u = MSet::union_of(u, b);
        MSet d = u.complement();
        if (d.is_empty()) {
            tail_ = false;
            tail_set_ = UPSet::empty_set();
        } else if (d.is_finite_set()) {
            // Finite tail: materialize its singletons as explicit blocks.
            std::int64_t bound = g_.is_finite() ? g_.size : d.upset().prefix_len();
            for (auto t : d.elements_below(bound)) blocks_.push_back(MSet::single(g_, t));
            tail_ = false;
            tail_set_ = UPSet::empty_set();
        } else {
            tail_set_ = d.upset();
        }
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const MSet& a, const MSet& b) {
        return a.min_element().value() < b.min_element().value();
    });
}

void Partition::validate() const {
    MSet u = MSet::empty(g_);
    for (const auto& b : blocks_) {
        if (b.is_empty()) throw Error("partition: empty block");
        if (!u.disjoint_with(b)) throw Error("partition: blocks overlap");
        u = MSet::union_of(u, b);
    }
    if (!tail_ && !u.complement().is_empty()) {
        throw Error("partition: blocks do not cover the ground");
    }
    if (g_.is_finite() && tail_) throw Error("partition: no tail on finite grounds");
}

Partition Partition::trivial(Ground g) {
    Partition p;
    p.g_ = g;
    p.blocks_ = {MSet::full(g)};
    p.normalize();
    p.validate();
    return p;
}

Partition Partition::all_singletons(Ground g) {
    Partition p;
    p.g_ = g;
    if (g.is_finite()) {
        for (std::int64_t t = 0; t < g.size; ++t) p.blocks_.push_back(MSet::single(g, t));
    } else {
        p.tail_ = true;
        p.tail_set_ = UPSet::all();
    }
    p.normalize();
    p.validate();
    return p;
}

Partition Partition::of_blocks(Ground g, std::vector<MSet> blocks, bool with_singleton_tail) {
    Partition p;
    p.g_ = g;
    for (const auto& b : blocks) require_same_ground(g, b.ground(), "partition block");
    p.blocks_ = std::move(blocks);
    if (with_singleton_tail && g.is_finite()) {
        // Finite grounds carry no tail: materialize the leftovers directly.
        MSet u = MSet::empty(g);
        for (const auto& b : p.blocks_) u = MSet::union_of(u, b);
        for (auto t : u.complement().elements_below(g.size)) {
            p.blocks_.push_back(MSet::single(g, t));
        }
    } else {
        p.tail_ = with_singleton_tail;
    }
    p.normalize();
    p.validate();
    return p;
}

std::optional<std::int64_t> Partition::block_count() const {
    if (tail_) return std::nullopt;
    return static_cast<std::int64_t>(blocks_.size());
}

MSet Partition::block_containing(std::int64_t t) const {
    for (const auto& b : blocks_) {
        if (b.contains(t)) return b;
    }
    if (tail_ && tail_set_.contains(t)) return MSet::single(g_, t);
    throw Error("partition: element not covered");
}

std::string Partition::describe() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << " | ";
        os << blocks_[i].to_literal();
    }
    if (tail_) {
        if (!blocks_.empty()) os << " | ";
        os << "singletons(" << tail_set_.to_literal() << ")";
    }
    os << "}";
    return os.str();
}

TaggedPartition::TaggedPartition(Partition p, std::vector<std::int64_t> tags)
    : p_(std::move(p)), tags_(std::move(tags)) {
    if (tags_.size() != p_.blocks().size()) throw Error("tagged partition: one tag per block");
    for (std::size_t i = 0; i < tags_.size(); ++i) {
        if (!p_.blocks()[i].contains(tags_[i])) throw Error("tagged partition: tag outside block");
    }
}

TaggedPartition TaggedPartition::min_tags(Partition p) {
    std::vector<std::int64_t> tags;
    tags.reserve(p.blocks().size());
    for (const auto& b : p.blocks()) tags.push_back(*b.min_element());
    return TaggedPartition(std::move(p), std::move(tags));
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
    require_same_ground(fine.ground(), coarse.ground(), "is_refinement");
    // Tail singletons of `fine` sit inside whatever coarse block holds them.
    for (const auto& a : fine.blocks()) {
        bool placed = false;
        for (const auto& b : coarse.blocks()) {
            if (a.subset_of(b)) {
                placed = true;
                break;
            }
        }
        if (!placed && coarse.has_tail()) {
            auto c = a.cardinality();
            if (c && *c == 1 && coarse.tail_set().contains(*a.min_element())) placed = true;
        }
        if (!placed) return false;
    }
    return true;
}

Partition common_refinement(const Partition& p, const Partition& q) {
    require_same_ground(p.ground(), q.ground(), "common_refinement");
    std::vector<MSet> blocks;
    for (const auto& a : p.blocks()) {
        for (const auto& b : q.blocks()) {
            MSet c = MSet::intersect(a, b);
            if (!c.is_empty()) blocks.push_back(std::move(c));
        }
    }
    bool tail = p.has_tail() || q.has_tail();
    if (tail) {
        // Remaining elements (D_p union D_q) become singletons.
        return Partition::of_blocks(p.ground(), std::move(blocks), true);
    }
    return Partition::of_blocks(p.ground(), std::move(blocks), false);
}

std::vector<UPSet> split_infinite_upset(const UPSet& s, int k) {
    if (k < 2) throw Error("split: k must be >= 2");
    if (!s.is_infinite()) throw NotApplicable("split: set is finite");
    // Pick one infinite residue class inside s and fan it out mod k*p; the
    // first subclass stays with the remainder of s.
    std::int64_t p = s.period();
    std::int64_t rho = s.residues().front();
    std::vector<UPSet> parts;
    UPSet rest = s;
    for (int j = 1; j < k; ++j) {
        UPSet piece = UPSet::intersect(
            s, UPSet::residue_class((rho + static_cast<std::int64_t>(j) * p) % (p * k), p * k));
        piece = UPSet::difference(piece, UPSet::range(0, s.prefix_len()));
        parts.push_back(piece);
        rest = UPSet::difference(rest, piece);
    }
    parts.insert(parts.begin(), rest);
    return parts;
}

std::vector<Partition> split_moves(const Partition& p, SplitStrategy strategy) {
    if (!p.is_finite_partition()) throw NotApplicable("split_moves: partition must be finite");
    std::vector<Partition> out;
    const auto& blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<MSet> parts;
        const MSet& b = blocks[i];
        switch (strategy.kind) {
            case SplitStrategy::Kind::ByResidue: {
                if (strategy.k < 2) throw Error("split_moves: k must be >= 2");
                if (p.ground().is_finite()) {
                    std::vector<std::vector<std::int64_t>> classes(
                        static_cast<std::size_t>(strategy.k));
                    for (auto t : b.elements_below(p.ground().size)) {
                        classes[static_cast<std::size_t>(t % strategy.k)].push_back(t);
                    }
                    for (const auto& c : classes) {
                        if (!c.empty()) parts.push_back(MSet::of_elements(p.ground(), c));
                    }
                } else {
                    std::int64_t pp = b.upset().period() * strategy.k;
                    for (std::int64_t r = 0; r < pp; ++r) {
                        MSet piece = MSet::intersect(
                            b, MSet::omega(UPSet::residue_class(r, pp)));
                        if (!piece.is_empty()) parts.push_back(std::move(piece));
                    }
                }
                break;
            }
            case SplitStrategy::Kind::SplitOffFinite: {
                if (strategy.k < 1) throw Error("split_moves: j must be >= 1");
                auto card = b.cardinality();
                if (card && *card <= strategy.k) break;  // rest would be empty
                std::int64_t bound;
                if (p.ground().is_finite()) {
                    bound = p.ground().size;
                } else {
                    bound = b.upset().prefix_len() + b.upset().period() * (strategy.k + 1);
                }
                auto elems = b.elements_below(bound);
                if (static_cast<int>(elems.size()) < strategy.k) break;
                elems.resize(static_cast<std::size_t>(strategy.k));
                MSet head = MSet::of_elements(p.ground(), elems);
                MSet rest = MSet::difference(b, head);
                if (rest.is_empty()) break;
                parts = {head, rest};
                break;
            }
            case SplitStrategy::Kind::IntoKInfinite: {
                if (p.ground().is_finite() || !b.upset().is_infinite()) break;
                for (auto& u : split_infinite_upset(b.upset(), strategy.k)) {
                    parts.push_back(MSet::omega(std::move(u)));
                }
                break;
            }
        }
        if (parts.size() < 2) continue;
        std::vector<MSet> blocks2;
        blocks2.reserve(blocks.size() + parts.size() - 1);
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (j == i) continue;
            blocks2.push_back(blocks[j]);
        }
        for (auto& q : parts) blocks2.push_back(std::move(q));
        out.push_back(Partition::of_blocks(p.ground(), std::move(blocks2), false));
    }
    if (out.empty()) throw NotApplicable("split_moves: no block admits the move");
    return out;
}

PartitionEnumerator::PartitionEnumerator(Ground g, std::optional<int> max_blocks, int limit)
    : g_(g), max_blocks_(max_blocks) {
    if (!g.is_finite()) throw UnsupportedGround("enumerate_partitions: finite grounds only");
    if (g.size > limit) throw LimitExceeded("enumerate_partitions: ground exceeds limit");
    rgs_.assign(static_cast<std::size_t>(g.size), 0);
}

Partition PartitionEnumerator::current() const {
    int k = 1 + *std::max_element(rgs_.begin(), rgs_.end());
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(k), 0);
    for (std::size_t t = 0; t < rgs_.size(); ++t) {
        masks[static_cast<std::size_t>(rgs_[t])] |= 1ULL << t;
    }
    std::vector<MSet> blocks;
    blocks.reserve(masks.size());
    for (auto m : masks) blocks.push_back(MSet::finite(g_, m));
    return Partition::of_blocks(g_, std::move(blocks), false);
}

bool PartitionEnumerator::advance() {
    // Next restricted growth string: rightmost position that can grow.
    int n = static_cast<int>(rgs_.size());
    for (int i = n - 1; i >= 1; --i) {
        int prefix_max = *std::max_element(rgs_.begin(), rgs_.begin() + i);
        if (rgs_[static_cast<std::size_t>(i)] <= prefix_max) {
            ++rgs_[static_cast<std::size_t>(i)];
            std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
            return true;
        }
    }
    return false;
}

std::optional<Partition> PartitionEnumerator::next() {
    while (!done_) {
        if (!first_) {
            if (!advance()) {
                done_ = true;
                break;
            }
        }
        first_ = false;
        int k = 1 + *std::max_element(rgs_.begin(), rgs_.end());
        if (!max_blocks_ || k <= *max_blocks_) return current();
    }
    return std::nullopt;
}

}  // namespace nonadd
