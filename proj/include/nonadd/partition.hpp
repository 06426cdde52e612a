#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/mset.hpp"

namespace nonadd {

/// A partition of the ground set: finitely many explicit blocks plus an
/// optional singleton tail (every element of D = T \ union(blocks) forms its
/// own block). Canonical form: blocks sorted by minimum element; when the
/// tail is on, explicit singletons are absorbed into it and a finite tail is
/// materialized back into explicit blocks. On finite grounds the tail is
/// always off.
class Partition {
public:
    static Partition trivial(Ground g);  // {T}
    static Partition all_singletons(Ground g);
    /// with_singleton_tail: remaining elements become singleton blocks.
    /// Without it, the explicit blocks must cover the ground.
    static Partition of_blocks(Ground g, std::vector<MSet> blocks, bool with_singleton_tail = false);

    const Ground& ground() const { return g_; }
    const std::vector<MSet>& blocks() const { return blocks_; }
    bool has_tail() const { return tail_; }
    const UPSet& tail_set() const { return tail_set_; }

    bool is_finite_partition() const { return !tail_; }
    /// Number of blocks; nullopt for countable partitions.
    std::optional<std::int64_t> block_count() const;

    MSet block_containing(std::int64_t t) const;

    std::string describe() const;
    bool operator==(const Partition&) const = default;

private:
    Partition() = default;
    void normalize();
    void validate() const;

    Ground g_ = Ground::omega();
    std::vector<MSet> blocks_;
    bool tail_ = false;
    UPSet tail_set_{};
};

/// A partition with one tag per explicit block; tail tags are forced (the
/// tag of {d} is d).
class TaggedPartition {
public:
    TaggedPartition(Partition p, std::vector<std::int64_t> tags);
    /// Tag policy: minimum element of every block.
    static TaggedPartition min_tags(Partition p);

    const Partition& partition() const { return p_; }
    const std::vector<std::int64_t>& tags() const { return tags_; }

private:
    Partition p_;
    std::vector<std::int64_t> tags_;
};

/// Refinement order: fine >= coarse iff every block of fine is contained
/// in some block of coarse.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// All nonempty pairwise intersections; least upper bound in the order.
Partition common_refinement(const Partition& p, const Partition& q);

/// One-block refinement moves.
struct SplitStrategy {
    enum class Kind { ByResidue, SplitOffFinite, IntoKInfinite };
    Kind kind = Kind::ByResidue;
    int k = 2;

    static SplitStrategy by_residue(int k) { return {Kind::ByResidue, k}; }
    static SplitStrategy split_off_finite(int j) { return {Kind::SplitOffFinite, j}; }
    static SplitStrategy into_k_infinite(int k) { return {Kind::IntoKInfinite, k}; }
};

/// Every result refines P by splitting exactly one block; throws NotApplicable
/// when no block admits the move. P must be a finite partition.
std::vector<Partition> split_moves(const Partition& p, SplitStrategy strategy);

/// Splits one infinite ultimately periodic set into k pairwise disjoint
/// infinite pieces (residue subclasses of one of its residue classes).
std::vector<UPSet> split_infinite_upset(const UPSet& s, int k);

/// Streams every set partition of a finite ground exactly once
/// (restricted-growth-string order); Bell(n) partitions in total.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(Ground g, std::optional<int> max_blocks = std::nullopt,
                                 int limit = 12);
    std::optional<Partition> next();

private:
    Ground g_;
    std::optional<int> max_blocks_;
    std::vector<int> rgs_;
    bool done_ = false;
    bool first_ = true;
    bool advance();
    Partition current() const;
};

}  // namespace nonadd
