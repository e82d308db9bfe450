#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "jordan/group/finite_group.hpp"

namespace jordan {

// Subgroup of a parent group, stored as a sorted list of parent indices plus a
// membership bitset. Immutable after construction.
class Subgroup {
 public:
  // Closure of `generators` inside `parent`.
  static Subgroup generated_by(GroupPtr parent, std::vector<ElemIndex> generators);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  std::span<const ElemIndex> members() const { return members_; }
  std::span<const ElemIndex> generators() const { return generators_; }
  bool contains(ElemIndex i) const { return (bits_[i >> 6] >> (i & 63)) & 1U; }
  bool is_subset_of(const Subgroup& other) const;

  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> generator_elements() const;

  // Same subgroup with a deterministic small generating set: scan members in
  // index order, keeping each one not already generated.
  Subgroup with_greedy_generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }
  // Canonical order: by order, then by member list.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
    return a.members_ <=> b.members_;
  }

  std::size_t hash() const;

 private:
  Subgroup(GroupPtr parent, std::vector<ElemIndex> members, std::vector<ElemIndex> generators);

  GroupPtr parent_;
  std::vector<ElemIndex> members_;
  std::vector<ElemIndex> generators_;
  std::vector<std::uint64_t> bits_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return s.hash(); }
};

// Subgroup generated by the union of two subgroups of one parent.
Subgroup join(const Subgroup& a, const Subgroup& b);

// Smallest normal subgroup containing `g`.
Subgroup normal_closure(GroupPtr group, ElemIndex g);

// Pairwise commuting generators.
bool is_abelian(const Subgroup& h);
bool is_abelian(const GroupPtr& g);
// Every member commutes with every generator; used to re-verify certificates.
bool is_abelian_full(const Subgroup& h);

// Conjugation by each parent generator maps the generators of `h` into `h`.
bool is_normal(const Subgroup& h);
// Every member conjugated by every parent generator stays in `h`.
bool is_normal_full(const Subgroup& h);

Subgroup center(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, const Subgroup& h);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup derived_subgroup(const Subgroup& h);

// Subgroup as a group in its own right (its elements re-enumerated).
GroupPtr as_group(const Subgroup& h);

// Permutation action of G on the right cosets of a normal subgroup N; the
// image is isomorphic to G/N.
GroupPtr quotient(const Subgroup& normal);

// Invariant factors d_1 | d_2 | ... of an abelian group; empty for the
// trivial group.
std::vector<std::size_t> abelian_invariants(const Subgroup& abelian);

}  // namespace jordan
