#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "jordan/group/element.hpp"

namespace jordan {

inline constexpr std::size_t kDefaultElementCap = 100'000;

// Index of an element inside its parent group's canonical element list.
using ElemIndex = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by generators, with its element set enumerated by
// closure. Elements are stored in canonical (sorted) order, so indices are
// deterministic. Immutable after construction.
class FiniteGroup {
 public:
  // Throws CapExceeded when the closure passes `cap` and KindMismatch when
  // generators differ in kind or shape.
  static GroupPtr closure(std::vector<GroupElement> generators,
                          std::size_t cap = kDefaultElementCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t element_cap() const { return cap_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::span<const ElemIndex> generator_indices() const { return generator_indices_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(ElemIndex i) const { return elements_[i]; }
  ElementKind kind() const { return elements_.front().kind(); }

  ElemIndex identity() const { return identity_; }
  ElemIndex inverse(ElemIndex i) const { return inverse_[i]; }
  ElemIndex product(ElemIndex a, ElemIndex b) const;
  // g_k * x * g_k^-1 for the k-th generator.
  ElemIndex conjugate_by_generator(std::size_t k, ElemIndex x) const { return conj_[k][x]; }
  // g * x * g^-1 for an arbitrary element g.
  ElemIndex conjugate(ElemIndex g, ElemIndex x) const {
    return product(product(g, x), inverse_[g]);
  }
  bool commute(ElemIndex a, ElemIndex b) const { return product(a, b) == product(b, a); }
  std::size_t element_order(ElemIndex i) const { return orders_[i]; }

  // Throws std::out_of_range when `g` is not in the group.
  ElemIndex index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_.contains(g); }

  // Conjugacy class representatives (smallest index in each class), ascending.
  const std::vector<ElemIndex>& class_representatives() const { return class_reps_; }
  std::size_t class_size(ElemIndex rep) const;

 private:
  FiniteGroup() = default;
  void build_tables();

  std::vector<GroupElement> generators_;
  std::vector<ElemIndex> generator_indices_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, ElemIndex, GroupElementHash> index_;
  std::size_t cap_ = kDefaultElementCap;
  ElemIndex identity_ = 0;
  std::vector<ElemIndex> inverse_;
  std::vector<std::vector<ElemIndex>> conj_;
  std::vector<std::size_t> orders_;
  std::vector<ElemIndex> class_reps_;
  std::vector<ElemIndex> class_of_;
  std::vector<std::size_t> class_sizes_;
  // Full Cayley table for small groups (row-major), empty otherwise.
  std::vector<std::uint16_t> table_;
};

}  // namespace jordan
