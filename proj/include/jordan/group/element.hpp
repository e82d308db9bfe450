#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace jordan {

// Bijection of {0..n-1}, stored as its image array. Products compose as
// functions: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(std::size_t degree);
  // Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". An empty
  // string or "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  // Same permutation on a larger point set, shifted by `offset`.
  Permutation embedded(std::size_t offset, std::size_t new_degree) const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// Integer matrix acting on a tuple of residues; row-major, square.
using ActionMatrix = std::vector<std::vector<int>>;

// Linear action of a permutation group on a finite abelian group
// Z/m_1 x ... x Z/m_r, tabulated for every element of the acting group.
class ModuleAction {
 public:
  // Extends generator matrices to the whole acting group by closure; throws
  // InvalidSpec if the assignment is not a homomorphism.
  static std::shared_ptr<const ModuleAction> from_generators(
      std::vector<int> moduli, const std::vector<Permutation>& generators,
      const std::vector<ActionMatrix>& matrices);

  // Caller supplies the matrix for every acting element directly.
  static std::shared_ptr<const ModuleAction> from_table(
      std::vector<int> moduli,
      std::unordered_map<Permutation, ActionMatrix, PermutationHash> table);

  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::size_t acting_order() const { return table_.size(); }

  // q . v, reduced into canonical residues.
  std::vector<int> apply(const Permutation& q, const std::vector<int>& v) const;
  bool acts_on(const Permutation& q) const { return table_.contains(q); }

 private:
  std::vector<int> moduli_;
  std::unordered_map<Permutation, ActionMatrix, PermutationHash> table_;
};

// (v, q) with multiplication (v1, q1)(v2, q2) = (v1 + q1.v2, q1 q2).
class SemidirectPair {
 public:
  SemidirectPair(std::vector<int> v, Permutation q, std::shared_ptr<const ModuleAction> action);

  const std::vector<int>& vector_part() const { return v_; }
  const Permutation& acting_part() const { return q_; }
  const std::shared_ptr<const ModuleAction>& action() const { return action_; }

  SemidirectPair inverse() const;
  SemidirectPair identity_like() const;
  bool is_identity() const;
  std::string to_string() const;

  friend SemidirectPair operator*(const SemidirectPair& a, const SemidirectPair& b);
  friend bool operator==(const SemidirectPair& a, const SemidirectPair& b) {
    return a.v_ == b.v_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const SemidirectPair& a, const SemidirectPair& b) {
    if (auto c = a.v_ <=> b.v_; c != 0) return c;
    return a.q_ <=> b.q_;
  }

  std::size_t hash() const;

 private:
  std::vector<int> v_;
  Permutation q_;
  std::shared_ptr<const ModuleAction> action_;
};

enum class ElementKind { Permutation, SemidirectPair };

// Opaque group element: one of the two concrete kinds above.
class GroupElement {
 public:
  GroupElement(Permutation p) : value_(std::move(p)) {}  // NOLINT(implicit)
  GroupElement(SemidirectPair p) : value_(std::move(p)) {}  // NOLINT(implicit)

  ElementKind kind() const {
    return value_.index() == 0 ? ElementKind::Permutation : ElementKind::SemidirectPair;
  }
  const Permutation& as_permutation() const { return std::get<Permutation>(value_); }
  const SemidirectPair& as_pair() const { return std::get<SemidirectPair>(value_); }

  // Same kind and shape (degree, or residue moduli plus acting degree).
  bool compatible_with(const GroupElement& other) const;

  GroupElement inverse() const;
  GroupElement identity_like() const;
  bool is_identity() const;
  std::string to_string() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

  std::size_t hash() const;

 private:
  std::variant<Permutation, SemidirectPair> value_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

}  // namespace jordan
