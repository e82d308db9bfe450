#pragma once

#include <cstddef>
#include <vector>

#include "jordan/group/subgroup.hpp"

namespace jordan {

inline constexpr std::size_t kAutOrderLimit = 48;
inline constexpr std::size_t kAutGeneratorLimit = 3;

// Automorphism as the image of every element index.
struct GroupAutomorphism {
  std::vector<ElemIndex> image;
  ElemIndex operator()(ElemIndex x) const { return image[x]; }
};

// Smallest generating set of size <= kAutGeneratorLimit, scanning subsets in
// index order; empty if there is none.
std::vector<ElemIndex> small_generating_set(const GroupPtr& g);

// All automorphisms of G by searching order-preserving images of a small
// generating set, each validated as a bijective homomorphism. Throws
// AutScopeExceeded when |G| > 48 or no generating set of size <= 3 exists.
std::vector<GroupAutomorphism> automorphism_group_small(const GroupPtr& g);

bool is_characteristic(const Subgroup& h, const std::vector<GroupAutomorphism>& automorphisms);
bool is_characteristic(const Subgroup& h);

struct WeakJordanRow {
  Subgroup abelian;          // A
  std::size_t best_index;    // smallest [G:N] over characteristic abelian N
  bool holds;                // best_index <= [G:A]^2
};

struct WeakJordanReport {
  bool holds = true;
  std::size_t best_characteristic_index = 0;
  std::vector<WeakJordanRow> rows;
};

// For every abelian subgroup A, a characteristic abelian N with
// [G:N] <= [G:A]^2 exists. Scope errors propagate.
WeakJordanReport weak_jordan_report(const GroupPtr& g);
bool verify_weak_jordan(const GroupPtr& g);

}  // namespace jordan
