#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jordan/group/subgroup.hpp"

namespace jordan {

struct CertificateChecks {
  bool witness_is_abelian = false;
  bool witness_is_normal = false;
  bool index_equals_constant = false;
  bool search_was_exhaustive = false;

  bool all() const {
    return witness_is_abelian && witness_is_normal && index_equals_constant &&
           search_was_exhaustive;
  }
  friend bool operator==(const CertificateChecks&, const CertificateChecks&) = default;
};

// J(G) together with a normal abelian subgroup of index J(G).
struct JordanCertificate {
  std::size_t group_order = 0;
  std::size_t constant = 0;
  Subgroup witness;
  CertificateChecks checks;
};

// Normal closure of g when it is abelian; nullopt as soon as two of its
// generators fail to commute.
std::optional<Subgroup> abelian_normal_closure(const GroupPtr& g, ElemIndex x);

// All normal abelian subgroups of G, in canonical order (by order, then member
// list). Joins of abelian normal closures ("atoms"), breadth first, discarding
// non-abelian joins. Every normal abelian N is the join of the atoms of its
// elements, and every intermediate join inside N is abelian, so the search is
// complete.
std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& g);

// All normal subgroups of G by the same join search without the abelian
// pruning.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// Minimal index over normal abelian subgroups. Ties go to the larger witness,
// then to the lexicographically smaller member list.
JordanCertificate jordan_constant(const GroupPtr& g);

// Re-checks a certificate from scratch: abelian, normal, index arithmetic.
// Minimality is not re-derived.
CertificateChecks recheck_certificate(const JordanCertificate& cert);

}  // namespace jordan
