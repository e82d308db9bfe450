#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jordan/classify/subgroup_tag.hpp"
#include "jordan/group/element.hpp"
#include "jordan/group/finite_group.hpp"
#include "jordan/group/subgroup.hpp"

namespace jordan {

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

namespace spec {

struct Cyclic { std::size_t n; };
// Order 2n; requires n >= 2.
struct Dihedral { std::size_t n; };
struct Symmetric { std::size_t n; };
struct Alternating { std::size_t n; };
struct Klein {};
struct DirectProduct { SpecPtr left, right; };
// (Z/m_1 x ... x Z/m_r) semidirect an acting permutation group; one matrix
// per generator of the realized acting group.
struct Semidirect {
  std::vector<int> moduli;
  SpecPtr acting;
  std::vector<ActionMatrix> matrices;
};
struct WreathTwo { SpecPtr base; };

enum class NamedGroup { PSL2F7, SL25, WD5, FermatCubic648, A5wr2, Q8, SL23 };
struct Named { NamedGroup which; };

}  // namespace spec

struct GroupSpec {
  std::variant<spec::Cyclic, spec::Dihedral, spec::Symmetric, spec::Alternating, spec::Klein,
               spec::DirectProduct, spec::Semidirect, spec::WreathTwo, spec::Named>
      value;
};

SpecPtr cyclic(std::size_t n);
SpecPtr dihedral(std::size_t order);  // D<2n>, takes the order 2n
SpecPtr symmetric(std::size_t n);
SpecPtr alternating(std::size_t n);
SpecPtr klein();
SpecPtr direct_product(SpecPtr a, SpecPtr b);
SpecPtr semidirect(std::vector<int> moduli, SpecPtr acting, std::vector<ActionMatrix> matrices);
SpecPtr wreath_two(SpecPtr base);
SpecPtr named(spec::NamedGroup which);

// CLI grammar: C<n>, D<2n>, S<n>, A<n>, Klein, PSL2F7, SL25, WD5, Fermat648,
// A5wr2, Q8, SL23, <atom>wr2, and products joined by 'x' (e.g. S4xC5).
// Throws ParseError with the offending column.
SpecPtr parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& s);

// Order predicted from the constructor tag alone, without closure.
std::size_t symbolic_order(const GroupSpec& s);

// Builds the group described by s. Throws InvalidSpec for bad parameters and CapExceeded
// when the symbolic order or the closure passes `cap`.
GroupPtr build(const GroupSpec& s, std::size_t cap = kDefaultElementCap);
inline GroupPtr build(const SpecPtr& s, std::size_t cap = kDefaultElementCap) {
  return build(*s, cap);
}

// ---------------------------------------------------------------- extensions

enum class NormalKind { Alternating, Symmetric };

enum class ExtensionVerdict { DirectProduct, ContainsNormalAnTimesZk, Inconclusive };

struct ExtensionReport {
  GroupPtr group;
  NormalKind normal_kind = NormalKind::Alternating;
  std::size_t n = 0;
  std::optional<Subgroup> normal;               // the detected A_n or S_n
  std::vector<std::size_t> quotient_invariants;  // of G / normal
  ExtensionVerdict verdict = ExtensionVerdict::Inconclusive;
  std::size_t k = 0;                            // for ContainsNormalAnTimesZk
  // DirectProduct: a complement centralizing `normal`.
  // ContainsNormalAnTimesZk: the normal subgroup A_n x Z/k.
  std::optional<Subgroup> evidence;
};

// Looks for a normal S_n (n = 4, 5) with nontrivial abelian quotient, else a
// normal A_n with cyclic quotient, recognized by order and derived-series
// orders. Throws NoSuitableNormalSubgroup when neither exists.
ExtensionReport check_extension_structure(const GroupPtr& g);

// Independent re-check of the evidence in a report.
bool verify_extension_report(const ExtensionReport& r);

// ---------------------------------------------------------------- corpus

struct ConicBundleInstance {
  std::string label;
  GroupPtr group;
  SubgroupTypeTag fiber;
  SubgroupTypeTag base;
  Subgroup fiber_subgroup;  // designated normal subgroup of fiber type
};

// Fixed corpus of groups with a normal subgroup of fiber type and quotient of
// base type: split products fiber x base, plus S4 as A4 by Z/2.
std::vector<ConicBundleInstance> conic_bundle_instances();

// Spec strings of catalog groups of order at most 200, used for cross-checks
// against the exhaustive subgroup oracle.
std::vector<std::string> small_catalog_specs();

}  // namespace jordan
