#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "jordan/classify/subgroup_tag.hpp"
#include "jordan/numfield/field.hpp"

namespace jordan {

// A Jordan constant known exactly, or only bounded above.
struct Bound {
  enum class Kind { Exact, AtMost };
  Kind kind = Kind::Exact;
  std::uint64_t value = 1;

  static Bound exact(std::uint64_t n) { return {Kind::Exact, n}; }
  static Bound at_most(std::uint64_t n) { return {Kind::AtMost, n}; }
  bool is_exact() const { return kind == Kind::Exact; }
  std::string to_string() const;  // "= 360" or "<= 60"

  friend bool operator==(const Bound&, const Bound&) = default;
};

// Exact(m) for the largest exact m when no AtMost value exceeds it, otherwise
// AtMost(largest value). Associative, commutative, idempotent.
Bound bound_max(const Bound& a, const Bound& b);
Bound bound_max(std::initializer_list<Bound> bounds);

// bound_max(a, b) == a.
bool dominates(const Bound& a, const Bound& b);

// ---------------------------------------------------------------- PGL2

bool a5_in_pgl2(const FieldPredicates& p);
std::vector<SubgroupTypeTag> pgl2_possible_subgroups(const FieldPredicates& p);

// ---------------------------------------------------------------- conic bundles

// Bound on J(G) for G with a normal subgroup of `fiber` type and quotient of
// `base` type, both finite subgroups of PGL2 other than A5.
class ConicBoundTable {
 public:
  static ConicBoundTable standard();

  std::uint64_t at(SubgroupTypeTag fiber, SubgroupTypeTag base) const;  // throws UnsupportedPair
  void set(SubgroupTypeTag fiber, SubgroupTypeTag base, std::uint64_t value);

 private:
  std::array<std::array<std::uint64_t, 4>, 4> values_{};
};

std::uint64_t conic_bundle_bound(SubgroupTypeTag fiber, SubgroupTypeTag base,
                                 const ConicBoundTable& table = ConicBoundTable::standard());

Bound conic_bundle_cap(const FieldPredicates& p);

// ---------------------------------------------------------------- del Pezzo

Bound jordan_pgl3(const FieldPredicates& p);
Bound jordan_p1xp1(const FieldPredicates& p);
// Throws DegreeOutOfRange outside 1..9.
Bound dp_degree_bound(int degree, const FieldPredicates& p);
Bound j_dp(const FieldPredicates& p);

// ---------------------------------------------------------------- Cr2

struct TraceRecord {
  std::string statement;  // stable id, e.g. "pgl3_table"
  std::string quote;      // the rule applied, in formula form
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string conclusion;
};

struct Classification {
  std::uint64_t value = 0;  // one of 7200, 168, 120
  FieldPredicates predicates;
  Bound dp;
  Bound cap;
  std::vector<TraceRecord> trace;
};

// Throws std::invalid_argument for a predicate vector no field realizes.
Classification jordan_cr2(const FieldPredicates& p);
Classification jordan_cr2(const FieldDescriptor& k);

nlohmann::json trace_to_json(const std::vector<TraceRecord>& trace);
nlohmann::json predicates_to_json(const FieldPredicates& p);
nlohmann::json bound_to_json(const Bound& b);

}  // namespace jordan
