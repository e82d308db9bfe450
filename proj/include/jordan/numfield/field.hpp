#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jordan {

enum class FieldKind { Rationals, Multiquadratic, RealClosed, AlgebraicallyClosed };

// Q, R, C, or Q(sqrt(d_1), ..., sqrt(d_k)).
//
// Multiquadratic generators are squarefree, independent modulo squares and
// sorted ascending. A multiquadratic descriptor whose generators all reduce
// away becomes Rationals.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::vector<std::int64_t> generators;
  // Normalization notes (dropped or rewritten radicands). Not part of identity.
  std::vector<std::string> warnings;

  static FieldDescriptor rationals();
  static FieldDescriptor real_closed();
  static FieldDescriptor algebraically_closed();
  // Reduces each radicand to its squarefree part, drops 1 and anything
  // already generated by earlier (smaller) radicands. Throws ZeroInput.
  static FieldDescriptor multiquadratic(const std::vector<std::int64_t>& radicands);

  // Rationals count as the multiquadratic field with no generators.
  bool is_exact() const { return kind == FieldKind::Rationals || kind == FieldKind::Multiquadratic; }
  std::size_t rank() const { return generators.size(); }

  std::string to_string() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind == b.kind && a.generators == b.generators;
  }
};

// Grammar: Q | R | C | Q( term (, term)* ) with term := sqrt(<nonzero int>)
// | i | omega | w. Whitespace is ignored. Throws ParseError (column into the
// original text) or UnsupportedField for recognizably out-of-scope fields
// such as finite fields, p-adics or function fields.
FieldDescriptor parse_field(std::string_view text);

// n with its largest square divisor removed, sign kept. Throws ZeroInput.
std::int64_t squarefree_part(std::int64_t n);

// Whether sqrt(m) lies in K. Throws ZeroInput.
bool contains_sqrt(const FieldDescriptor& k, std::int64_t m);

// Subset of generator indices whose product equals m up to a rational square,
// as a bitmask; only meaningful when contains_sqrt holds for an exact field.
std::uint32_t sqrt_subset(const FieldDescriptor& k, std::int64_t m);

bool is_formally_real(const FieldDescriptor& k);

// Class of a nonzero rational integer in Q_2^x / (Q_2^x)^2.
struct TwoAdicClass {
  int e = 0;  // parity of the 2-adic valuation
  int u = 1;  // odd part mod 8

  bool is_square() const { return e == 0 && u == 1; }
  TwoAdicClass operator*(const TwoAdicClass& o) const { return {(e + o.e) % 2, (u * o.u) % 8}; }
  friend bool operator==(const TwoAdicClass&, const TwoAdicClass&) = default;
  std::string to_string() const;
};

TwoAdicClass two_adic_class(std::int64_t d);

// Order of the subgroup of Q_2^x / squares generated by the generators'
// classes; equals the local degree of K at 2. Rationals give 1.
std::size_t two_adic_subgroup_order(const FieldDescriptor& k);

// -1 = a^2 + b^2 solvable in K. For number fields: K totally imaginary and
// every prime over 2 of even local degree.
bool minus_one_sum_two_squares(const FieldDescriptor& k);

struct FieldPredicates {
  bool has_sqrt5 = false;
  bool has_sqrt_minus7 = false;
  bool has_omega = false;
  bool minus_one_sum_two_squares = false;
  bool formally_real = false;

  // Implications every field satisfies:
  //   formally real  =>  -1 not a sum of two squares
  //   omega in K     =>  -1 = omega^2 + omega^4
  //   sqrt5, sqrt-7  =>  the explicit decomposition over Q(sqrt5, sqrt-7)
  //   formally real  =>  no omega, no sqrt(-7)
  bool consistent() const;

  // Bits in field order, has_sqrt5 first.
  std::uint32_t bits() const;
  static FieldPredicates from_bits(std::uint32_t bits);

  friend bool operator==(const FieldPredicates&, const FieldPredicates&) = default;
};

FieldPredicates field_predicates(const FieldDescriptor& k);

}  // namespace jordan
