#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jordan/numfield/field.hpp"

namespace jordan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact element of a multiquadratic field Q(sqrt d_1, ..., sqrt d_k):
// sum over subsets S of q_S * prod_{i in S} sqrt(d_i). Coordinates are dense,
// indexed by the subset bitmask.
class MqElement {
 public:
  static constexpr std::size_t kMaxRank = 12;

  // Zero of K. Throws UnsupportedField unless K is Q or multiquadratic.
  explicit MqElement(std::shared_ptr<const FieldDescriptor> ambient);
  explicit MqElement(const FieldDescriptor& ambient);

  static MqElement rational(const MqElement& like, Rational q);
  static MqElement basis(const MqElement& like, std::uint32_t subset);
  // sqrt(d_i) for the i-th stored generator.
  static MqElement generator(const MqElement& like, std::size_t i);

  const FieldDescriptor& ambient() const { return *ambient_; }
  const std::shared_ptr<const FieldDescriptor>& ambient_ptr() const { return ambient_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coeff(std::uint32_t subset) const { return coords_.at(subset); }

  bool is_zero() const;
  bool is_rational() const;

  MqElement operator+(const MqElement& o) const;
  MqElement operator-(const MqElement& o) const;
  MqElement operator-() const;
  MqElement operator*(const MqElement& o) const;
  MqElement operator/(const MqElement& o) const;
  MqElement inverse() const;  // throws DivisionByZero
  MqElement scaled(const Rational& q) const;

  // The Galois involution sqrt(d_i) -> -sqrt(d_i).
  MqElement galois(std::size_t i) const;

  friend bool operator==(const MqElement& a, const MqElement& b);

  // E.g. "1/2 + 1/2*sqrt(-3)"; "0" for zero.
  std::string to_string() const;

 private:
  void require_same(const MqElement& o) const;

  std::shared_ptr<const FieldDescriptor> ambient_;
  std::vector<Rational> coords_;
  // prod_{i in S} d_i for every subset S.
  std::shared_ptr<const std::vector<BigInt>> products_;
};

MqElement mq_add(const MqElement& a, const MqElement& b);
MqElement mq_mul(const MqElement& a, const MqElement& b);
MqElement mq_inv(const MqElement& a);
bool mq_eq(const MqElement& a, const MqElement& b);

// x in K with x^2 = m, if sqrt(m) lies in K. Throws ZeroInput.
std::optional<MqElement> sqrt_element(const FieldDescriptor& k, std::int64_t m);

struct SumOfSquaresWitness {
  MqElement a;
  MqElement b;
  std::string source;  // "closed-form:<name>" or "height-search"
};

// a, b in K with a^2 + b^2 = -1. Known closed forms first, then elements
// (x + y*sqrt(s))/z with |x|, |y|, z <= height_bound. Empty for R and C.
std::optional<SumOfSquaresWitness> witness_search(const FieldDescriptor& k, int height_bound);

// a^2 + b^2 == -1 exactly. Throws AmbientMismatch.
bool verify_witness(const MqElement& a, const MqElement& b);

}  // namespace jordan
