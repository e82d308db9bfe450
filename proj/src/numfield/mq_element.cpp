#include "jordan/numfield/mq_element.hpp"

#include <algorithm>
#include <unordered_map>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

std::shared_ptr<const std::vector<BigInt>> subset_products(const FieldDescriptor& k) {
  auto out = std::make_shared<std::vector<BigInt>>(std::size_t{1} << k.rank(), BigInt(1));
  for (std::uint32_t s = 1; s < out->size(); ++s) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(s));
    (*out)[s] = (*out)[s & (s - 1)] * k.generators[low];
  }
  return out;
}

std::string rational_string(const Rational& q) {
  return q.str();
}

}  // namespace

MqElement::MqElement(std::shared_ptr<const FieldDescriptor> ambient) : ambient_(std::move(ambient)) {
  if (!ambient_->is_exact())
    throw UnsupportedField("exact elements need Q or a multiquadratic field, got " + ambient_->to_string());
  if (ambient_->rank() > kMaxRank) throw UnsupportedField("multiquadratic field of too large rank");
  coords_.assign(std::size_t{1} << ambient_->rank(), Rational(0));
  products_ = subset_products(*ambient_);
}

MqElement::MqElement(const FieldDescriptor& ambient)
    : MqElement(std::make_shared<const FieldDescriptor>(ambient)) {}

MqElement MqElement::rational(const MqElement& like, Rational q) {
  MqElement out = like;
  std::fill(out.coords_.begin(), out.coords_.end(), Rational(0));
  out.coords_[0] = std::move(q);
  return out;
}

MqElement MqElement::basis(const MqElement& like, std::uint32_t subset) {
  MqElement out = rational(like, 0);
  out.coords_.at(subset) = 1;
  return out;
}

MqElement MqElement::generator(const MqElement& like, std::size_t i) {
  return basis(like, 1u << i);
}

bool MqElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool MqElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return q == 0; });
}

void MqElement::require_same(const MqElement& o) const {
  if (ambient_ != o.ambient_ && !(*ambient_ == *o.ambient_)) throw AmbientMismatch();
}

MqElement MqElement::operator+(const MqElement& o) const {
  require_same(o);
  MqElement out = *this;
  for (std::size_t s = 0; s < coords_.size(); ++s) out.coords_[s] += o.coords_[s];
  return out;
}

MqElement MqElement::operator-(const MqElement& o) const {
  require_same(o);
  MqElement out = *this;
  for (std::size_t s = 0; s < coords_.size(); ++s) out.coords_[s] -= o.coords_[s];
  return out;
}

MqElement MqElement::operator-() const {
  MqElement out = *this;
  for (auto& q : out.coords_) q = -q;
  return out;
}

// sqrt(d_S) * sqrt(d_T) = (prod_{S and T} d_i) * sqrt(d_{S xor T}).
MqElement MqElement::operator*(const MqElement& o) const {
  require_same(o);
  MqElement out = rational(*this, 0);
  const auto& prod = *products_;
  for (std::uint32_t s = 0; s < coords_.size(); ++s) {
    if (coords_[s] == 0) continue;
    for (std::uint32_t t = 0; t < coords_.size(); ++t) {
      if (o.coords_[t] == 0) continue;
      out.coords_[s ^ t] += coords_[s] * o.coords_[t] * Rational(prod[s & t]);
    }
  }
  return out;
}

MqElement MqElement::scaled(const Rational& q) const {
  MqElement out = *this;
  for (auto& c : out.coords_) c *= q;
  return out;
}

MqElement MqElement::galois(std::size_t i) const {
  MqElement out = *this;
  for (std::uint32_t s = 0; s < coords_.size(); ++s)
    if (s >> i & 1u) out.coords_[s] = -out.coords_[s];
  return out;
}

// Multiply by the conjugate under each involution in turn; what remains is
// the norm, a nonzero rational.
MqElement MqElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  MqElement acc = rational(*this, 1);
  MqElement cur = *this;
  for (std::size_t i = 0; i < ambient_->rank(); ++i) {
    MqElement c = cur.galois(i);
    acc = acc * c;
    cur = cur * c;
  }
  return acc.scaled(1 / cur.coords_[0]);
}

MqElement MqElement::operator/(const MqElement& o) const { return *this * o.inverse(); }

bool operator==(const MqElement& a, const MqElement& b) {
  a.require_same(b);
  return a.coords_ == b.coords_;
}

std::string MqElement::to_string() const {
  std::string out;
  for (std::uint32_t s = 0; s < coords_.size(); ++s) {
    Rational q = coords_[s];
    if (q == 0) continue;
    std::string radical;
    for (std::size_t i = 0; i < ambient_->rank(); ++i)
      if (s >> i & 1u) radical += (radical.empty() ? "" : "*") + std::string("sqrt(") +
                                  std::to_string(ambient_->generators[i]) + ")";
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (q < 0) q = -q;
    if (radical.empty())
      out += rational_string(q);
    else if (q == 1)
      out += radical;
    else
      out += rational_string(q) + "*" + radical;
  }
  return out.empty() ? "0" : out;
}

MqElement mq_add(const MqElement& a, const MqElement& b) { return a + b; }
MqElement mq_mul(const MqElement& a, const MqElement& b) { return a * b; }
MqElement mq_inv(const MqElement& a) { return a.inverse(); }
bool mq_eq(const MqElement& a, const MqElement& b) { return a == b; }

std::optional<MqElement> sqrt_element(const FieldDescriptor& k, std::int64_t m) {
  if (m == 0) throw ZeroInput();
  if (!k.is_exact() || !contains_sqrt(k, m)) return std::nullopt;
  MqElement zero(k);
  const std::uint32_t subset = sqrt_subset(k, m);
  BigInt p = 1;
  for (std::size_t i = 0; i < k.rank(); ++i)
    if (subset >> i & 1u) p *= k.generators[i];
  // m * p is a perfect square t^2, and ((t/|p|) sqrt(p))^2 = t^2 / p = m.
  const BigInt t = boost::multiprecision::sqrt(BigInt(m) * p);
  return MqElement::basis(zero, subset).scaled(Rational(t) / Rational(abs(p)));
}

bool verify_witness(const MqElement& a, const MqElement& b) {
  MqElement sum = a * a + b * b;
  return sum == MqElement::rational(sum, -1);
}

std::optional<SumOfSquaresWitness> witness_search(const FieldDescriptor& k, int height_bound) {
  if (!k.is_exact()) return std::nullopt;
  const MqElement zero(k);
  const MqElement one = MqElement::rational(zero, 1);

  // Closed forms.
  if (auto i = sqrt_element(k, -1)) return SumOfSquaresWitness{*i, zero, "closed-form:i"};
  if (auto s = sqrt_element(k, -3)) {
    MqElement omega = (*s - one).scaled(Rational(1, 2));
    MqElement omega2 = omega * omega;
    // omega^2 + (omega^2)^2 = omega^2 + omega = -1
    if (verify_witness(omega, omega2)) return SumOfSquaresWitness{omega, omega2, "closed-form:omega"};
  }
  auto s5 = sqrt_element(k, 5);
  auto s7 = sqrt_element(k, -7);
  if (s5 && s7) {
    MqElement den = *s5 * *s7 - one;
    MqElement a = (*s7 + *s5) / den;
    MqElement b = MqElement::rational(zero, 6) / den;
    if (verify_witness(a, b)) return SumOfSquaresWitness{a, b, "closed-form:sqrt5-sqrt-7"};
  }

  // Height search: index candidate squares, then look up -1 - a^2.
  std::vector<MqElement> candidates;
  for (std::uint32_t s = 0; s < zero.coords().size(); ++s) {
    const MqElement radical = MqElement::basis(zero, s);
    for (int z = 1; z <= height_bound; ++z)
      for (int x = -height_bound; x <= height_bound; ++x)
        for (int y = (s == 0 ? 0 : -height_bound); y <= (s == 0 ? 0 : height_bound); ++y) {
          if (s != 0 && y == 0) continue;
          candidates.push_back(
              (MqElement::rational(zero, x) + radical.scaled(y)).scaled(Rational(1, z)));
        }
  }
  auto key = [](const MqElement& e) {
    std::string out;
    for (const auto& q : e.coords()) out += q.str() + ";";
    return out;
  };
  std::unordered_map<std::string, std::size_t> squares;
  for (std::size_t i = 0; i < candidates.size(); ++i) squares.emplace(key(candidates[i] * candidates[i]), i);
  const MqElement minus_one = MqElement::rational(zero, -1);
  for (const MqElement& a : candidates) {
    auto it = squares.find(key(minus_one - a * a));
    if (it != squares.end()) {
      const MqElement& b = candidates[it->second];
      if (verify_witness(a, b)) return SumOfSquaresWitness{a, b, "height-search"};
    }
  }
  return std::nullopt;
}

}  // namespace jordan
