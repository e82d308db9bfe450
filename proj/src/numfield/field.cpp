#include "jordan/numfield/field.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <utility>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

constexpr std::int64_t kMaxRadicand = 1'000'000'000'000;  // trial division stays cheap

// Squarefree n as a vector over F_2: its prime factors, with -1 for the sign.
using PrimeSet = std::vector<std::int64_t>;

PrimeSet prime_set(std::int64_t squarefree) {
  PrimeSet out;
  if (squarefree < 0) out.push_back(-1);
  std::uint64_t n = static_cast<std::uint64_t>(squarefree < 0 ? -squarefree : squarefree);
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::int64_t>(p));
      n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::int64_t>(n));
  std::sort(out.begin(), out.end());
  return out;
}

PrimeSet sym_diff(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Echelon basis over F_2 keyed by the largest prime of each vector; each row
// remembers which original generators it combines.
class PrimeBasis {
 public:
  // Reduces v; returns the residue and the combination mask that was used.
  std::pair<PrimeSet, std::uint32_t> reduce(PrimeSet v) const {
    std::uint32_t mask = 0;
    while (!v.empty()) {
      auto it = rows_.find(v.back());
      if (it == rows_.end()) break;
      v = sym_diff(v, it->second.first);
      mask ^= it->second.second;
    }
    return {v, mask};
  }

  // Adds v tagged with `mask`; false if v is already in the span.
  bool insert(const PrimeSet& v, std::uint32_t mask) {
    auto [r, used] = reduce(v);
    if (r.empty()) return false;
    rows_.emplace(r.back(), std::make_pair(r, mask ^ used));
    return true;
  }

 private:
  std::map<std::int64_t, std::pair<PrimeSet, std::uint32_t>> rows_;
};

PrimeBasis basis_of(const FieldDescriptor& k) {
  PrimeBasis b;
  for (std::size_t i = 0; i < k.generators.size(); ++i)
    b.insert(prime_set(k.generators[i]), 1u << i);
  return b;
}

// -------------------------------------------------------------- parsing

class FieldParser {
 public:
  explicit FieldParser(std::string_view text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(text[i]);
        col_.push_back(i);
      }
    }
    col_.push_back(text.size());
  }

  FieldDescriptor parse() {
    if (s_.empty()) fail(0, "empty field descriptor");
    reject_out_of_scope();
    if (s_ == "Q") return FieldDescriptor::rationals();
    if (s_ == "R") return FieldDescriptor::real_closed();
    if (s_ == "C") return FieldDescriptor::algebraically_closed();
    if (s_.rfind("Q(", 0) != 0) fail(0, "expected Q, R, C or Q(...)");

    pos_ = 2;
    std::vector<std::int64_t> radicands;
    while (true) {
      radicands.push_back(term());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    if (pos_ != s_.size()) fail(pos_, "unexpected trailing input");
    return FieldDescriptor::multiquadratic(radicands);
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
    throw ParseError(std::string(text_), col_[std::min(pos, col_.size() - 1)], what);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  bool starts_with(std::string_view lit) const { return s_.compare(pos_, lit.size(), lit) == 0; }

  void reject_out_of_scope() const {
    auto is = [&](std::string_view prefix) { return s_.rfind(prefix, 0) == 0; };
    if (is("GF") || (s_.size() > 1 && s_[0] == 'F' && (std::isdigit(static_cast<unsigned char>(s_[1])) ||
                                                       s_[1] == '_' || s_[1] == 'p')))
      throw UnsupportedField("fields of positive characteristic are not supported: " + s_);
    if (is("Qp") || is("Q_") || is("Zp") || is("Z_"))
      throw UnsupportedField("p-adic fields are not supported: " + s_);
    if (is("Q[") || is("Q<"))
      throw UnsupportedField("general number fields Q[x]/(f) are not supported: " + s_);
    if ((is("R(") || is("C(")) && s_.size() > 2)
      throw UnsupportedField("function fields are not supported: " + s_);
  }

  std::int64_t term() {
    const std::size_t start = pos_;
    if (starts_with("sqrt(")) {
      pos_ += 5;
      const std::size_t num = pos_;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(pos_, "expected an integer radicand");
      std::int64_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (peek() - '0');
        if (value > kMaxRadicand) fail(num, "radicand too large");
        ++pos_;
      }
      if (value == 0) fail(num, "radicand must be nonzero");
      expect(')');
      return negative ? -value : value;
    }
    std::string ident;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ident.push_back(s_[pos_++]);
    if (ident == "i") return -1;
    if (ident == "omega" || ident == "w") return -3;
    if (!ident.empty() && (peek() == ',' || peek() == ')'))
      throw UnsupportedField("transcendental or unknown generator '" + ident +
                             "'; only square roots of integers are supported");
    fail(start, "expected sqrt(<integer>), i, omega or w");
  }

  std::string_view text_;
  std::string s_;
  std::vector<std::size_t> col_;
  std::size_t pos_ = 0;
};

}  // namespace

// -------------------------------------------------------------- descriptor

FieldDescriptor FieldDescriptor::rationals() { return {}; }

FieldDescriptor FieldDescriptor::real_closed() {
  FieldDescriptor f;
  f.kind = FieldKind::RealClosed;
  return f;
}

FieldDescriptor FieldDescriptor::algebraically_closed() {
  FieldDescriptor f;
  f.kind = FieldKind::AlgebraicallyClosed;
  return f;
}

FieldDescriptor FieldDescriptor::multiquadratic(const std::vector<std::int64_t>& radicands) {
  FieldDescriptor f;
  std::vector<std::int64_t> reduced;
  for (std::int64_t d : radicands) {
    std::int64_t s = squarefree_part(d);
    if (s != d && s != 1)
      f.warnings.push_back("sqrt(" + std::to_string(d) + ") rewritten as " +
                           "a multiple of sqrt(" + std::to_string(s) + ")");
    if (s == 1) {
      f.warnings.push_back("sqrt(" + std::to_string(d) + ") is rational; dropped");
      continue;
    }
    reduced.push_back(s);
  }
  PrimeBasis basis;
  std::vector<PrimeSet> independent;
  for (std::int64_t d : reduced) {
    if (basis.insert(prime_set(d), 0))
      independent.push_back(prime_set(d));
    else
      f.warnings.push_back("sqrt(" + std::to_string(d) + ") already generated by the others; dropped");
  }
  if (independent.size() > 12) throw UnsupportedField("too many independent square roots");
  // Canonical basis: greedily take the smallest radicands of the whole
  // square-class group, so equal fields get equal descriptors. The greedy
  // basis never needs a radicand larger than the inputs.
  std::vector<std::pair<std::int64_t, PrimeSet>> candidates;
  for (std::uint32_t mask = 1; mask < (1u << independent.size()); ++mask) {
    PrimeSet v;
    for (std::size_t i = 0; i < independent.size(); ++i)
      if (mask >> i & 1u) v = sym_diff(v, independent[i]);
    std::int64_t value = 1;
    bool fits = true;
    for (std::int64_t p : v) {
      if (p == -1) continue;
      if (value > kMaxRadicand / p) {
        fits = false;
        break;
      }
      value *= p;
    }
    if (fits) candidates.emplace_back(!v.empty() && v.front() == -1 ? -value : value, v);
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return std::make_pair(std::llabs(a.first), a.first) < std::make_pair(std::llabs(b.first), b.first);
  });
  PrimeBasis canonical;
  for (const auto& [d, v] : candidates)
    if (canonical.insert(v, 0)) f.generators.push_back(d);
  std::sort(f.generators.begin(), f.generators.end());
  f.kind = f.generators.empty() ? FieldKind::Rationals : FieldKind::Multiquadratic;
  return f;
}

std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::RealClosed: return "R";
    case FieldKind::AlgebraicallyClosed: return "C";
    case FieldKind::Multiquadratic: break;
  }
  std::string out = "Q(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += "sqrt(" + std::to_string(generators[i]) + ")";
  }
  return out + ")";
}

FieldDescriptor parse_field(std::string_view text) { return FieldParser(text).parse(); }

// -------------------------------------------------------------- predicates

std::int64_t squarefree_part(std::int64_t n) {
  if (n == 0) throw ZeroInput();
  const bool negative = n < 0;
  std::uint64_t m = static_cast<std::uint64_t>(negative ? -n : n);
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  out *= m;
  return negative ? -static_cast<std::int64_t>(out) : static_cast<std::int64_t>(out);
}

bool contains_sqrt(const FieldDescriptor& k, std::int64_t m) {
  const std::int64_t s = squarefree_part(m);
  switch (k.kind) {
    case FieldKind::AlgebraicallyClosed: return true;
    case FieldKind::RealClosed: return m > 0;
    case FieldKind::Rationals: return s == 1;
    case FieldKind::Multiquadratic: return basis_of(k).reduce(prime_set(s)).first.empty();
  }
  return false;
}

std::uint32_t sqrt_subset(const FieldDescriptor& k, std::int64_t m) {
  if (!k.is_exact()) return 0;
  auto [residue, mask] = basis_of(k).reduce(prime_set(squarefree_part(m)));
  return residue.empty() ? mask : 0;
}

bool is_formally_real(const FieldDescriptor& k) {
  switch (k.kind) {
    case FieldKind::Rationals:
    case FieldKind::RealClosed: return true;
    case FieldKind::AlgebraicallyClosed: return false;
    case FieldKind::Multiquadratic:
      return std::all_of(k.generators.begin(), k.generators.end(), [](std::int64_t d) { return d > 0; });
  }
  return false;
}

std::string TwoAdicClass::to_string() const {
  return "(" + std::to_string(e) + ", " + std::to_string(u) + " mod 8)";
}

TwoAdicClass two_adic_class(std::int64_t d) {
  if (d == 0) throw ZeroInput();
  int v = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++v;
  }
  return {v % 2, static_cast<int>(((d % 8) + 8) % 8)};
}

std::size_t two_adic_subgroup_order(const FieldDescriptor& k) {
  // Q_2^x / squares = <2> x <-1> x <5>, one bit each.
  std::vector<unsigned> basis;
  for (std::int64_t d : k.generators) {
    TwoAdicClass c = two_adic_class(d);
    unsigned v = static_cast<unsigned>(c.e) | ((c.u == 3 || c.u == 7) ? 2u : 0u) |
                 ((c.u == 3 || c.u == 5) ? 4u : 0u);
    for (unsigned b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return std::size_t{1} << basis.size();
}

bool minus_one_sum_two_squares(const FieldDescriptor& k) {
  switch (k.kind) {
    case FieldKind::Rationals:
    case FieldKind::RealClosed: return false;
    case FieldKind::AlgebraicallyClosed: return true;
    case FieldKind::Multiquadratic: return !is_formally_real(k) && two_adic_subgroup_order(k) > 1;
  }
  return false;
}

bool FieldPredicates::consistent() const {
  if (formally_real && (minus_one_sum_two_squares || has_omega || has_sqrt_minus7)) return false;
  if (has_omega && !minus_one_sum_two_squares) return false;
  if (has_sqrt5 && has_sqrt_minus7 && !minus_one_sum_two_squares) return false;
  return true;
}

std::uint32_t FieldPredicates::bits() const {
  return (has_sqrt5 ? 1u : 0u) | (has_sqrt_minus7 ? 2u : 0u) | (has_omega ? 4u : 0u) |
         (minus_one_sum_two_squares ? 8u : 0u) | (formally_real ? 16u : 0u);
}

FieldPredicates FieldPredicates::from_bits(std::uint32_t bits) {
  return {(bits & 1u) != 0, (bits & 2u) != 0, (bits & 4u) != 0, (bits & 8u) != 0, (bits & 16u) != 0};
}

FieldPredicates field_predicates(const FieldDescriptor& k) {
  if (k.kind == FieldKind::RealClosed) return {true, false, false, false, true};
  if (k.kind == FieldKind::AlgebraicallyClosed) return {true, true, true, true, false};
  return {contains_sqrt(k, 5), contains_sqrt(k, -7), contains_sqrt(k, -3), minus_one_sum_two_squares(k),
          is_formally_real(k)};
}

}  // namespace jordan
