#include "jordan/group/element.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidSpec("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) { throw ParseError(std::string(text), i, msg); };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point number");
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 65535) fail("point number too large");
        ++i;
      }
      if (value < 1 || value > degree) {
        i = start;
        fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      if (used[value - 1]) {
        i = start;
        fail("point " + std::to_string(value) + " repeated");
      }
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::embedded(std::size_t offset, std::size_t new_degree) const {
  Permutation p = identity(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[offset + i] = static_cast<std::uint16_t>(offset + images_[i]);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint16_t> img(b.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

std::size_t Permutation::hash() const {
  std::size_t h = images_.size();
  for (auto x : images_) h = hash_combine(h, x);
  return h;
}

// ---------------------------------------------------------------- ModuleAction

namespace {

ActionMatrix mat_mul(const ActionMatrix& a, const ActionMatrix& b, const std::vector<int>& moduli) {
  // Entries of the product are reduced per row modulus; the action only needs
  // to be well defined on residues.
  std::size_t n = a.size();
  ActionMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<long long>(a[i][k]) * b[k][j];
      c[i][j] = mod(s, moduli[i]);
    }
  return c;
}

ActionMatrix reduce(ActionMatrix m, const std::vector<int>& moduli) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto& x : m[i]) x = mod(x, moduli[i]);
  return m;
}

}  // namespace

std::shared_ptr<const ModuleAction> ModuleAction::from_generators(
    std::vector<int> moduli, const std::vector<Permutation>& generators,
    const std::vector<ActionMatrix>& matrices) {
  if (generators.size() != matrices.size() || generators.empty())
    throw InvalidSpec("action needs one matrix per acting generator");
  for (int m : moduli)
    if (m < 1) throw InvalidSpec("moduli must be positive");
  for (const auto& m : matrices) {
    if (m.size() != moduli.size()) throw InvalidSpec("action matrix has wrong size");
    for (const auto& row : m)
      if (row.size() != moduli.size()) throw InvalidSpec("action matrix has wrong size");
  }

  std::size_t n = moduli.size();
  ActionMatrix id(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1 % moduli[i];

  std::unordered_map<Permutation, ActionMatrix, PermutationHash> table;
  std::deque<Permutation> queue;
  Permutation e = Permutation::identity(generators.front().degree());
  table.emplace(e, reduce(id, moduli));
  queue.push_back(e);
  std::vector<ActionMatrix> gens;
  for (const auto& m : matrices) gens.push_back(reduce(m, moduli));

  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    const ActionMatrix mx = table.at(x);
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation y = x * generators[k];
      ActionMatrix my = mat_mul(mx, gens[k], moduli);
      auto it = table.find(y);
      if (it == table.end()) {
        table.emplace(y, std::move(my));
        queue.push_back(std::move(y));
      } else if (it->second != my) {
        throw InvalidSpec("action matrices do not define a homomorphism");
      }
    }
  }
  return from_table(std::move(moduli), std::move(table));
}

std::shared_ptr<const ModuleAction> ModuleAction::from_table(
    std::vector<int> moduli, std::unordered_map<Permutation, ActionMatrix, PermutationHash> table) {
  auto action = std::make_shared<ModuleAction>();
  action->moduli_ = std::move(moduli);
  for (auto& [q, m] : table) m = reduce(std::move(m), action->moduli_);
  action->table_ = std::move(table);
  return action;
}

std::vector<int> ModuleAction::apply(const Permutation& q, const std::vector<int>& v) const {
  auto it = table_.find(q);
  if (it == table_.end()) throw KindMismatch("acting element outside the tabulated group");
  const ActionMatrix& m = it->second;
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long long>(m[i][j]) * v[j];
    out[i] = mod(s, moduli_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- SemidirectPair

SemidirectPair::SemidirectPair(std::vector<int> v, Permutation q,
                               std::shared_ptr<const ModuleAction> action)
    : v_(std::move(v)), q_(std::move(q)), action_(std::move(action)) {
  if (!action_) throw InvalidSpec("semidirect pair without an action");
  if (v_.size() != action_->rank()) throw InvalidSpec("vector part has wrong rank");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = mod(v_[i], action_->moduli()[i]);
}

SemidirectPair SemidirectPair::inverse() const {
  Permutation qi = q_.inverse();
  std::vector<int> w = action_->apply(qi, v_);
  for (auto& x : w) x = -x;
  return SemidirectPair(std::move(w), std::move(qi), action_);
}

SemidirectPair SemidirectPair::identity_like() const {
  return SemidirectPair(std::vector<int>(v_.size(), 0), Permutation::identity(q_.degree()),
                        action_);
}

bool SemidirectPair::is_identity() const {
  return q_.is_identity() && std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

std::string SemidirectPair::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v_.size(); ++i) out << (i ? "," : "") << v_[i];
  out << '|' << q_.to_cycle_string() << ']';
  return out.str();
}

SemidirectPair operator*(const SemidirectPair& a, const SemidirectPair& b) {
  std::vector<int> w = a.action_->apply(a.q_, b.v_);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += a.v_[i];
  return SemidirectPair(std::move(w), a.q_ * b.q_, a.action_);
}

std::size_t SemidirectPair::hash() const {
  std::size_t h = q_.hash();
  for (int x : v_) h = hash_combine(h, static_cast<std::size_t>(x));
  return h;
}

// ---------------------------------------------------------------- GroupElement

bool GroupElement::compatible_with(const GroupElement& other) const {
  if (kind() != other.kind()) return false;
  if (kind() == ElementKind::Permutation)
    return as_permutation().degree() == other.as_permutation().degree();
  const auto& a = as_pair();
  const auto& b = other.as_pair();
  return a.action() == b.action() || (a.action()->moduli() == b.action()->moduli() &&
                                      a.acting_part().degree() == b.acting_part().degree());
}

GroupElement GroupElement::inverse() const {
  return std::visit([](const auto& x) { return GroupElement(x.inverse()); }, value_);
}

GroupElement GroupElement::identity_like() const {
  if (kind() == ElementKind::Permutation)
    return GroupElement(Permutation::identity(as_permutation().degree()));
  return GroupElement(as_pair().identity_like());
}

bool GroupElement::is_identity() const {
  return std::visit([](const auto& x) { return x.is_identity(); }, value_);
}

std::string GroupElement::to_string() const {
  if (kind() == ElementKind::Permutation) return as_permutation().to_cycle_string();
  return as_pair().to_string();
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind()) throw KindMismatch("cannot multiply elements of different kinds");
  if (a.kind() == ElementKind::Permutation) {
    if (a.as_permutation().degree() != b.as_permutation().degree())
      throw KindMismatch("permutation degrees differ");
    return GroupElement(a.as_permutation() * b.as_permutation());
  }
  return GroupElement(a.as_pair() * b.as_pair());
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
  if (a.kind() == ElementKind::Permutation) return a.as_permutation() <=> b.as_permutation();
  return a.as_pair() <=> b.as_pair();
}

std::size_t GroupElement::hash() const {
  return std::visit([](const auto& x) { return x.hash(); }, value_) + value_.index();
}

}  // namespace jordan
