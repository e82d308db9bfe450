#include "jordan/group/subgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

std::vector<std::uint64_t> make_bits(std::size_t n, std::span<const ElemIndex> members) {
  std::vector<std::uint64_t> bits((n + 63) / 64, 0);
  for (auto i : members) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
  return bits;
}

// Members of <generators> in ascending index order.
std::vector<ElemIndex> close(const FiniteGroup& g, std::span<const ElemIndex> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElemIndex> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const ElemIndex x = members[head];
    for (ElemIndex s : generators) {
      ElemIndex y = g.product(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElemIndex> greedy_generators(const FiniteGroup& g, std::span<const ElemIndex> members) {
  std::vector<ElemIndex> gens;
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  for (ElemIndex x : members) {
    if (in[x]) continue;
    gens.push_back(x);
    for (ElemIndex y : close(g, gens)) in[y] = true;
  }
  return gens;
}

// Smallest subgroup containing `seeds` and closed under conjugation by
// `conjugators`.
Subgroup conjugation_closure(GroupPtr parent, std::vector<ElemIndex> seeds,
                             std::span<const ElemIndex> conjugators) {
  const FiniteGroup& g = *parent;
  Subgroup h = Subgroup::generated_by(parent, seeds);
  std::vector<ElemIndex> gens(h.generators().begin(), h.generators().end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (ElemIndex c : conjugators) {
      ElemIndex y = g.conjugate(c, gens[i]);
      if (!h.contains(y)) {
        gens.push_back(y);
        h = Subgroup::generated_by(parent, gens);
      }
    }
  }
  return h;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<ElemIndex> members,
                   std::vector<ElemIndex> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  bits_ = make_bits(parent_->order(), members_);
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::vector<ElemIndex> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase(generators, parent->identity());
  auto members = close(*parent, generators);
  return Subgroup(std::move(parent), std::move(members), std::move(generators));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElemIndex e = parent->identity();
  return Subgroup(std::move(parent), {e}, {});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElemIndex> gens(parent->generator_indices().begin(),
                              parent->generator_indices().end());
  return generated_by(std::move(parent), std::move(gens));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(members_.size());
  for (auto i : members_) out.push_back(parent_->element(i));
  return out;
}

std::vector<GroupElement> Subgroup::generator_elements() const {
  std::vector<GroupElement> out;
  for (auto i : generators_) out.push_back(parent_->element(i));
  return out;
}

Subgroup Subgroup::with_greedy_generators() const {
  return Subgroup(parent_, members_, greedy_generators(*parent_, members_));
}

std::size_t Subgroup::hash() const {
  std::size_t h = members_.size();
  for (auto w : bits_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw KindMismatch("join of subgroups of different groups");
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  std::vector<ElemIndex> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated_by(a.parent(), std::move(gens));
}

Subgroup normal_closure(GroupPtr group, ElemIndex g) {
  std::vector<ElemIndex> conj(group->generator_indices().begin(),
                              group->generator_indices().end());
  return conjugation_closure(std::move(group), {g}, conj);
}

bool is_abelian(const Subgroup& h) {
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!h.group().commute(gens[i], gens[j])) return false;
  return true;
}

bool is_abelian(const GroupPtr& g) { return is_abelian(Subgroup::whole(g)); }

bool is_abelian_full(const Subgroup& h) {
  for (ElemIndex x : h.members())
    for (ElemIndex s : h.generators())
      if (!h.group().commute(x, s)) return false;
  return true;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    for (ElemIndex s : h.generators())
      if (!h.contains(g.conjugate_by_generator(k, s))) return false;
  return true;
}

bool is_normal_full(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    for (ElemIndex x : h.members())
      if (!h.contains(g.conjugate_by_generator(k, x))) return false;
  return true;
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<ElemIndex> members;
  for (std::size_t i = 0; i < g->order(); ++i) {
    const auto x = static_cast<ElemIndex>(i);
    bool ok = true;
    for (ElemIndex s : h.generators())
      if (!g->commute(x, s)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup::generated_by(g, greedy_generators(*g, members));
}

Subgroup center(const GroupPtr& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  const auto gens = h.generators();
  std::vector<ElemIndex> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ElemIndex a = gens[i];
      ElemIndex b = gens[j];
      ElemIndex c = g.product(g.product(a, b), g.product(g.inverse(a), g.inverse(b)));
      if (c != g.identity()) commutators.push_back(c);
    }
  return conjugation_closure(h.parent(), std::move(commutators), gens);
}

Subgroup derived_subgroup(const GroupPtr& g) { return derived_subgroup(Subgroup::whole(g)); }

GroupPtr as_group(const Subgroup& h) {
  auto gens = h.generator_elements();
  if (gens.empty()) gens.push_back(h.group().element(h.group().identity()));
  return FiniteGroup::closure(std::move(gens), h.group().element_cap());
}

GroupPtr quotient(const Subgroup& normal) {
  const FiniteGroup& g = normal.group();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(g.order(), kUnset);
  std::vector<ElemIndex> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset[i] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(static_cast<ElemIndex>(i));
    for (ElemIndex n : normal.members()) coset[g.product(n, static_cast<ElemIndex>(i))] = id;
  }
  std::vector<GroupElement> gens;
  for (ElemIndex s : g.generator_indices()) {
    std::vector<std::uint16_t> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = static_cast<std::uint16_t>(coset[g.product(reps[c], s)]);
    gens.emplace_back(Permutation(std::move(img)));
  }
  return FiniteGroup::closure(std::move(gens), g.element_cap());
}

std::vector<std::size_t> abelian_invariants(const Subgroup& abelian) {
  const FiniteGroup& g = abelian.group();
  std::size_t n = abelian.order();
  // prime -> exponents of the cyclic p-factors, descending.
  std::map<std::size_t, std::vector<std::size_t>> parts;
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    // counts[k] = |{x : x^(p^k) = 1}|
    std::vector<std::size_t> counts(e + 1, 0);
    for (ElemIndex x : abelian.members()) {
      std::size_t ord = g.element_order(x);
      std::size_t pk = 1;
      for (std::size_t k = 0; k <= e; ++k) {
        if (pk % ord == 0) ++counts[k];
        pk *= p;
      }
    }
    // r[k] = number of cyclic factors of order >= p^k.
    std::vector<std::size_t> r;
    for (std::size_t k = 1; k <= e; ++k) {
      std::size_t ratio = counts[k] / counts[k - 1];
      std::size_t lg = 0;
      while (ratio > 1) {
        ratio /= p;
        ++lg;
      }
      if (lg == 0) break;
      r.push_back(lg);
    }
    std::vector<std::size_t> exps(r.empty() ? 0 : r.front(), 0);
    for (std::size_t j = 0; j < exps.size(); ++j)
      for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] > j) ++exps[j];
    parts[p] = exps;
  }
  std::size_t len = 0;
  for (const auto& [p, exps] : parts) len = std::max(len, exps.size());
  // Largest invariant factor collects the largest p-power of every prime.
  std::vector<std::size_t> factors(len, 1);
  for (const auto& [p, exps] : parts)
    for (std::size_t j = 0; j < exps.size(); ++j)
      for (std::size_t t = 0; t < exps[j]; ++t) factors[len - 1 - j] *= p;
  return factors;
}

}  // namespace jordan
