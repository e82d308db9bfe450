#include <algorithm>

#include "jordan/catalog/catalog.hpp"
#include "jordan/errors.hpp"
#include "jordan/group/jordan.hpp"

namespace jordan {

namespace {

// Order, derived-series orders and trivial center of A_n / S_n for n = 4, 5.
struct Signature {
  NormalKind kind;
  std::size_t n;
  std::size_t order;
  std::size_t derived;
  std::size_t second_derived;
};

constexpr Signature kSymmetric[] = {
    {NormalKind::Symmetric, 4, 24, 12, 4},
    {NormalKind::Symmetric, 5, 120, 60, 60},
};
constexpr Signature kAlternating[] = {
    {NormalKind::Alternating, 4, 12, 4, 1},
    {NormalKind::Alternating, 5, 60, 60, 60},
};

// Orders alone confuse S5 with A5 x Z/2; all four targets are centerless.
bool matches(const Subgroup& h, const Signature& sig) {
  if (h.order() != sig.order) return false;
  if (center(as_group(h)).order() != 1) return false;
  Subgroup d = derived_subgroup(h);
  if (d.order() != sig.derived) return false;
  return derived_subgroup(d).order() == sig.second_derived;
}

bool trivial_intersection(const Subgroup& a, const Subgroup& b) {
  for (ElemIndex x : a.members())
    if (x != a.group().identity() && b.contains(x)) return false;
  return true;
}

// Subgroup of order k in a cyclic group, if it exists.
std::optional<Subgroup> cyclic_subgroup_of_order(const Subgroup& c, std::size_t k) {
  if (k == 0 || c.order() % k != 0) return std::nullopt;
  for (ElemIndex x : c.members())
    if (c.group().element_order(x) == k) return Subgroup::generated_by(c.parent(), {x});
  return std::nullopt;
}

}  // namespace

ExtensionReport check_extension_structure(const GroupPtr& g) {
  const Subgroup derived = derived_subgroup(g);
  const auto normals = normal_subgroups(g);

  auto find = [&](const auto& signatures, bool proper) -> std::optional<std::pair<Subgroup, Signature>> {
    for (const Signature& sig : signatures)
      for (const Subgroup& n : normals)
        if ((!proper || n.order() < g->order()) && derived.is_subset_of(n) && matches(n, sig))
          return std::make_pair(n, sig);
    return std::nullopt;
  };

  ExtensionReport report;
  report.group = g;

  auto symmetric_hit = find(kSymmetric, true);
  auto hit = symmetric_hit;
  if (!hit) {
    hit = find(kAlternating, false);
    if (hit) {
      auto inv = abelian_invariants(Subgroup::whole(quotient(hit->first)));
      if (inv.size() > 1) hit.reset();  // quotient must be cyclic
    }
  }
  if (!hit)
    throw NoSuitableNormalSubgroup(
        "no normal A_n or S_n (n = 4, 5) with an abelian quotient of the right shape");

  const Subgroup& n = hit->first;
  report.normal_kind = hit->second.kind;
  report.n = hit->second.n;
  report.normal = n;
  report.quotient_invariants = abelian_invariants(Subgroup::whole(quotient(n)));

  const Subgroup c = centralizer(g, n);
  if (c.order() * n.order() == g->order() && trivial_intersection(c, n)) {
    report.verdict = ExtensionVerdict::DirectProduct;
    report.evidence = c;
    return report;
  }
  if (report.normal_kind == NormalKind::Symmetric) return report;  // Inconclusive

  const std::size_t m = n.index();
  if (m % 2 == 0) {
    // C_G(N) meets N trivially and embeds in the cyclic G/N; its subgroup of
    // order k is characteristic in a normal subgroup, hence normal.
    const std::size_t k = m / 2;
    if (auto z = cyclic_subgroup_of_order(c, k)) {
      Subgroup nz = join(n, *z);
      if (nz.order() == n.order() * k && is_normal(nz)) {
        report.verdict = ExtensionVerdict::ContainsNormalAnTimesZk;
        report.k = k;
        report.evidence = nz;
      }
    }
  }
  return report;
}

bool verify_extension_report(const ExtensionReport& r) {
  if (!r.normal || !is_normal_full(*r.normal)) return false;
  const Subgroup& n = *r.normal;
  switch (r.verdict) {
    case ExtensionVerdict::DirectProduct: {
      if (!r.evidence) return false;
      const Subgroup& c = *r.evidence;
      for (ElemIndex x : c.members())
        for (ElemIndex y : n.generators())
          if (!c.group().commute(x, y)) return false;
      return trivial_intersection(c, n) && c.order() * n.order() == r.group->order() &&
             join(c, n).order() == r.group->order();
    }
    case ExtensionVerdict::ContainsNormalAnTimesZk: {
      if (!r.evidence) return false;
      const Subgroup& m = *r.evidence;
      if (!is_normal_full(m) || !n.is_subset_of(m) || m.order() != n.order() * r.k) return false;
      // M = N x Z/k: an element of order k centralizing N, outside N, with
      // <z> meeting N trivially.
      const Subgroup c = centralizer(r.group, n);
      for (ElemIndex z : m.members()) {
        if (!c.contains(z) || m.group().element_order(z) != r.k) continue;
        Subgroup zk = Subgroup::generated_by(r.group, {z});
        if (trivial_intersection(zk, n)) return true;
      }
      return false;
    }
    case ExtensionVerdict::Inconclusive:
      return true;
  }
  return false;
}

}  // namespace jordan
