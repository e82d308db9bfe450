#include "jordan/group/automorphism.hpp"

#include <algorithm>
#include <functional>

#include "jordan/errors.hpp"
#include "jordan/group/oracle.hpp"

namespace jordan {

namespace {

bool generates(const GroupPtr& g, const std::vector<ElemIndex>& gens) {
  return Subgroup::generated_by(g, gens).order() == g->order();
}

// Breadth-first spanning tree of the Cayley graph for `gens`: every element
// other than the identity is reached as parent * gens[via].
struct CayleyTree {
  std::vector<ElemIndex> order;
  std::vector<ElemIndex> parent;
  std::vector<std::size_t> via;
};

CayleyTree spanning_tree(const FiniteGroup& g, const std::vector<ElemIndex>& gens) {
  CayleyTree t;
  t.parent.assign(g.order(), 0);
  t.via.assign(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  t.order.push_back(g.identity());
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    ElemIndex x = t.order[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ElemIndex y = g.product(x, gens[i]);
      if (seen[y]) continue;
      seen[y] = true;
      t.parent[y] = x;
      t.via[y] = i;
      t.order.push_back(y);
    }
  }
  return t;
}

}  // namespace

std::vector<ElemIndex> small_generating_set(const GroupPtr& g) {
  if (g->order() == 1) return {};
  std::vector<ElemIndex> pool;
  for (std::size_t i = 0; i < g->order(); ++i)
    if (i != g->identity()) pool.push_back(static_cast<ElemIndex>(i));

  for (ElemIndex a : pool)
    if (generates(g, {a})) return {a};
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (generates(g, {pool[i], pool[j]})) return {pool[i], pool[j]};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      Subgroup two = Subgroup::generated_by(g, {pool[i], pool[j]});
      for (std::size_t k = j + 1; k < pool.size(); ++k) {
        if (two.contains(pool[k])) continue;
        if (generates(g, {pool[i], pool[j], pool[k]})) return {pool[i], pool[j], pool[k]};
      }
    }
  }
  return {};
}

std::vector<GroupAutomorphism> automorphism_group_small(const GroupPtr& g) {
  if (g->order() > kAutOrderLimit)
    throw AutScopeExceeded("automorphism search is limited to order " +
                           std::to_string(kAutOrderLimit) + ", got " +
                           std::to_string(g->order()));
  const FiniteGroup& grp = *g;
  if (grp.order() == 1) return {GroupAutomorphism{{grp.identity()}}};

  const std::vector<ElemIndex> gens = small_generating_set(g);
  if (gens.empty())
    throw AutScopeExceeded("no generating set with at most " +
                           std::to_string(kAutGeneratorLimit) + " elements");

  const CayleyTree tree = spanning_tree(grp, gens);
  std::vector<std::vector<ElemIndex>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t x = 0; x < grp.order(); ++x)
      if (grp.element_order(static_cast<ElemIndex>(x)) == grp.element_order(gens[i]))
        candidates[i].push_back(static_cast<ElemIndex>(x));

  std::vector<GroupAutomorphism> result;
  std::vector<ElemIndex> images(gens.size());
  std::vector<ElemIndex> phi(grp.order());
  std::vector<bool> used(grp.order());

  auto try_images = [&] {
    phi[grp.identity()] = grp.identity();
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
      ElemIndex x = tree.order[k];
      phi[x] = grp.product(phi[tree.parent[x]], images[tree.via[x]]);
    }
    std::fill(used.begin(), used.end(), false);
    for (ElemIndex y : phi) {
      if (used[y]) return;
      used[y] = true;
    }
    for (std::size_t x = 0; x < grp.order(); ++x)
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (phi[grp.product(static_cast<ElemIndex>(x), gens[i])] !=
            grp.product(phi[x], images[i]))
          return;
    result.push_back(GroupAutomorphism{phi});
  };

  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) {
      try_images();
      return;
    }
    for (ElemIndex c : candidates[depth]) {
      images[depth] = c;
      search(depth + 1);
    }
  };
  search(0);
  return result;
}

bool is_characteristic(const Subgroup& h, const std::vector<GroupAutomorphism>& automorphisms) {
  for (const auto& phi : automorphisms)
    for (ElemIndex s : h.generators())
      if (!h.contains(phi(s))) return false;
  return true;
}

bool is_characteristic(const Subgroup& h) {
  return is_characteristic(h, automorphism_group_small(h.parent()));
}

WeakJordanReport weak_jordan_report(const GroupPtr& g) {
  const auto subgroups = all_subgroups_oracle(g);
  const auto automorphisms = automorphism_group_small(g);

  WeakJordanReport report;
  report.best_characteristic_index = g->order();
  for (const Subgroup& n : subgroups)
    if (is_abelian_full(n) && is_characteristic(n, automorphisms))
      report.best_characteristic_index = std::min(report.best_characteristic_index, n.index());

  for (const Subgroup& a : subgroups) {
    if (!is_abelian_full(a)) continue;
    const bool ok = report.best_characteristic_index <= a.index() * a.index();
    report.rows.push_back(WeakJordanRow{a, report.best_characteristic_index, ok});
    report.holds = report.holds && ok;
  }
  return report;
}

bool verify_weak_jordan(const GroupPtr& g) { return weak_jordan_report(g).holds; }

}  // namespace jordan
