#include "jordan/group/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "jordan/errors.hpp"

namespace jordan {

std::vector<Subgroup> all_subgroups_oracle(const GroupPtr& g) {
  if (g->order() > kOracleOrderLimit)
    throw OracleScopeExceeded("subgroup oracle is limited to order " +
                              std::to_string(kOracleOrderLimit) + ", got " +
                              std::to_string(g->order()));

  std::unordered_set<Subgroup, SubgroupHash> cyclic_set;
  for (std::size_t i = 0; i < g->order(); ++i)
    cyclic_set.insert(Subgroup::generated_by(g, {static_cast<ElemIndex>(i)}));
  std::vector<Subgroup> cyclic(cyclic_set.begin(), cyclic_set.end());
  std::sort(cyclic.begin(), cyclic.end());

  std::unordered_set<Subgroup, SubgroupHash> found(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier)
      for (const Subgroup& c : cyclic) {
        if (c.is_subset_of(h)) continue;
        Subgroup j = join(h, c);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t oracle_jordan_constant(const GroupPtr& g) {
  std::size_t best = g->order();
  for (const Subgroup& h : all_subgroups_oracle(g))
    if (is_abelian_full(h) && is_normal_full(h)) best = std::min(best, h.index());
  return best;
}

}  // namespace jordan
