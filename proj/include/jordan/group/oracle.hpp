#pragma once

#include <cstddef>
#include <vector>

#include "jordan/group/subgroup.hpp"

namespace jordan {

inline constexpr std::size_t kOracleOrderLimit = 200;

// Every subgroup of G: start from the cyclic subgroups and join with cyclic
// subgroups until nothing new appears. Throws OracleScopeExceeded above
// kOracleOrderLimit. Canonical order.
std::vector<Subgroup> all_subgroups_oracle(const GroupPtr& g);

// Minimal index over the oracle's subgroups that pass the full (member-wise)
// abelian and normal checks. Independent of the atom-join engine.
std::size_t oracle_jordan_constant(const GroupPtr& g);

}  // namespace jordan
