#pragma once

// Small groups built straight from cycle notation, independent of the catalog.

#include <string>
#include <vector>

#include "jordan/group/finite_group.hpp"

namespace jordan::test {

inline GroupPtr perm_group(std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<GroupElement> gens;
  for (const auto& c : cycles) gens.emplace_back(Permutation::from_cycles(c, degree));
  return FiniteGroup::closure(std::move(gens));
}

inline GroupPtr trivial_group() { return perm_group(1, {"()"}); }
inline GroupPtr c4() { return perm_group(4, {"(1 2 3 4)"}); }
inline GroupPtr c6() { return perm_group(6, {"(1 2 3 4 5 6)"}); }
inline GroupPtr s3() { return perm_group(3, {"(1 2 3)", "(1 2)"}); }
inline GroupPtr a4() { return perm_group(4, {"(1 2 3)", "(2 3 4)"}); }
inline GroupPtr s4() { return perm_group(4, {"(1 2 3 4)", "(1 2)"}); }
inline GroupPtr s5() { return perm_group(5, {"(1 2 3 4 5)", "(1 2)"}); }
inline GroupPtr a5() { return perm_group(5, {"(1 2 3)", "(1 2 3 4 5)"}); }
inline GroupPtr d8() { return perm_group(4, {"(1 2 3 4)", "(1 3)"}); }
inline GroupPtr q8() { return perm_group(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}); }
inline GroupPtr klein() { return perm_group(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }
// t -> t+1 and t -> -1/t on F_7 u {inf}; point k+1 is t = k, point 8 is inf.
inline GroupPtr psl2f7() { return perm_group(8, {"(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"}); }
inline GroupPtr a5_wreath_2() {
  return perm_group(10, {"(1 2 3)", "(1 2 3 4 5)", "(6 7 8)", "(6 7 8 9 10)",
                         "(1 6)(2 7)(3 8)(4 9)(5 10)"});
}

}  // namespace jordan::test
