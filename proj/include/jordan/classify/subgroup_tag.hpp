#pragma once

#include <string_view>

namespace jordan {

// Isomorphism types of finite subgroups of PGL2 over a field of
// characteristic zero.
enum class SubgroupTypeTag { Cyclic, Dihedral, A4, S4, A5 };

constexpr std::string_view to_string(SubgroupTypeTag t) {
  switch (t) {
    case SubgroupTypeTag::Cyclic: return "Cyclic";
    case SubgroupTypeTag::Dihedral: return "Dihedral";
    case SubgroupTypeTag::A4: return "A4";
    case SubgroupTypeTag::S4: return "S4";
    case SubgroupTypeTag::A5: return "A5";
  }
  return "?";
}

}  // namespace jordan
