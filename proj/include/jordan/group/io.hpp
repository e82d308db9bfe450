#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jordan/group/jordan.hpp"

namespace jordan {

// Generators read from a `.perm` file: first line `degree n`, then one
// generator per line in disjoint-cycle notation; `#` starts a comment.
struct PermFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

PermFile parse_perm_file(std::string_view text);
PermFile read_perm_file(const std::string& path);

// Inverse of GroupElement::to_string for elements shaped like those of `g`.
GroupElement parse_element(const FiniteGroup& g, std::string_view text);

nlohmann::json certificate_to_json(const JordanCertificate& cert);
// Rebuilds a certificate against `g`; throws ParseError on malformed input or
// generators outside the group. Checks are copied, not re-derived.
JordanCertificate certificate_from_json(const nlohmann::json& j, const GroupPtr& g);

}  // namespace jordan
