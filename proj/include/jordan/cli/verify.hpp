#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jordan/classify/classify.hpp"
#include "jordan/group/jordan.hpp"

namespace jordan::cli {

struct VerifyRow {
  std::string id;        // stable name, e.g. "conic_bound_cd_cd"
  std::string claim;     // what is being checked, in formula form
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyOptions {
  ConicBoundTable table = ConicBoundTable::standard();
  std::uint64_t seed = 1;
  // Computes J for a catalog spec; the CLI plugs its cache in here.
  std::function<JordanCertificate(const std::string& spec)> jordan;
};

// Field table, witness-group constants, sum-of-squares witnesses, conic
// bundle bounds, square-root membership, extension structure, weak Jordan
// and oracle agreement.
std::vector<VerifyRow> run_verify_suite(const VerifyOptions& options);

}  // namespace jordan::cli
