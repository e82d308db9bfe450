#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jordan/cli/verify.hpp"
#include "jordan/group/finite_group.hpp"

namespace jordan::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitUnsupported = 3,
  kExitCap = 4,
};

struct CliConfig {
  bool json = false;
  std::string cache_path = ".jordan-cache.json";
  bool use_cache = true;
  std::size_t element_cap = kDefaultElementCap;
  std::uint64_t seed = 1;
  int verbosity = 0;
};

int cmd_classify(const CliConfig& config, const std::string& field, std::ostream& out, std::ostream& err);
int cmd_jconst(const CliConfig& config, const std::string& group, std::ostream& out, std::ostream& err);
int cmd_predicates(const CliConfig& config, const std::string& field, std::ostream& out, std::ostream& err);
// `options.jordan` is filled in from the config when left empty.
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err, VerifyOptions options = {});

// Full command line, argv[0] included.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordan::cli
