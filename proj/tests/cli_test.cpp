#include <gtest/gtest.h>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "jordan/cli/app.hpp"
#include "jordan/cli/verify.hpp"

namespace jordan::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "jordan");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("jordan-cli-test-" + std::to_string(::getpid()) + "-" +
                                         std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Classify, FieldTableInJson) {
  const std::pair<const char*, int> rows[] = {{"C", 7200},   {"Q(sqrt(5),sqrt(-7))", 7200}, {"Q(sqrt(5),omega)", 7200},
                                              {"Q(sqrt(-7))", 168}, {"R", 120}, {"Q(sqrt(5))", 120}, {"Q", 120}};
  for (const auto& [field, value] : rows) {
    auto r = run_cli({"--json", "--no-cache", "classify", field});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"].get<int>(), value) << field;
    EXPECT_TRUE(j["trace"].is_array());
  }
}

TEST(Classify, HumanAndJsonAgree) {
  auto human = run_cli({"classify", "Q(sqrt(-7))"});
  auto json = run_cli({"classify", "--json", "Q(sqrt(-7))"});
  ASSERT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("J(Cr2(K)) = 168"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(json.out)["value"], 168);
}

TEST(ExitCodes, ParseAndUnsupported) {
  auto zero = run_cli({"classify", "Q(sqrt(0))"});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("^"), std::string::npos);
  EXPECT_EQ(run_cli({"classify", "Q(sqrt(5)"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "Q(t)"}).code, 3);
  EXPECT_EQ(run_cli({"predicates", "F7"}).code, 3);
  EXPECT_EQ(run_cli({"--no-cache", "jconst", "D7"}).code, 2);
  EXPECT_EQ(run_cli({"--no-cache", "jconst", "S9"}).code, 4);
  EXPECT_EQ(run_cli({"--no-cache", "--cap", "100", "jconst", "S5"}).code, 4);
  EXPECT_EQ(run_cli({"--frobnicate", "verify"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Jconst, Examples) {
  for (const auto& [spec, value] : std::vector<std::pair<std::string, int>>{{"S4", 6}, {"A5wr2", 7200}, {"C12", 1}}) {
    auto r = run_cli({"--json", "--no-cache", "jconst", spec});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["certificate"]["jordan_constant"].get<int>(), value);
  }
}

TEST(Jconst, PermFile) {
  TempDir dir;
  const std::string path = dir.file("s4.perm");
  std::ofstream(path) << "degree 4\n# S4\n(1 2 3 4)\n(1 2)\n";
  auto r = run_cli({"--json", "--no-cache", "jconst", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["certificate"]["jordan_constant"], 6);
  EXPECT_EQ(run_cli({"--no-cache", "jconst", dir.file("missing.perm")}).code, 2);
}

TEST(Cache, HitMatchesMissAndNoCache) {
  TempDir dir;
  const std::string cache = dir.file("cache.json");
  for (const char* spec : {"S4", "SL25", "Fermat648", "D8xD8"}) {
    auto off = run_cli({"--json", "--no-cache", "jconst", spec});
    auto miss = run_cli({"--json", "--cache", cache, "-v", "jconst", spec});
    auto hit = run_cli({"--json", "--cache", cache, "-v", "jconst", spec});
    ASSERT_EQ(off.code, 0);
    EXPECT_NE(miss.err.find("cache: miss"), std::string::npos) << miss.err;
    EXPECT_NE(hit.err.find("cache: hit"), std::string::npos) << hit.err;
    EXPECT_EQ(off.out, miss.out);
    EXPECT_EQ(off.out, hit.out);
  }
  EXPECT_TRUE(fs::exists(cache));
}

TEST(Cache, CorruptEntriesAreDiscarded) {
  TempDir dir;
  const std::string cache = dir.file("cache.json");
  auto clean = run_cli({"--json", "--cache", cache, "jconst", "S4"});
  ASSERT_EQ(clean.code, 0);

  // Claim a smaller constant than the witness supports.
  nlohmann::json j = nlohmann::json::parse(std::ifstream(cache));
  for (auto& [key, entry] : j["entries"].items()) entry["jordan_constant"] = 3;
  std::ofstream(cache) << j.dump();
  auto tampered = run_cli({"--json", "--cache", cache, "-v", "jconst", "S4"});
  EXPECT_EQ(tampered.out, clean.out);
  EXPECT_NE(tampered.err.find("discarded"), std::string::npos) << tampered.err;

  // A witness generator that is not in the group.
  j = nlohmann::json::parse(std::ifstream(cache));
  for (auto& [key, entry] : j["entries"].items()) entry["witness"]["generators"] = {"(1 5)"};
  std::ofstream(cache) << j.dump();
  EXPECT_EQ(run_cli({"--json", "--cache", cache, "jconst", "S4"}).out, clean.out);

  // Garbage file.
  std::ofstream(cache) << "{not json";
  EXPECT_EQ(run_cli({"--json", "--cache", cache, "jconst", "S4"}).out, clean.out);
  EXPECT_NO_THROW(nlohmann::json::parse(std::ifstream(cache)));
}

TEST(Cache, LockContentionBypassesCache) {
  TempDir dir;
  const std::string cache = dir.file("cache.json");
  int fd = ::open((cache + ".lock").c_str(), O_RDWR | O_CREAT, 0644);
  ASSERT_GE(fd, 0);
  ASSERT_EQ(::flock(fd, LOCK_EX | LOCK_NB), 0);
  auto r = run_cli({"--json", "--cache", cache, "-v", "jconst", "A4"});
  ::flock(fd, LOCK_UN);
  ::close(fd);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["certificate"]["jordan_constant"], 3);
  EXPECT_NE(r.err.find("cache: off"), std::string::npos);
  EXPECT_FALSE(fs::exists(cache));
}

TEST(Predicates, Reports) {
  auto omega = run_cli({"--json", "predicates", "Q(omega)"});
  ASSERT_EQ(omega.code, 0);
  auto j = nlohmann::json::parse(omega.out);
  EXPECT_TRUE(j["predicates"]["minus_one_sum_two_squares"].get<bool>());
  EXPECT_EQ(j["evidence"]["witness"]["source"], "closed-form:omega");

  auto m7 = nlohmann::json::parse(run_cli({"--json", "predicates", "Q(sqrt(-7))"}).out);
  EXPECT_FALSE(m7["predicates"]["minus_one_sum_two_squares"].get<bool>());
  EXPECT_FALSE(m7["evidence"].contains("witness"));

  auto q = nlohmann::json::parse(run_cli({"--json", "predicates", "Q"}).out);
  EXPECT_FALSE(q["predicates"]["has_sqrt5"].get<bool>());
  EXPECT_FALSE(q["predicates"]["has_omega"].get<bool>());
  EXPECT_TRUE(q["predicates"]["formally_real"].get<bool>());
}

TEST(Verify, PassesAndIsCacheTransparent) {
  TempDir dir;
  auto off = run_cli({"--json", "--no-cache", "verify"});
  auto cold = run_cli({"--json", "--cache", dir.file("c.json"), "verify"});
  auto warm = run_cli({"--json", "--cache", dir.file("c.json"), "verify"});
  EXPECT_EQ(off.code, 0) << off.out;
  EXPECT_EQ(off.out, cold.out);
  EXPECT_EQ(off.out, warm.out);
  auto j = nlohmann::json::parse(off.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  std::size_t field_rows = 0;
  for (const auto& row : j["rows"]) field_rows += row["id"].get<std::string>().rfind("cr2 ", 0) == 0;
  EXPECT_EQ(field_rows, 7u);
}

TEST(Verify, CorruptedBoundTableFails) {
  VerifyOptions options;
  // The whole (cyclic or dihedral, cyclic or dihedral) row drops to 1.
  for (auto f : {SubgroupTypeTag::Cyclic, SubgroupTypeTag::Dihedral})
    for (auto b : {SubgroupTypeTag::Cyclic, SubgroupTypeTag::Dihedral}) options.table.set(f, b, 1);
  CliConfig config;
  config.use_cache = false;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(config, out, err, options), 1);
  EXPECT_NE(err.str().find("conic_bound_cd_cd"), std::string::npos) << err.str();
  EXPECT_NE(out.str().find("FAIL  conic_bound_cd_cd"), std::string::npos);
}

}  // namespace
}  // namespace jordan::cli
