#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "pentagon/io.hpp"

namespace fs = std::filesystem;
using pentagon::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(PENTAGON_FIXTURES) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pentagon_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, VerifyPentagonExample) {
  const Result r = invoke({"verify", "pentagon", "--example", "zn:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[PASS] pentagon"), std::string::npos);
}

TEST(Cli, VerifyPentagonFailureHasWitness) {
  const Result r = invoke({"verify", "pentagon", "--input", fixture("scaled_identity.json"), "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"holds\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"witness\""), std::string::npos);
}

TEST(Cli, VerifyEveryFamily) {
  for (const char* rel : {"pentagon", "reversed", "mixed", "ybe", "heisenberg", "drinfeld", "fg", "mixed-permutation"}) {
    EXPECT_EQ(invoke({"verify", rel, "--example", "zn:2"}).code, 0) << rel;
  }
  EXPECT_EQ(invoke({"verify", "pentagon", "--input", fixture("zn2_s.json")}).code, 0);
  EXPECT_EQ(invoke({"verify", "reversed", "--input", fixture("scaled_identity.json")}).code, 1);
  EXPECT_EQ(invoke({"verify", "fg", "--input", fixture("scaled_identity.json")}).code, 1);
  EXPECT_EQ(invoke({"verify", "heisenberg", "--input", fixture("zn2_constants.json")}).code, 0);
  EXPECT_EQ(invoke({"verify", "drinfeld", "--input", fixture("zn2_constants.json")}).code, 0);
  EXPECT_EQ(invoke({"verify", "heisenberg", "--input", fixture("not_bialgebra.json")}).code, 1);
  EXPECT_EQ(invoke({"verify", "ybe", "--example", "s3"}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(invoke({"verify", "pentagon", "--example", "zn:99"}).code, 2);
  EXPECT_EQ(invoke({"verify", "pentagon", "--example", "a5"}).code, 2);
  EXPECT_EQ(invoke({"verify", "pentagon"}).code, 2);
  EXPECT_EQ(invoke({"verify", "pentagon", "--example", "zn:2", "--input", fixture("zn2_s.json")}).code, 2);
  EXPECT_EQ(invoke({"verify", "nonsense", "--example", "zn:2"}).code, 2);
  EXPECT_EQ(invoke({"verify", "pentagon", "--input", fixture("malformed.json")}).code, 2);
  EXPECT_EQ(invoke({"verify", "pentagon", "--input", fixture("field_mismatch.json")}).code, 2);
  EXPECT_EQ(invoke({"verify", "pentagon", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  const Result bad = invoke({"verify", "pentagon", "--input", fixture("bad_value.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("$.entries[1].value"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST(Cli, ReconstructWritesBialgebra) {
  const fs::path out = scratch("zn2_bialg.json");
  const fs::path diag = scratch("zn2_diag.json");
  const Result r = invoke({"reconstruct", "--input", fixture("zn2_s.json"), "--output", out.string(), "--diagnostics",
                           diag.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reconstructed dimension 2"), std::string::npos);
  const std::string text = pentagon::read_text(out);
  EXPECT_NE(text.find("\"dim\": 2"), std::string::npos);
  EXPECT_NE(text.find("\"G\""), std::string::npos);
  EXPECT_NE(text.find("\"F\""), std::string::npos);
  EXPECT_NE(pentagon::read_text(diag).find("\"relation\": \"pairing\""), std::string::npos);
  // deterministic bytes
  const fs::path again = scratch("zn2_bialg_again.json");
  invoke({"reconstruct", "--input", fixture("zn2_s.json"), "--output", again.string()});
  EXPECT_EQ(pentagon::read_text(again), text);
}

TEST(Cli, ReconstructExampleAndFailure) {
  EXPECT_EQ(invoke({"reconstruct", "--example", "s3", "--json"}).code, 0);
  EXPECT_EQ(invoke({"reconstruct", "--input", fixture("bad_value.json")}).code, 2);
}

TEST(Cli, RMatrix) {
  const Result r = invoke({"rmatrix", "--example", "zn:3", "--check", "ybe", "--check", "mixed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("yang_baxter"), std::string::npos);
  EXPECT_NE(r.out.find("mixed_pentagon_6"), std::string::npos);

  const fs::path out = scratch("zn2_r.json");
  EXPECT_EQ(invoke({"rmatrix", "--example", "zn:2", "--output", out.string()}).code, 0);
  const pentagon::OperatorFile file = pentagon::parse_operator_file(pentagon::read_text(out));
  EXPECT_EQ(file.legs_per_site, 2u);
  EXPECT_EQ(file.op.rows(), 16u);
  EXPECT_EQ(invoke({"verify", "ybe", "--input", out.string()}).code, 0);

  EXPECT_EQ(invoke({"rmatrix", "--input", fixture("zn2_s.json"), "--check", "ybe"}).code, 0);
  EXPECT_EQ(invoke({"rmatrix", "--example", "s3", "--check", "ybe"}).code, 2);
  EXPECT_EQ(invoke({"rmatrix", "--example", "zn:2", "--check", "bogus"}).code, 2);
}

TEST(Cli, RMatrixLargeOptIn) {
  EXPECT_EQ(invoke({"rmatrix", "--example", "s3", "--check", "ybe", "--allow-large"}).code, 0);
}

TEST(Cli, Dilog) {
  EXPECT_EQ(invoke({"dilog", "--degree", "4"}).code, 0);
  EXPECT_EQ(invoke({"dilog", "--degree", "4", "--set-w-zero", "--json"}).code, 0);
  const Result numeric = invoke({"dilog", "--degree", "4", "--numeric-q", "1/3"});
  EXPECT_EQ(numeric.code, 0);
  EXPECT_NE(numeric.out.find("q=1/3"), std::string::npos);
  EXPECT_EQ(invoke({"dilog", "--degree", "4", "--numeric-q", "1"}).code, 2);
  EXPECT_EQ(invoke({"dilog", "--degree", "4", "--numeric-q", "x"}).code, 2);
  EXPECT_EQ(invoke({"dilog", "--degree", "1"}).code, 2);
  EXPECT_EQ(invoke({"dilog"}).code, 2);
}

TEST(Cli, Weyl) {
  const Result r = invoke({"weyl", "--max-occupation", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"space_dim\": 64"), std::string::npos);
  EXPECT_EQ(invoke({"weyl", "--max-occupation", "0"}).code, 2);
}

TEST(Cli, CanonicalAndConstantsMatchFixtures) {
  EXPECT_EQ(invoke({"canonical", "--example", "zn:2"}).out, pentagon::read_text(fixture("zn2_s.json")));
  EXPECT_EQ(invoke({"constants", "--example", "zn:2"}).out, pentagon::read_text(fixture("zn2_constants.json")));
}
