#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "cmt/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cmt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(CMT_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"phi_5.txt", {"phi", "5"}},
      {"psi_2.txt", {"psi", "2"}},
      {"hn_2_oracle.txt", {"hn", "2", "--oracle", "50"}},
      {"gn_7.txt", {"gn", "7"}},
      {"order_gsp_2_3.txt", {"order", "gsp", "--n", "2", "--mod", "3", "--brute"}},
      {"lg.txt", {"lg", "--g", "2", "--p", "3", "--m", "1"}},
      {"cconst.txt", {"cconst", "--d", "4", "--dm", "2", "--em", "2", "--h", "0", "--p", "2"}},
      {"tables_verify.txt", {"tables", "verify"}},
      {"bound_cyclotomic.txt", {"bound", "cyclotomic", "--g", "1", "--p", "5", "--dk", "1"}},
      {"bound_cyclotomic.json", {"bound", "cyclotomic", "--g", "1", "--p", "5", "--dk", "1", "--json"}},
      {"bound_lubin_tate_g2.json", {"--json", "bound", "lubin-tate", "--g", "2", "--p", "5"}},
      {"bound_kummer.json", {"--json", "bound", "kummer", "--g", "1", "--p", "3", "--dK", "1"}},
      {"bound_kummer_good.json", {"--json", "bound", "kummer-good", "--g", "1", "--p", "5"}},
      {"bound_good.json", {"--json", "bound", "good", "--g", "1", "--p", "2"}},
      {"bound_ordinary.json", {"--json", "bound", "ordinary", "--g", "1", "--p", "5"}},
      {"bound_number_field.json", {"--json", "bound", "number-field", "--g", "1", "--d", "1", "--h", "1"}},
      {"bound_number_field.txt", {"bound", "number-field", "--g", "1", "--d", "1", "--h", "1", "--ramified", "7"}},
  };
  return cases;
}

}  // namespace

TEST(Cli, GoldenOutputs) {
  for (const auto& c : golden_cases()) {
    const CliRun r = run(c.args);
    EXPECT_EQ(r.code, 0) << c.file << '\n' << r.err;
    EXPECT_EQ(r.out, golden(c.file)) << c.file;
  }
}

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(run({"phi", "5"}).out, "Φ(5) = 22 = 2 · 11\n");
  EXPECT_EQ(run({"tables", "verify"}).out, "PHI 120/120  H 25/25  G 7/7\n");
  const json doc = json::parse(run({"bound", "cyclotomic", "--g", "1", "--p", "5", "--dk", "1", "--json"}).out);
  EXPECT_EQ(doc["exponent_C"], "1156");
  EXPECT_EQ(doc["cap"]["p"], "5");
  EXPECT_EQ(doc["cap"]["exponent"], "2312");
  EXPECT_EQ(doc["cap"]["factored"], json::parse(R"([["5","2312"]])"));
}

TEST(Cli, JsonSchemaShape) {
  for (const auto& c : golden_cases()) {
    if (std::string(c.file).find("bound_") != 0 || std::string(c.file).find(".json") == std::string::npos) continue;
    const json doc = json::parse(run(c.args).out);
    for (const char* key : {"theorem_id", "inputs", "checks", "intermediates", "exponent_C", "exponent_C_ceil",
                            "conditional", "cap", "notes"}) {
      EXPECT_TRUE(doc.contains(key)) << c.file << ' ' << key;
    }
    for (const char* key : {"p", "primes", "exponent", "factored"}) EXPECT_TRUE(doc["cap"].contains(key)) << key;
    for (const auto& check : doc["checks"]) {
      const std::string v = check["verdict"];
      EXPECT_TRUE(v == "passed" || v == "failed" || v == "not-checkable-from-inputs") << v;
    }
    // No raw JSON numbers anywhere: big values travel as decimal strings.
    std::function<void(const json&)> no_numbers = [&](const json& j) {
      EXPECT_FALSE(j.is_number()) << c.file;
      if (j.is_structured()) {
        for (const auto& child : j) no_numbers(child);
      }
    };
    no_numbers(doc);
  }
}

TEST(Cli, TextAndJsonAgree) {
  const std::vector<std::vector<std::string>> bound_args = {
      {"bound", "cyclotomic", "--g", "2", "--p", "7", "--dk", "3"},
      {"bound", "kummer", "--g", "1", "--p", "2"},
      {"bound", "kummer-good", "--g", "2", "--p", "3", "--dK", "6"},
      {"bound", "lubin-tate", "--g", "1", "--p", "3", "--mu", "2", "--dk", "2", "--fk", "1", "--dKk", "2"},
      {"bound", "good", "--g", "1", "--p", "5", "--mu", "2", "--dKk", "3"},
      {"bound", "ordinary", "--g", "2", "--p", "3", "--mu", "2"},
      {"bound", "number-field", "--g", "1", "--d", "2", "--h", "1", "--ramified", "13"},
  };
  for (auto args : bound_args) {
    const CliRun text = run(args);
    args.push_back("--json");
    const json doc = json::parse(run(args).out);
    ASSERT_EQ(text.code, 0) << text.err;
    EXPECT_NE(text.out.find(doc["exponent_C"].get<std::string>()), std::string::npos) << text.out;
    EXPECT_NE(text.out.find("^" + doc["cap"]["exponent"].get<std::string>()), std::string::npos) << text.out;
    for (const auto& [k, v] : doc["intermediates"].items()) {
      EXPECT_NE(text.out.find(v.get<std::string>()), std::string::npos) << k;
    }
    for (const auto& p : doc["cap"]["primes"]) EXPECT_NE(text.out.find(p.get<std::string>()), std::string::npos);
  }
  for (const char* cmd : {"phi", "psi", "hn", "gn"}) {
    for (const char* n : {"1", "3", "7"}) {
      const CliRun text = run({cmd, n});
      const json doc = json::parse(run({"--json", cmd, n}).out);
      EXPECT_NE(text.out.find("= " + doc["value"].get<std::string>()), std::string::npos) << cmd << ' ' << n;
      std::string factored;
      for (const auto& f : doc["factored"]) {
        if (!factored.empty()) factored += " · ";
        factored += f[0].get<std::string>();
        if (f[1] != "1") factored += "^" + f[1].get<std::string>();
      }
      EXPECT_NE(text.out.find(factored), std::string::npos) << cmd << ' ' << n;
    }
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cmt::cli::kInvalidInput);
  EXPECT_EQ(run({"phi"}).code, cmt::cli::kInvalidInput);
  EXPECT_EQ(run({"phi", "abc"}).code, cmt::cli::kInvalidInput);
  EXPECT_EQ(run({"frobnicate"}).code, cmt::cli::kInvalidInput);
  EXPECT_EQ(run({"bound", "cyclotomic", "--g", "1", "--p", "4"}).code, cmt::cli::kInvalidInput);
  EXPECT_EQ(run({"phi", "2000000"}).code, cmt::cli::kCapExceeded);
  EXPECT_EQ(run({"bound", "number-field", "--g", "3", "--d", "4", "--h", "5"}).code, cmt::cli::kCapExceeded);
  EXPECT_EQ(run({"order", "gl", "--n", "5", "--mod", "7", "--brute"}).code, cmt::cli::kCapExceeded);
  EXPECT_EQ(run({"--help"}).code, cmt::cli::kOk);
  const CliRun usage = run({"phi"});
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
}

TEST(Cli, FixtureMismatchExitCode) {
  const std::string dir = ::testing::TempDir() + "/cmt_fixtures";
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(std::string(CMT_DATA_DIR) + "/phi.txt", dir + "/phi.txt",
                             std::filesystem::copy_options::overwrite_existing);
  std::filesystem::copy_file(std::string(CMT_DATA_DIR) + "/h.txt", dir + "/h.txt",
                             std::filesystem::copy_options::overwrite_existing);
  std::ifstream in(std::string(CMT_DATA_DIR) + "/g.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string g = ss.str();
  g.replace(g.find("1: 2^4"), 6, "1: 2^5");
  std::ofstream(dir + "/g.txt") << g;
  const CliRun ok = run({"tables", "verify", "h", "--fixture-dir", dir});
  EXPECT_EQ(ok.code, cmt::cli::kOk) << ok.err;
  const CliRun bad = run({"tables", "verify", "--fixture-dir", dir});
  EXPECT_EQ(bad.code, cmt::cli::kFixtureMismatch);
  EXPECT_NE(bad.out.find("G 6/7"), std::string::npos) << bad.out;
}

TEST(Cli, RosserAndSweeps) {
  const CliRun r = run({"check", "rosser", "223092870", "--variant", "5/2"});
  EXPECT_NE(r.out.find("fails=1"), std::string::npos) << r.out;
  const json doc = json::parse(run({"--json", "check", "phi-bounds", "1..300"}).out);
  EXPECT_TRUE(doc["failures"].empty());
  EXPECT_EQ(run({"check", "h-bound", "1..40"}).code, 0);
  EXPECT_EQ(run({"check", "h-bound", "9..3"}).code, cmt::cli::kInvalidInput);
}
