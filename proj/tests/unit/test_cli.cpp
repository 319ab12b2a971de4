#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdbell/cli.hpp"

using namespace pdbell::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pdbell");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(field);
      field.clear();
    } else if (ch == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(row);
      row.clear();
    } else {
      field += ch;
    }
  }
  return rows;
}

std::string as_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

TEST(Cli, TableExamples) {
  auto r = run({"table", "pdb", "--max-n", "3"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "# pdb\nn=0: 1\nn=1: 0 1\nn=2: 1 1 1\nn=3: 5 4 3 1\n");
  r = run({"table", "partial_derangement", "--n", "3"});
  EXPECT_EQ(r.out, "# partial_derangement\nn=3: 2 3 0 1\n");
  r = run({"table", "bell", "--max-n", "0"});
  EXPECT_EQ(r.out, "# bell\nn=0: 1\n");
  r = run({"table", "bernoulli", "--max-n", "2"});
  EXPECT_EQ(r.out, "# bernoulli\nn=0: 1\nn=1: -1/2\nn=2: 1/6\n");
}

TEST(Cli, EveryTableFamilyRenders) {
  for (const char* f : {"stirling2", "r_stirling2", "derangement", "partial_derangement", "bell", "complementary_bell",
                        "ordered_bell", "r_ordered_bell", "truncated_ordered_bell", "deranged_bell", "pdb", "pdb_poly",
                        "bernoulli", "higher_bernoulli"}) {
    const auto r = run({"table", f, "--max-n", "5", "--max-r", "2", "--format", "json"});
    ASSERT_EQ(r.code, exit_ok) << f << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["command"], "table");
    EXPECT_FALSE(doc["results"].empty()) << f;
  }
}

TEST(Cli, PdbPolyTableCoefficients) {
  const auto r = run({"table", "pdb_poly", "--n", "3", "--r", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "n,r,k,value\n3,2,0,0\n3,2,1,0\n3,2,2,3\n3,2,3,0\n");
}

TEST(Cli, EgfListing) {
  auto r = run({"egf", "deranged_bell", "--order", "5", "--format", "json"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  std::vector<std::string> scaled;
  for (const auto& row : doc["results"]) scaled.push_back(row["egf"]);
  EXPECT_EQ(scaled, (std::vector<std::string>{"1", "0", "1", "5", "28", "199"}));
  EXPECT_EQ(doc["results"][2]["coeff"], "1/2");
  r = run({"egf", "ordered_bell", "--order", "3", "--format", "csv"});
  EXPECT_EQ(r.out, "n,coeff,egf\n0,1,1\n1,1,1\n2,3/2,3\n3,13/6,13\n");
  r = run({"egf", "pdb", "--r", "1", "--y", "1/2", "--order", "3", "--format", "csv"});
  EXPECT_EQ(r.code, exit_ok) << r.err;
  r = run({"egf", "ordered_bell", "--order", "65"});
  EXPECT_EQ(r.code, exit_resource);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "thm_2_7", "--max-n", "20"}).code, exit_ok);
  const auto bad = run({"check", "no_such_id"});
  EXPECT_EQ(bad.code, exit_usage);
  EXPECT_NE(bad.err.find("no_such_id"), std::string::npos);
  EXPECT_EQ(run({"check", "thm_2_7", "--bogus-flag"}).code, exit_usage);
  EXPECT_EQ(run({"check", "thm_2_7", "--tol", "0"}).code, exit_usage);
  EXPECT_EQ(run({"check", "thm_2_7", "--max-n", "61"}).code, exit_resource);
  EXPECT_EQ(run({"check", "oracle_all", "--oracle-cap", "11"}).code, exit_resource);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"--help"}).code, exit_ok);
  // A printed form failing as expected does not fail the run.
  EXPECT_EQ(run({"check", "cor_3_5_b_printed"}).code, exit_ok);
}

TEST(Cli, InconclusiveSeriesExit) {
  // A tolerance far below what the term cap can certify.
  const auto tiny = run({"check", "thm_2_10_b", "--tol", "1e-4000", "--series-max-n", "2", "--series-max-r", "0"});
  EXPECT_EQ(tiny.code, exit_inconclusive) << tiny.out << tiny.err;
}

TEST(Cli, CheckAllReport) {
  const auto r = run({"check", "all", "--format", "json"});
  EXPECT_EQ(r.code, exit_ok);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "check");
  EXPECT_EQ(doc["overall"], "pass");
  EXPECT_EQ(doc["config"]["tolerance"], "1/1000000000");
  int known = 0;
  for (const auto& entry : doc["results"]) {
    for (const char* key : {"id", "status", "bounds", "ms"}) EXPECT_TRUE(entry.contains(key)) << key;
    if (entry["status"] == "known-failing-as-printed") {
      ++known;
      ASSERT_TRUE(entry.contains("witness"));
      for (const char* key : {"params", "lhs", "rhs"}) EXPECT_TRUE(entry["witness"].contains(key));
    }
  }
  EXPECT_EQ(known, 4);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "all", "--format", "json", "--max-n", "10"},
        std::vector<std::string>{"table", "pdb_poly", "--max-n", "6", "--format", "json"},
        std::vector<std::string>{"egf", "higher_bernoulli", "--r", "2", "--format", "json"},
        std::vector<std::string>{"oracle", "--max-n", "5", "--format", "json"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, CsvAndJsonCarrySameContent) {
  const std::vector<std::vector<std::string>> runs{
      {"table", "higher_bernoulli", "--max-n", "8", "--max-r", "3"},
      {"table", "r_stirling2", "--max-n", "6", "--max-r", "2"},
      {"egf", "pdb", "--r", "2", "--y", "-1/3", "--order", "10"},
      {"oracle", "--max-n", "4"},
  };
  for (auto args : runs) {
    auto json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    args.insert(args.end(), {"--format", "csv"});
    const auto doc = nlohmann::json::parse(run(json_args).out);
    const auto rows = parse_csv(run(args).out);
    ASSERT_EQ(rows.size(), doc["results"].size() + 1);
    const auto& header = rows.front();
    for (std::size_t i = 0; i < doc["results"].size(); ++i)
      for (std::size_t c = 0; c < header.size(); ++c)
        EXPECT_EQ(rows[i + 1][c], as_text(doc["results"][i][header[c]])) << header[c];
  }
  // Reports: one CSV row per check, same statuses and witnesses.
  const auto doc = nlohmann::json::parse(run({"check", "all", "--max-n", "8", "--format", "json"}).out);
  const auto rows = parse_csv(run({"check", "all", "--max-n", "8", "--format", "csv"}).out);
  ASSERT_EQ(rows.size(), doc["results"].size() + 1);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"id", "status", "bounds", "witness_params", "lhs", "rhs", "message", "ms"}));
  for (std::size_t i = 0; i < doc["results"].size(); ++i) {
    const auto& e = doc["results"][i];
    EXPECT_EQ(rows[i + 1][0], e["id"]);
    EXPECT_EQ(rows[i + 1][1], e["status"]);
    if (e.contains("witness")) {
      EXPECT_EQ(rows[i + 1][4], e["witness"]["lhs"]);
      EXPECT_EQ(rows[i + 1][5], e["witness"]["rhs"]);
    }
  }
}

TEST(Cli, OracleCommand) {
  auto r = run({"oracle", "--max-n", "4"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("n=3: 5 4 3 1"), std::string::npos);
  EXPECT_NE(r.out.find("all cells equal"), std::string::npos);
  r = run({"oracle", "--max-n", "9"});
  EXPECT_EQ(r.code, exit_resource);
  EXPECT_NE(r.err.find("7087261"), std::string::npos) << r.err;
  EXPECT_EQ(run({"oracle", "--max-n", "11", "--oracle-cap", "11"}).code, exit_resource);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "pdbell_cli_out.json";
  const auto r = run({"table", "ordered_bell", "--max-n", "4", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["results"][4]["value"], "75");
  std::remove(path.c_str());
  EXPECT_EQ(run({"table", "bell", "--out", "/nonexistent-dir/x.txt"}).code, exit_usage);
}

TEST(Cli, TableErrors) {
  EXPECT_EQ(run({"table", "nonsense"}).code, exit_usage);
  EXPECT_EQ(run({"table", "pdb", "--max-n", "201"}).code, exit_resource);
  EXPECT_EQ(run({"table", "pdb", "--n", "-1"}).code, exit_usage);
  EXPECT_EQ(run({"table", "pdb", "--format", "xml"}).code, exit_usage);
}
