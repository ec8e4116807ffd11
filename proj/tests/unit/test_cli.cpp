#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monogen_cli/cli.hpp"

using namespace monogen::cli;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monogen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json result_of(const RunResult& r) { return json::parse(r.out).at("result"); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, MonogenicExample) {
  const RunResult r = run_cli({"monogenic", "-k", "2", "-m", "2", "-n", "1", "-a", "2", "-c", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(result_of(r).at("status"), "Monogenic");
  const json full = json::parse(r.out);
  EXPECT_EQ(full.at("input").at("polynomial"), "x^4 + 2*x^2 - 2*x + 1");
  EXPECT_TRUE(full.at("header").contains("seed"));
  EXPECT_FALSE(full.contains("timings"));
}

TEST(Cli, GaloisExample) {
  const RunResult r = run_cli({"galois", "-k", "5", "-m", "6", "-n", "11", "-a", "21", "-c", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(result_of(r).at("verdict"), "SymmetricGroup");
  EXPECT_EQ(result_of(r).at("degree"), 30);
}

TEST(Cli, IndexExample) {
  const RunResult r = run_cli({"index", "-k", "1", "-m", "6", "-n", "2", "-a", "6", "-c", "25", "-p", "5"});
  EXPECT_EQ(r.code, 0);
  const json res = result_of(r);
  EXPECT_EQ(res.at("divides"), true);
  EXPECT_EQ(res.at("vp_index"), 1);
  EXPECT_EQ(res.at("vp_index_basis"), "theorem-backed");
}

TEST(Cli, BigIntegersAreStrings) {
  const RunResult r = run_cli({"disc", "-k", "2", "-m", "5", "-n", "1", "-a", "14", "-c", "1"});
  EXPECT_EQ(r.code, 0);
  const json res = result_of(r);
  EXPECT_TRUE(res.at("closed").is_string());
  EXPECT_EQ(res.at("closed"), res.at("oracle"));
  EXPECT_EQ(res.at("agree"), true);
}

TEST(Cli, NegativeArguments) {
  const RunResult r = run_cli({"monogenic", "-k", "2", "-m", "2", "-n", "1", "-a", "-2", "-c", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("input").at("a"), "-2");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"monogenic", "-k", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"monogenic", "-k", "1", "-m", "2", "-n", "2", "-a", "1", "-c", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"monogenic", "-k", "2", "-m", "2", "-n", "1", "-a", "x", "-c", "1"}).code, kExitUsage);
  // (x + 1)^2 - 4x = (x - 1)^2.
  const RunResult red = run_cli({"monogenic", "-k", "1", "-m", "2", "-n", "1", "-a", "4", "-c", "1"});
  EXPECT_EQ(red.code, kExitViolation);
  EXPECT_EQ(json::parse(red.out).at("error").at("kind"), "reducible");
  const std::vector<std::string> nm = {"monogenic", "-k", "2", "-m", "2", "-n", "1", "-a", "18", "-c", "1"};
  EXPECT_EQ(run_cli(nm).code, kExitOk);
  auto asserted = nm;
  asserted.push_back("--expect-monogenic");
  EXPECT_EQ(run_cli(asserted).code, kExitViolation);
  EXPECT_EQ(run_cli({"verify-paper"}).code, kExitOk);
  EXPECT_EQ(run_cli({"--version"}).code, kExitOk);
}

TEST(Cli, TinyBudgetIsUnknown) {
  const RunResult r =
      run_cli({"monogenic", "-k", "2", "-m", "7", "-n", "1", "-a", "14", "-c", "1", "--factor-budget", "1"});
  EXPECT_EQ(r.code, kExitUnknown);
  EXPECT_EQ(result_of(r).at("status"), "Unknown");
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"compose", "-k", "2", "-m", "2", "-n", "1", "-a", "2", "-c", "1", "--g", "37,37,0,1"};
  const RunResult a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto seeded = args;
  seeded.insert(seeded.end(), {"--seed", "42"});
  const json x = json::parse(run_cli(seeded).out), y = json::parse(a.out);
  EXPECT_EQ(x.at("result"), y.at("result"));
  EXPECT_EQ(x.at("header").at("seed"), "42");
}

TEST(Cli, TableMode) {
  const RunResult r = run_cli({"monogenic", "-k", "2", "-m", "2", "-n", "1", "-a", "2", "-c", "1", "--table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("result.status: Monogenic"), std::string::npos);
}

TEST(Cli, BatchPreservesOrderAndIsolatesErrors) {
  std::string body;
  for (long a = 2; a <= 40; a += 2) body += "{\"k\":2,\"m\":3,\"n\":1,\"a\":" + std::to_string(a) + ",\"c\":1}\n";
  body += "this is not json\n";
  body += "{\"k\":5,\"m\":6,\"n\":11,\"a\":\"21\",\"c\":3,\"command\":\"galois\"}\n";
  body += "{\"k\":2,\"m\":2,\"n\":1,\"a\":2,\"c\":1,\"unknown\":1}\n";
  const auto path = write_temp("monogen_batch_test.jsonl", body);
  const RunResult one = run_cli({"monogenic", "--batch", path.string(), "--workers", "1"});
  const RunResult four = run_cli({"monogenic", "--batch", path.string(), "--workers", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.code, kExitUsage);
  const auto ls = lines(one.out);
  ASSERT_EQ(ls.size(), 23u);
  for (std::size_t i = 0; i < ls.size(); ++i) EXPECT_EQ(json::parse(ls[i]).at("line"), i + 1);
  EXPECT_EQ(json::parse(ls[20]).at("error").at("kind"), "usage");
  EXPECT_EQ(json::parse(ls[21]).at("result").at("verdict"), "SymmetricGroup");
  EXPECT_EQ(json::parse(ls[22]).at("error").at("kind"), "usage");
  std::filesystem::remove(path);
}

TEST(Cli, RequestFromJson) {
  const Request r = request_from_json(json::parse(R"({"k":2,"m":3,"n":1,"a":"123456789012345678901234567890","c":-1,"g":[1,0,1]})"), Request{});
  EXPECT_EQ(r.a->get_str(), "123456789012345678901234567890");
  EXPECT_EQ(*r.c, -1);
  EXPECT_EQ(r.g->to_string(), "x^2 + 1");
  EXPECT_THROW(request_from_json(json::parse(R"({"k":-1})"), Request{}), UsageError);
  EXPECT_THROW(parse_poly("1,,x"), UsageError);
}

TEST(Cli, VerifyPaperLedger) {
  const auto ledger = verify_paper_ledger();
  EXPECT_GT(ledger.size(), 30u);
  for (const auto& e : ledger) EXPECT_TRUE(e.pass) << e.id << ": expected " << e.expected << ", computed " << e.computed;
}

TEST(Cli, SearchAndEnumerate) {
  const RunResult s = run_cli({"search-squarefree", "-k", "2", "-m", "3", "-n", "1", "--prime-bound", "30"});
  EXPECT_EQ(s.code, 0);
  bool seven = false;
  const json res = result_of(s);
  for (const auto& h : res.at("hits"))
    if (h.at("p").get<std::string>() == "7") seven = h.at("F(p)").get<std::string>() == "106469";
  EXPECT_TRUE(seven);
  const RunResult e = run_cli({"enumerate", "--q", "2", "-m", "3", "-n", "2", "--limit", "500"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(result_of(e).contains("a_convention"));
  EXPECT_TRUE(result_of(e).contains("y_convention"));
}
