#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "monogen/arith.hpp"
#include "monogen/composition.hpp"
#include "monogen/counting.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/galois.hpp"
#include "monogen/irreducibility.hpp"
#include "monogen/monogeneity.hpp"
#include "monogen/newton.hpp"

namespace monogen::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kVersion = "0.1.0";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Request {
  std::string command;
  std::optional<unsigned long> k, m, n;
  std::optional<Integer> a, c, p, q, limit;
  std::optional<IntPoly> g, phi;
  int sign = 1;
  unsigned long prime_bound = 100;
  std::string convention = "both";
  FactorBudget budget;
  unsigned long euler_truncation = kDefaultEulerTruncation;
  std::uint64_t seed = kDefaultSplitSeed;
  bool expect_monogenic = false;
  bool timings = false;
};

struct Outcome {
  json report;
  int exit_code = kExitOk;
};

// Never throws: failures become an "error" object in the report.
Outcome execute(const Request& req);

// Batch line: keys k, m, n, a, c and optional p, q, g, phi, sign, limit,
// prime_bound, factor_budget, euler_truncation over the given defaults.
Request request_from_json(const json& line, const Request& defaults);

// Ascending comma-separated coefficients, e.g. "37,37,0,1".
IntPoly parse_poly(const std::string& text);

json header(const Request& req);
json to_json(const FactoredInteger& f);
json to_json(const IntPoly& f);
json to_json(const PrimeVerdict& v);
json to_json(const MonogeneityResult& r);
json to_json(const DedekindReport& r);
json to_json(const NewtonPolygonData& np);
json to_json(const RegularityReport& r);
json to_json(const SplittingType& st);
json to_json(const IndexReport& r);
json to_json(const VpIndexClaim& c);
json to_json(const GaloisVerdict& v);
json to_json(const HypothesisReport& h);
json to_json(const CompositionResult& r);
json to_json(const CompositionDiscriminant& d);
json to_json(const MainTerm& t);

struct LedgerEntry {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<LedgerEntry> verify_paper_ledger(const FactorBudget& budget = {});

// Human-readable rendering: one "path: value" line per leaf.
std::string render_table(const json& report);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monogen::cli
