#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "monogen_cli/cli.hpp"

namespace monogen::cli {

namespace {

struct RawArgs {
  std::optional<unsigned long> k, m, n;
  std::string a, c, p, q, limit, g, phi;
  int sign = 1;
  unsigned long prime_bound = 100;
  std::string convention = "both";
  std::optional<unsigned long> factor_budget;
  unsigned long euler_truncation = kDefaultEulerTruncation;
  std::uint64_t seed = kDefaultSplitSeed;
  bool json_out = false, table_out = false;
  unsigned workers = 1;
  std::string batch;
  bool expect_monogenic = false, timings = false;
};

void add_options(CLI::App* sub, RawArgs& raw) {
  sub->add_option("-k,--k", raw.k, "exponent k in (x^k + c)^m - a x^n");
  sub->add_option("-m,--m", raw.m, "exponent m");
  sub->add_option("-n,--n", raw.n, "exponent n");
  sub->add_option("-a,--a", raw.a, "coefficient a (any size)");
  sub->add_option("-c,--c", raw.c, "constant c (any size)");
  sub->add_option("-p,--prime", raw.p, "prime p");
  sub->add_option("--q", raw.q, "prime q for enumerate");
  sub->add_option("--g", raw.g, "inner polynomial g, ascending coefficients, e.g. 37,37,0,1");
  sub->add_option("--phi", raw.phi, "monic phi for newton, ascending coefficients");
  sub->add_option("--sign", raw.sign, "sign of the constant, 1 or -1")->check(CLI::IsMember({1, -1}));
  sub->add_option("--limit", raw.limit, "counting bound X");
  sub->add_option("--prime-bound", raw.prime_bound, "search primes up to this bound");
  sub->add_option("--convention", raw.convention, "count a <= X, a = q y with y <= X, or both")
      ->check(CLI::IsMember({"a", "y", "both"}));
  sub->add_option("--factor-budget", raw.factor_budget, "trial division bound and Pollard rho iterations");
  sub->add_option("--euler-truncation", raw.euler_truncation, "Euler product truncation P");
  sub->add_option("--seed", raw.seed, "seed for randomized root finding");
  auto* j = sub->add_flag("--json", raw.json_out, "JSON output (default)");
  auto* t = sub->add_flag("--table", raw.table_out, "human-readable output");
  j->excludes(t);
  sub->add_option("--workers", raw.workers, "batch worker threads, 0 for all cores");
  sub->add_option("--batch", raw.batch, "JSONL file of requests, - for stdin");
  sub->add_flag("--expect-monogenic", raw.expect_monogenic, "exit 1 when the verdict is NotMonogenic");
  sub->add_flag("--timings", raw.timings, "add wall-clock timings to the report");
}

Integer integer_arg(const std::string& s, const char* name) {
  try {
    return parse_integer(s);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " is not an integer: " + s);
  }
}

Request to_request(const std::string& command, const RawArgs& raw) {
  Request r;
  r.command = command;
  r.k = raw.k;
  r.m = raw.m;
  r.n = raw.n;
  auto opt = [](const std::string& s, const char* name) -> std::optional<Integer> {
    if (s.empty()) return std::nullopt;
    return integer_arg(s, name);
  };
  r.a = opt(raw.a, "-a");
  r.c = opt(raw.c, "-c");
  r.p = opt(raw.p, "--prime");
  r.q = opt(raw.q, "--q");
  r.limit = opt(raw.limit, "--limit");
  if (!raw.g.empty()) r.g = parse_poly(raw.g);
  if (!raw.phi.empty()) r.phi = parse_poly(raw.phi);
  r.sign = raw.sign;
  r.prime_bound = raw.prime_bound;
  r.convention = raw.convention;
  if (raw.factor_budget) r.budget = FactorBudget{*raw.factor_budget, *raw.factor_budget};
  r.euler_truncation = raw.euler_truncation;
  r.seed = raw.seed;
  r.expect_monogenic = raw.expect_monogenic;
  r.timings = raw.timings;
  return r;
}

std::string render(const json& report, bool table) { return table ? render_table(report) : report.dump() + "\n"; }

Outcome batch_line(const std::string& line, std::size_t number, const Request& defaults) {
  Outcome o;
  try {
    json j = json::parse(line);
    Request r = defaults;
    if (j.is_object() && j.contains("command")) {
      if (!j["command"].is_string()) throw UsageError("command must be a string");
      r.command = j["command"].get<std::string>();
      j.erase("command");
    }
    o = execute(request_from_json(j, r));
  } catch (const std::exception& e) {
    o.report = {{"error", {{"kind", "usage"}, {"message", e.what()}}}};
    o.exit_code = kExitUsage;
  }
  o.report["line"] = number;
  return o;
}

int run_batch(std::istream& in, const Request& defaults, unsigned workers, bool table, std::ostream& out) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t i = 1; std::getline(in, line); ++i)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.emplace_back(i, line);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, lines.size()))));

  // Workers fill slots out of order; the writer drains them in input order.
  std::vector<std::optional<Outcome>> slots(lines.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
      Outcome o = batch_line(lines[i].second, lines[i].first, defaults);
      {
        std::lock_guard lk(mu);
        slots[i] = std::move(o);
      }
      cv.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

  int code = kExitOk;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    Outcome o;
    {
      std::unique_lock lk(mu);
      cv.wait(lk, [&] { return slots[i].has_value(); });
      o = std::move(*slots[i]);
      slots[i].reset();
    }
    out << render(o.report, table);
    if (table) out << "\n";
    code = std::max(code, o.exit_code);
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monogeneity of (x^k + c)^m - a x^n", "monogen"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RawArgs raw;
  const std::pair<const char*, const char*> commands[] = {
      {"disc", "discriminant by closed formula and by resultant"},
      {"monogenic", "decide monogeneity prime by prime"},
      {"dedekind", "Dedekind criterion at a prime"},
      {"newton", "phi-Newton polygon, residual polynomials, p-regularity"},
      {"splitting", "splitting type of a p-regular prime"},
      {"index", "prime divisors of the index and theorem-backed v_p(index)"},
      {"galois", "certify a full symmetric Galois group"},
      {"compose", "monogeneity transfer to f(g(x))"},
      {"enumerate", "count monogenic members of a binomial family"},
      {"search-squarefree", "primes p with f(x) = (x^k + sign)^m - p x^n of squarefree discriminant"},
      {"verify-paper", "recompute the published tables and worked examples"},
  };
  for (const auto& [name, help] : commands) add_options(app.add_subcommand(name, help), raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Request req;
  try {
    req = to_request(command, raw);
  } catch (const std::exception& e) {
    err << "monogen: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!raw.batch.empty()) {
    if (raw.batch == "-") return run_batch(std::cin, req, raw.workers, raw.table_out, out);
    std::ifstream in(raw.batch);
    if (!in) {
      err << "monogen: cannot open " << raw.batch << "\n";
      return kExitUsage;
    }
    return run_batch(in, req, raw.workers, raw.table_out, out);
  }
  const Outcome o = execute(req);
  out << render(o.report, raw.table_out);
  out.flush();
  if (o.report.contains("error")) err << "monogen: " << o.report["error"]["message"].get<std::string>() << "\n";
  return o.exit_code;
}

}  // namespace monogen::cli
