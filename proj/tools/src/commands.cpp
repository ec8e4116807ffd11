#include <chrono>
#include <sstream>

#include "monogen_cli/cli.hpp"

namespace monogen::cli {

namespace {

std::string str(const Integer& n) { return n.get_str(); }

FamilyParams family(const Request& r) {
  if (!r.k || !r.m || !r.n || !r.a || !r.c) throw UsageError(r.command + ": -k -m -n -a -c are required");
  return FamilyParams(*r.k, *r.m, *r.n, *r.a, *r.c);
}

const Integer& need(const std::optional<Integer>& v, const std::string& what) {
  if (!v) throw UsageError("missing " + what);
  return *v;
}

json input_echo(const FamilyParams& prm) {
  return {{"k", prm.k()}, {"m", prm.m()}, {"n", prm.n()}, {"a", str(prm.a())}, {"c", str(prm.c())},
          {"polynomial", build_poly(prm).to_string()}};
}

MonogeneityOptions options(const Request& r) {
  MonogeneityOptions mo;
  mo.factor = r.budget;
  mo.short_circuit = false;
  return mo;
}

int cmd_disc(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  const IntPoly f = build_poly(prm);
  const Integer closed = discriminant_closed(prm), oracle = discriminant_oracle(f);
  const CeePair cee = compute_cee(prm);
  IrreducibilityResult ir = irreducible_over_Q(f);
  out["result"] = {{"closed", str(closed)},
                   {"oracle", str(oracle)},
                   {"agree", closed == oracle},
                   {"factored", to_json(factor_discriminant(prm, r.budget))},
                   {"cee", {{"C", str(cee.C)}, {"E", str(cee.E)}, {"difference", str(cee.difference())}}},
                   {"irreducibility", {{"verdict", to_string(ir.verdict)}, {"method", ir.method}}}};
  if (ir.verdict == Irreducibility::Irreducible && closed != oracle) return kExitViolation;
  return kExitOk;
}

int cmd_monogenic(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  MonogeneityResult res = is_monogenic(prm, options(r));
  out["result"] = to_json(res);
  if (res.status == MonogeneityStatus::Unknown) return kExitUnknown;
  if (res.status == MonogeneityStatus::NotMonogenic && r.expect_monogenic) return kExitViolation;
  return kExitOk;
}

int cmd_dedekind(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  const Integer& p = need(r.p, "--prime");
  json res = to_json(dedekind_divides_index(build_poly(prm), p));
  res["p_divides_discriminant"] = divides_discriminant(prm, p);
  out["result"] = res;
  return kExitOk;
}

int cmd_newton(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  const Integer& p = need(r.p, "--prime");
  const IntPoly f = build_poly(prm);
  if (r.phi) {
    PhiExpansion ex = phi_expansion(f, *r.phi, p);
    NewtonPolygonData np = newton_polygon(ex);
    json res = to_json(np);
    json residuals = json::array();
    for (const auto& rd : residual_polynomials(np, ex)) residuals.push_back(rd.R.to_string("y"));
    res["residuals"] = residuals;
    res["phi_index"] = phi_index(np);
    out["result"] = res;
    return kExitOk;
  }
  json res = to_json(is_p_regular(f, p));
  OreBound ob = ore_index_bound(f, p);
  res["ore_bound"] = {{"bound", ob.bound}, {"exact", ob.exact}};
  out["result"] = res;
  return kExitOk;
}

int cmd_splitting(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  SplittingType st = splitting_type(build_poly(prm), need(r.p, "--prime"));
  out["result"] = to_json(st);
  return st.regular ? kExitOk : kExitUnknown;
}

int cmd_index(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  const Integer& p = need(r.p, "--prime");
  SplittingType st = splitting_type(build_poly(prm), p);
  IndexReport idx = index_divisibility(st, p);
  VpIndexClaim claim = nonmonogeneity_vp_index(prm, p);
  json res = {{"splitting", to_json(st)}, {"index", to_json(idx)}, {"claim", to_json(claim)}};
  res["divides"] = idx.determined ? json(idx.divides) : json("Unknown");
  res["vp_index"] = claim.vp_index ? json(*claim.vp_index) : json("hypotheses-not-met");
  if (claim.vp_index) res["vp_index_basis"] = "theorem-backed";
  out["result"] = res;
  if (claim.vp_index && !claim.consistent) return kExitViolation;
  return idx.determined ? kExitOk : kExitUnknown;
}

int cmd_galois(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  out["input"] = input_echo(prm);
  out["result"] = to_json(galois_group_check(prm, r.budget));
  return kExitOk;
}

int cmd_compose(const Request& r, json& out) {
  const FamilyParams prm = family(r);
  if (!r.g) throw UsageError("compose: --g is required");
  json echo = input_echo(prm);
  echo["g"] = r.g->to_string();
  out["input"] = echo;
  CompositionCase cc = make_composition_case(prm, *r.g, r.budget);
  json ex = json::array();
  for (const auto& p : cc.exceptional) ex.push_back(str(p));
  HypothesisReport hyp = composition_hypotheses(cc);
  CompositionDiscriminant dc = discriminant_composition(build_poly(prm), *r.g);
  json res = {{"T", cc.T.to_string()}, {"exceptional_primes", ex}, {"hypotheses", to_json(hyp)}, {"discriminant", to_json(dc)}};
  int code = dc.magnitude_agrees ? kExitOk : kExitViolation;
  if (hyp.holds && r.g->is_monic()) {
    CompositionOptions co;
    co.monogeneity = options(r);
    CompositionResult cr = composition_monogenic(cc, co);
    json tr = to_json(cr);
    const bool equivalent = (cr.status == MonogeneityStatus::Monogenic) == (cr.f_status == MonogeneityStatus::Monogenic);
    tr["equivalence_holds"] = equivalent;
    res["transfer"] = tr;
    for (const auto& cp : cr.per_prime)
      if (!cp.agrees()) code = kExitViolation;
    if (!equivalent) code = kExitViolation;
  } else {
    res["transfer"] = {{"withheld", true},
                       {"reason", hyp.holds ? "g is not monic" : "hypotheses fail"}};
  }
  out["result"] = res;
  return code;
}

json family_count_json(const FamilyCount& fc, const MainTerm& mt) {
  json as = json::array(), fails = json::array();
  for (const auto& a : fc.monogenic_a) as.push_back(str(a));
  for (const auto& a : fc.certification_failures) fails.push_back(str(a));
  std::ostringstream dev;
  dev.precision(6);
  dev << static_cast<double>((static_cast<long double>(fc.count) - mt.value) / mt.value);
  return {{"count", fc.count},
          {"candidates", fc.candidates},
          {"unknown", fc.unknown},
          {"certification_failures", fails},
          {"relative_deviation", mt.value > 0 ? json(dev.str()) : json(nullptr)},
          {"monogenic_a", as}};
}

int cmd_enumerate(const Request& r, json& out) {
  if (!r.m || !r.n) throw UsageError("enumerate: -m -n are required");
  const Integer& q = need(r.q, "--q");
  const Integer& X = need(r.limit, "--limit");
  if (r.convention != "a" && r.convention != "y" && r.convention != "both")
    throw UsageError("--convention must be a, y or both");
  FamilyCountSpec spec(q, *r.m, *r.n, r.sign);
  out["input"] = {{"q", str(q)}, {"m", *r.m}, {"n", *r.n}, {"sign", r.sign}, {"limit", str(X)}};
  const MainTerm mt = family_main_term(spec, X, r.euler_truncation);
  json res = {{"spec",
               {{"j", spec.j()}, {"k", spec.k()}, {"s", spec.s()}, {"lambda", str(spec.lambda())},
                {"gamma", str(spec.gamma())}, {"alpha", str(spec.alpha())}, {"beta", str(spec.beta())}}},
              {"main_term", to_json(mt)}};
  int code = kExitOk;
  auto run_one = [&](CountConvention conv, const char* key) {
    FamilyCount fc = enumerate_monogenic_family(spec, X, conv, r.budget);
    res[key] = family_count_json(fc, mt);
    if (!fc.certification_failures.empty()) code = kExitViolation;
    else if (fc.unknown > 0 && code == kExitOk) code = kExitUnknown;
  };
  if (r.convention != "y") run_one(CountConvention::AValue, "a_convention");
  if (r.convention != "a") run_one(CountConvention::YValue, "y_convention");
  out["result"] = res;
  return code;
}

int cmd_search(const Request& r, json& out) {
  if (!r.k || !r.m || !r.n) throw UsageError("search-squarefree: -k -m -n are required");
  out["input"] = {{"k", *r.k}, {"m", *r.m}, {"n", *r.n}, {"sign", r.sign}, {"prime_bound", r.prime_bound}};
  SquarefreeSearch s = squarefree_value_search(*r.k, *r.m, *r.n, r.sign, r.prime_bound, r.budget);
  json hits = json::array(), rej = json::array(), und = json::array(), obs = json::array();
  int code = kExitOk;
  for (const auto& h : s.hits) {
    hits.push_back({{"p", str(h.p)}, {"F(p)", str(h.value.value())}, {"factored", to_json(h.value)},
                    {"certified", to_string(h.certified)}});
    if (h.certified != MonogeneityStatus::Monogenic) code = kExitViolation;
  }
  for (const auto& p : s.rejected) rej.push_back(str(p));
  for (const auto& p : s.undecided) und.push_back(str(p));
  for (const auto& p : s.local_obstructions) obs.push_back(str(p));
  if (code == kExitOk && !s.undecided.empty()) code = kExitUnknown;
  out["result"] = {{"F", s.F.to_string()}, {"hits", hits}, {"rejected", rej}, {"undecided", und},
                   {"local_obstructions_up_to_100", obs}};
  return code;
}

int cmd_verify(const Request& r, json& out) {
  json entries = json::array();
  unsigned long passed = 0, failed = 0;
  for (const auto& e : verify_paper_ledger(r.budget)) {
    entries.push_back({{"id", e.id}, {"expected", e.expected}, {"computed", e.computed}, {"pass", e.pass}});
    (e.pass ? passed : failed)++;
  }
  out["result"] = {{"entries", entries}, {"passed", passed}, {"failed", failed}};
  return failed == 0 ? kExitOk : kExitViolation;
}

int dispatch(const Request& r, json& out) {
  if (r.command == "disc") return cmd_disc(r, out);
  if (r.command == "monogenic") return cmd_monogenic(r, out);
  if (r.command == "dedekind") return cmd_dedekind(r, out);
  if (r.command == "newton") return cmd_newton(r, out);
  if (r.command == "splitting") return cmd_splitting(r, out);
  if (r.command == "index") return cmd_index(r, out);
  if (r.command == "galois") return cmd_galois(r, out);
  if (r.command == "compose") return cmd_compose(r, out);
  if (r.command == "enumerate") return cmd_enumerate(r, out);
  if (r.command == "search-squarefree") return cmd_search(r, out);
  if (r.command == "verify-paper") return cmd_verify(r, out);
  throw UsageError("unknown command: " + r.command);
}

Integer integer_field(const json& v, const std::string& key) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const std::exception&) {
      throw UsageError("field " + key + " is not an integer");
    }
  }
  throw UsageError("field " + key + " must be an integer or a decimal string");
}

unsigned long small_field(const json& v, const std::string& key) {
  Integer x = integer_field(v, key);
  if (x < 0 || !x.fits_ulong_p()) throw UsageError("field " + key + " must be a small nonnegative integer");
  return x.get_ui();
}

IntPoly poly_field(const json& v, const std::string& key) {
  if (v.is_string()) return parse_poly(v.get<std::string>());
  if (v.is_array()) {
    std::vector<Integer> cs;
    for (const auto& x : v) cs.push_back(integer_field(x, key));
    return IntPoly(std::move(cs));
  }
  throw UsageError("field " + key + " must be a coefficient list");
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
  std::vector<Integer> cs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      cs.push_back(parse_integer(item));
    } catch (const std::exception&) {
      throw UsageError("bad coefficient in polynomial: '" + item + "'");
    }
  }
  if (cs.empty()) throw UsageError("empty polynomial");
  return IntPoly(std::move(cs));
}

json header(const Request& r) {
  const IrreducibilityBudget ib;
  return {{"tool", "monogen"},
          {"version", kVersion},
          {"seed", std::to_string(r.seed)},
          {"factor_budget", {{"trial_bound", r.budget.trial_bound}, {"rho_iterations", r.budget.rho_iterations}}},
          {"irreducibility_budget",
           {{"shift_window", ib.shift_window},
            {"sieve_min_primes", ib.sieve_min_primes},
            {"sieve_max_primes", ib.sieve_max_primes},
            {"max_subsets", ib.max_subsets},
            {"max_degree", ib.max_degree}}},
          {"euler_truncation", r.euler_truncation}};
}

Request request_from_json(const json& line, const Request& defaults) {
  if (!line.is_object()) throw UsageError("batch line must be a JSON object");
  Request r = defaults;
  for (const auto& [key, v] : line.items()) {
    if (key == "k") r.k = small_field(v, key);
    else if (key == "m") r.m = small_field(v, key);
    else if (key == "n") r.n = small_field(v, key);
    else if (key == "a") r.a = integer_field(v, key);
    else if (key == "c") r.c = integer_field(v, key);
    else if (key == "p" || key == "prime") r.p = integer_field(v, key);
    else if (key == "q") r.q = integer_field(v, key);
    else if (key == "limit") r.limit = integer_field(v, key);
    else if (key == "g") r.g = poly_field(v, key);
    else if (key == "phi") r.phi = poly_field(v, key);
    else if (key == "sign") {
      const Integer s = integer_field(v, key);
      if (s != 1 && s != -1) throw UsageError("sign must be 1 or -1");
      r.sign = static_cast<int>(s.get_si());
    } else if (key == "prime_bound") r.prime_bound = small_field(v, key);
    else if (key == "factor_budget") {
      const unsigned long b = small_field(v, key);
      r.budget = FactorBudget{b, b};
    } else if (key == "euler_truncation") r.euler_truncation = small_field(v, key);
    else throw UsageError("unknown field: " + key);
  }
  return r;
}

Outcome execute(const Request& req) {
  Outcome o;
  o.report = {{"command", req.command}, {"header", header(req)}};
  const auto t0 = std::chrono::steady_clock::now();
  auto fail = [&o](const char* kind, const std::string& message, int code) {
    o.report["error"] = {{"kind", kind}, {"message", message}};
    o.exit_code = code;
  };
  try {
    o.exit_code = dispatch(req, o.report);
  } catch (const UsageError& e) {
    fail("usage", e.what(), kExitUsage);
  } catch (const ReducibleInputError& e) {
    fail("reducible", e.what(), kExitViolation);
    o.report["error"]["witness"] = e.witness().to_string();
  } catch (const UndecidedError& e) {
    fail("undecided", e.what(), kExitUnknown);
  } catch (const PreconditionError& e) {
    fail("precondition", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    fail("internal", e.what(), kExitViolation);
  }
  if (req.timings) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    o.report["timings"] = {{"elapsed_ms", ms}};
  }
  return o;
}

}  // namespace monogen::cli
