#include <algorithm>
#include <sstream>

#include "monogen_cli/cli.hpp"

namespace monogen::cli {

namespace {

std::string str(const Integer& n) { return n.get_str(); }

json witnesses_json(const std::map<std::string, Integer>& w) {
  json out = json::object();
  for (const auto& [k, v] : w) out[k] = str(v);
  return out;
}

template <class P>
json factor_list(const P& fac, const std::string& var) {
  json out = json::array();
  for (const auto& [g, e] : fac.factors) out.push_back({{"factor", g.to_string(var)}, {"multiplicity", e}});
  return out;
}

json side_json(const Side& s) {
  return {{"slope", "-" + std::to_string(s.h) + "/" + std::to_string(s.e)},
          {"h", s.h},
          {"e", s.e},
          {"start", {s.start, s.start_height}},
          {"end", {s.end(), s.end_height()}},
          {"length", s.length},
          {"degree", s.degree()}};
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    if (j.empty()) os << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    const bool scalar = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    if (scalar) {
      os << path << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

json to_json(const FactoredInteger& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"p", str(p)}, {"e", e}});
  json out = {{"sign", f.sign},
              {"factors", factors},
              {"cofactor", str(f.cofactor)},
              {"complete", f.complete()},
              {"text", to_string(f)}};
  if (f.probable) out["probable_primes"] = true;
  return out;
}

json to_json(const IntPoly& f) { return f.to_string(); }

json to_json(const PrimeVerdict& v) {
  json out = {{"p", str(v.p)}, {"case", to_string(v.case_label)}, {"passes", v.passes}, {"witnesses", witnesses_json(v.witnesses)}};
  if (v.t_poly) out["t_poly"] = v.t_poly->to_string();
  return out;
}

json to_json(const MonogeneityResult& r) {
  json per = json::array();
  for (const auto& v : r.per_prime) per.push_back(to_json(v));
  return {{"status", to_string(r.status)},
          {"failing_prime", r.failing_prime ? json(str(*r.failing_prime)) : json(nullptr)},
          {"per_prime", per},
          {"discriminant", to_json(r.discriminant)},
          {"irreducibility", r.irreducibility_method}};
}

json to_json(const DedekindReport& r) {
  return {{"p", str(r.p)},
          {"factorization", factor_list(r.factorization, "x")},
          {"M", r.M.to_string()},
          {"divides_index", r.divides_index},
          {"offending_factor", r.offending_factor ? json(r.offending_factor->to_string()) : json(nullptr)}};
}

json to_json(const NewtonPolygonData& np) {
  json pts = json::array(), hull = json::array(), sides = json::array(), principal = json::array();
  for (const auto& q : np.points) pts.push_back({q.i, q.v});
  for (const auto& q : np.hull) hull.push_back({q.i, q.v});
  for (const auto& s : np.sides) sides.push_back(side_json(s));
  for (const auto& s : np.principal) principal.push_back(side_json(s));
  return {{"p", str(np.p)}, {"phi", np.phi.to_string()}, {"points", pts}, {"hull", hull}, {"sides", sides}, {"principal", principal}};
}

json to_json(const RegularityReport& r) {
  json rep = json::array(), simple = json::array();
  for (const auto& f : r.repeated) {
    json res = json::array();
    for (std::size_t i = 0; i < f.residuals.size(); ++i) {
      const auto& rd = f.residuals[i];
      json on = json::array();
      for (bool b : rd.on_side) on.push_back(b);
      res.push_back({{"side", side_json(rd.side)}, {"R", rd.R.to_string("y")}, {"on_side", on}, {"squarefree", bool(f.side_squarefree[i])}});
    }
    rep.push_back({{"phi", f.phi.to_string()},
                   {"multiplicity", f.multiplicity},
                   {"polygon", to_json(f.polygon)},
                   {"residuals", res},
                   {"phi_index", f.index},
                   {"regular", f.regular()}});
  }
  for (const auto& s : r.simple) simple.push_back(s.to_string());
  return {{"p", str(r.p)}, {"regular", r.regular}, {"repeated_factors", rep}, {"simple_factors", simple}};
}

json to_json(const SplittingType& st) {
  json primes = json::array(), breakdown = json::array();
  for (const auto& q : st.primes) primes.push_back({{"e", q.e}, {"f", q.f}});
  for (const auto& ps : st.breakdown) {
    json pp = json::array();
    for (const auto& q : ps.primes) pp.push_back({{"e", q.e}, {"f", q.f}});
    breakdown.push_back({{"phi", ps.phi.to_string()}, {"primes", pp}});
  }
  json out = {{"p", str(st.p)},
              {"status", st.regular ? "Determined" : "Undetermined"},
              {"regular", st.regular},
              {"primes", primes},
              {"breakdown", breakdown}};
  if (st.regular) out["sum_ef"] = st.total_degree();
  return out;
}

json to_json(const IndexReport& r) {
  json counts = json::object();
  for (const auto& [f, c] : r.residue_degree_counts) counts[std::to_string(f)] = c;
  json out = {{"p", str(r.p)}, {"determined", r.determined}, {"divides", r.divides}, {"residue_degree_counts", counts}};
  if (r.witness_degree) out["witness"] = {{"f", *r.witness_degree}, {"count", r.residue_degree_counts.at(*r.witness_degree)}, {"N_f", str(r.witness_bound)}};
  return out;
}

json to_json(const VpIndexClaim& c) {
  json clauses = json::array();
  for (const auto& [name, ok] : c.clauses) clauses.push_back({{"clause", name}, {"holds", ok}});
  json out = {{"hypotheses_met", c.hypotheses_met}, {"clauses", clauses}};
  if (c.failing_clause) out["failing_clause"] = *c.failing_clause;
  if (c.vp_index) {
    out["vp_index"] = *c.vp_index;
    out["vp_index_basis"] = "theorem-backed";
    out["consistent"] = c.consistent;
  } else {
    out["vp_index"] = "hypotheses-not-met";
  }
  return out;
}

json to_json(const GaloisVerdict& v) {
  json cert = json::array();
  for (const auto& c : v.certificate) cert.push_back({{"clause", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  return {{"degree", v.degree},
          {"verdict", to_string(v.verdict)},
          {"group", v.verdict == GaloisGroupVerdict::SymmetricGroup ? json("S" + std::to_string(v.degree)) : json(nullptr)},
          {"q", v.q},
          {"q_prime", v.q_prime},
          {"q_in_interval", v.q_in_interval},
          {"p", v.p ? json(str(*v.p)) : json(nullptr)},
          {"edge_verified", v.edge_verified},
          {"parity", v.parity_value},
          {"ell", v.ell ? json(str(*v.ell)) : json(nullptr)},
          {"v_ell_a", v.v_ell_a},
          {"discriminant_square", v.discriminant_square ? json(*v.discriminant_square) : json("undecided")},
          {"certificate", cert}};
}

json to_json(const HypothesisReport& h) {
  json clauses = json::array();
  for (const auto& c : h.clauses) {
    json j = {{"clause", c.name}, {"holds", c.holds}};
    if (c.prime) j["p"] = str(*c.prime);
    clauses.push_back(j);
  }
  json out = {{"holds", h.holds}, {"clauses", clauses}};
  if (h.first_failure) {
    out["first_failure"] = {{"clause", h.first_failure->name}};
    if (h.first_failure->prime) out["first_failure"]["p"] = str(*h.first_failure->prime);
  }
  return out;
}

json to_json(const CompositionResult& r) {
  json per = json::array();
  for (const auto& cp : r.per_prime)
    per.push_back({{"p", str(cp.p)},
                   {"f_case", to_string(cp.f_verdict.case_label)},
                   {"f_passes", cp.f_verdict.passes},
                   {"T_divides_index", cp.T_divides_index},
                   {"agrees", cp.agrees()}});
  json nc = json::array();
  for (const auto& p : r.not_covered) nc.push_back(str(p));
  return {{"status", to_string(r.status)},
          {"failing_prime", r.failing_prime ? json(str(*r.failing_prime)) : json(nullptr)},
          {"per_prime", per},
          {"f_status", to_string(r.f_status)},
          {"not_covered", {{"primes", nc}, {"complete", r.not_covered_complete}, {"note", "outside the primes of D_f"}}}};
}

json to_json(const CompositionDiscriminant& d) {
  return {{"value", str(d.value)}, {"closed_magnitude", str(d.closed_magnitude)}, {"magnitude_agrees", d.magnitude_agrees}};
}

json to_json(const MainTerm& t) {
  auto fmt = [](long double v) {
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(v);
    return os.str();
  };
  return {{"coefficient", fmt(t.coefficient)}, {"value", fmt(t.value)}, {"lower", fmt(t.lower)}, {"upper", fmt(t.upper)}};
}

std::string render_table(const json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace monogen::cli
