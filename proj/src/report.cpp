#include "qzf/report.hpp"

#include <sstream>

#include "qzf/error.hpp"

namespace qzf {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Corrected:
      return "corrected";
    case Verdict::Skipped:
      return "skipped(cap)";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "corrected") return Verdict::Corrected;
  if (s == "skipped(cap)") return Verdict::Skipped;
  throw SpecError("unknown verdict: " + s);
}

void Report::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)});
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::Fail) return false;
  return true;
}

bool Report::any_skipped() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::Skipped) return true;
  return false;
}

namespace {

// Every number leaves as an exact decimal string.
Json exact(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  if (j.is_number_float()) throw Error("floating point value in report");
  if (j.is_array() || j.is_object()) {
    Json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = exact(*it);
    return out;
  }
  return j;
}

int as_int(const Json& j) { return j.is_string() ? std::stoi(j.get<std::string>()) : j.get<int>(); }

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["args"] = exact(args);
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  j["checks"] = cs;
  j["passed"] = passed();
  j["data"] = exact(data);
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args");
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), parse_verdict(c.at("verdict").get<std::string>()),
                        c.at("detail").get<std::string>()});
  r.data = j.at("data");
  return r;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "[" << to_string(c.verdict) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

int common_conductor(const Polynomial& p, int conductor) {
  long m = conductor;
  for (const auto& t : p.terms()) m = lcm_conductor(m, t.second.conductor());
  return static_cast<int>(m);
}

}  // namespace

Json to_json(const Polynomial& p, int conductor) {
  conductor = common_conductor(p, conductor);
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m.a, m.b, c.lifted(conductor).str()}));
  return {{"conductor", conductor}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  const int m = as_int(j.at("conductor"));
  Polynomial p;
  for (const auto& t : j.at("terms"))
    p.add_term(Monomial{as_int(t.at(0)), as_int(t.at(1))}, Cyclotomic::parse(t.at(2).get<std::string>(), m));
  return p;
}

namespace {

Json vec(const GVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

template <typename T>
Json strings(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

Json to_json(const NumerologyReport& r) {
  return {{"group", {{"gamma", r.gamma}, {"delta", r.delta}, {"order", to_string(r.order)}}},
          {"n", r.n},
          {"N", r.N},
          {"Nstar", r.Nstar},
          {"g", to_string(r.g)},
          {"h", to_string(r.h)},
          {"k", to_string(r.k)},
          {"integral", {{"g", r.g_integral}, {"h", r.h_integral}, {"k", r.k_integral}}},
          {"type_a", r.type_a},
          {"type_b", r.type_b},
          {"N_formula", r.N_formula},
          {"g_formula", r.g_formula},
          {"g_plus_k_equals_2h", r.g_plus_k},
          {"g_ge_h_ge_k", r.ordering},
          {"all_order_two", r.all_order_two},
          {"irreducible", r.irreducible}};
}

Json to_json(const AppendixReport& r) {
  Json j = to_json(r.numbers);
  j["checks"] = {{"trace", r.trace}, {"f_operator", r.f_operator}, {"pairing_sum", r.pairing_sum},
                 {"k_identity", r.k_identity}};
  j["trace_sum"] = r.trace_sum.str();
  j["stabilizer_sum"] = to_string(r.stabilizer_sum);
  Json ints = Json::array();
  for (long v : r.intersections) ints.push_back(v);
  j["intersections"] = ints;
  return j;
}

Json to_json(const GammaContext& ctx) {
  Json edges = Json::array();
  const auto& e = ctx.graph.edges;
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = i + 1; j < e.cols(); ++j)
      if (e(i, j) != 0) edges.push_back(Json::array({i, j, e(i, j)}));
  long sum_sq = 0;
  for (Eigen::Index i = 0; i < ctx.graph.dims.size(); ++i) sum_sq += ctx.graph.dims[i] * ctx.graph.dims[i];
  return {{"gamma", ctx.spec.str()},
          {"order", ctx.group.order()},
          {"type", ctx.graph.type_name()},
          {"delta", vec(ctx.roots.delta)},
          {"phi", vec(ctx.roots.phi)},
          {"edges", edges},
          {"positive_roots", ctx.roots.positive.size()},
          {"sum_dim_squared", sum_sq}};
}

Json to_json(const LCharacter& L) {
  Json quotient = Json::array();
  for (int v : L.alpha.quotient_vertices) quotient.push_back(v);
  return {{"alpha", vec(L.alpha.alpha)},
          {"ch", vec(L.ch)},
          {"dim", L.dim},
          {"g", L.g},
          {"dim_matches", L.dim_matches},
          {"dimension_bound", L.dimension_bound},
          {"equality_vertex", L.equality_vertex},
          {"quotient_vertices", quotient},
          {"maximal_candidates", L.alpha.maximal_candidates},
          {"weighted_sum", L.alpha.weighted_sum}};
}

Json to_json(const ZeroFiber& z) {
  const int m = z.spec.conductor();
  Json inv = Json::array();
  for (const auto& f : z.invariants) inv.push_back({{"name", f.name}, {"poly", to_json(f.poly, m)}});
  Json gb = Json::array();
  for (const auto& f : z.gb.basis) gb.push_back(to_json(f, m));
  Json hilbert = Json::array();
  for (long h : z.hilbert) hilbert.push_back(h);
  return {{"gamma", z.spec.str()},
          {"degree", z.degree},
          {"invariants", inv},
          {"groebner_basis", gb},
          {"leading", strings(z.gb.leading)},
          {"hilbert", hilbert},
          {"invariants_ok", z.invariants_ok},
          {"low_degree_invariants_in_ideal", z.low_degree_invariants_in_ideal},
          {"s_pairs_reduce", z.s_pairs_ok},
          {"reduced", z.reduced_ok},
          {"printed_leading_contained", z.printed_leading_contained},
          {"equals_2_order_minus_1", z.equals_formula}};
}

Json to_json(const IdentityEntry& e, int conductor) {
  conductor = common_conductor(e.printed_value, conductor);
  conductor = common_conductor(e.recomputed, conductor);
  conductor = common_conductor(e.certified, conductor);
  for (const auto& c : e.witness) conductor = common_conductor(c, conductor);
  Json w = Json::array();
  for (const auto& c : e.witness) w.push_back(to_json(c, conductor));
  return {{"name", e.name},
          {"printed", e.printed},
          {"status", to_string(e.status)},
          {"printed_value", to_json(e.printed_value, conductor)},
          {"recomputed", to_json(e.recomputed, conductor)},
          {"in_ideal", e.in_ideal},
          {"certified", to_json(e.certified, conductor)},
          {"witness", w},
          {"note", e.note}};
}

Json to_json(const TableRow& r) {
  Json inst = Json::array();
  for (const auto& i : r.instances) {
    Json chis = Json::array();
    for (int c : i.chis) chis.push_back(c);
    inst.push_back({{"gamma", i.gamma},
                    {"delta", i.delta},
                    {"chis", chis},
                    {"dims", strings(i.dims)},
                    {"oracle", strings(i.oracle)},
                    {"oracle_ok", i.oracle_ok}});
  }
  return {{"case", to_string(r.c)},
          {"eta", to_string(r.eta)},
          {"n", r.n},
          {"dimension", to_string(r.dimension)},
          {"closed_form", r.closed_form},
          {"closed_value", to_string(r.closed_value)},
          {"constant", r.constant},
          {"matches", r.matches},
          {"oracle_checked", r.oracle_checked},
          {"oracle_ok", r.oracle_ok},
          {"instances", inst}};
}

Json to_json(const LowerBoundReport& r) {
  Json det = Json::array();
  for (const auto& [chi, d] : r.det_dims) det.push_back(Json::array({chi, to_string(d)}));
  Json j = {{"gamma", r.gamma},
            {"delta", r.delta},
            {"n", r.n},
            {"g", r.g},
            {"g_enumerated", r.g_enumerated ? Json(*r.g_enumerated) : Json(nullptr)},
            {"bound", to_string(r.bound)},
            {"L", to_json(r.L)},
            {"dim_matches", r.dim_matches},
            {"alpha_condition", r.alpha_condition},
            {"fiber_invariants", to_string(r.fiber_invariants)},
            {"det_semi_invariants", det}};
  return j;
}

}  // namespace qzf
