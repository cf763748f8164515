// Command-line front end: one subcommand per computation, text on stdout,
// optional JSON report (--json) and Graphviz export (--dot).
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qzf/acceptance.hpp"
#include "qzf/bounds.hpp"
#include "qzf/error.hpp"
#include "qzf/invariants.hpp"
#include "qzf/mckay.hpp"
#include "qzf/report.hpp"
#include "qzf/wreath.hpp"

namespace {

using namespace qzf;

constexpr int kExitFail = 1;
constexpr int kExitSpec = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string gamma;
  std::string delta = "whole";
  int n = 1;
  std::size_t cap = kDefaultWreathCap;
  std::string json;
  std::string dot;
  int n_min = 2;
  int n_max = 6;
};

std::size_t default_cap() {
  if (const char* env = std::getenv("ZF_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultWreathCap;
}

Json args_json(const Options& o, const std::string& command) {
  Json a = Json::object();
  if (command == "tables") {
    a["n_min"] = o.n_min;
    a["n_max"] = o.n_max;
    return a;
  }
  if (!o.gamma.empty()) a["gamma"] = o.gamma;
  if (command == "numerology" || command == "appendix" || command == "lowerbound" || command == "mckay") {
    a["delta"] = o.delta;
    a["n"] = o.n;
  }
  if (command == "numerology" || command == "appendix" || command == "lowerbound") a["cap"] = o.cap;
  return a;
}

GroupSpec require_gamma(const Options& o) {
  if (o.gamma.empty()) throw SpecError("--gamma is required");
  return GroupSpec::parse(o.gamma);
}

bool fits(const WreathGroup& w, std::size_t cap) { return w.order() <= Integer(static_cast<unsigned long>(cap)); }

void cap_skip(Report& r, const WreathGroup& w, std::size_t cap) {
  r.add({"cap", Verdict::Skipped, "|W| = " + to_string(w.order()) + " exceeds cap " + std::to_string(cap)});
}

// --- commands -------------------------------------------------------------------

void cmd_catalog(const Options&, Report& r, std::ostream& out) {
  Json groups = Json::array();
  out << std::left << std::setw(10) << "gamma" << std::setw(8) << "order" << std::setw(11) << "conductor"
      << std::setw(9) << "classes" << "McKay type\n";
  for (const auto& s : catalogue()) {
    const GammaContext ctx = make_context(s);
    out << std::left << std::setw(10) << s.str() << std::setw(8) << ctx.group.order() << std::setw(11)
        << s.conductor() << std::setw(9) << ctx.group.num_classes() << ctx.graph.type_name() << "\n";
    Json deltas = Json::array({"whole", "comm"});
    if (s.family == Family::BinaryDihedral) deltas.push_back("cyc2");
    groups.push_back({{"gamma", s.str()},
                      {"order", ctx.group.order()},
                      {"conductor", s.conductor()},
                      {"classes", ctx.group.num_classes()},
                      {"type", ctx.graph.type_name()},
                      {"deltas", deltas}});
  }
  r.data["groups"] = groups;
}

void print_numerology(const NumerologyReport& n, std::ostream& out) {
  out << "W_" << n.n << "(" << n.gamma << ", " << n.delta << "), |W| = " << to_string(n.order) << "\n"
      << "N = " << n.N << " (type a " << n.type_a << ", type b " << n.type_b << "), formula " << n.N_formula << "\n"
      << "N* = " << n.Nstar << "\n"
      << "g = " << to_string(n.g) << ", h = " << to_string(n.h) << ", k = " << to_string(n.k) << "\n"
      << "irreducible: " << (n.irreducible ? "certified" : "not certified") << "\n";
}

void numerology_checks(const NumerologyReport& n, Report& r) {
  r.check("N = C(n,2)|Gamma| + n(|Delta|-1)", n.N_matches, std::to_string(n.N) + " vs " + std::to_string(n.N_formula));
  r.check("g = (n-1)|Gamma| + 2(|Delta|-1)", n.g_matches, to_string(n.g) + " vs " + std::to_string(n.g_formula));
  r.check("g, h, k integral", n.g_integral && n.h_integral && n.k_integral);
  r.check("g + k = 2h", n.g_plus_k);
  r.check("g >= h >= k", n.ordering);
  r.check("equalities iff all reflections have order 2", n.equalities_iff_order_two);
  r.check("reflection shapes (a)/(b)", n.shapes_ok);
}

void cmd_numerology(const Options& o, Report& r, std::ostream& out) {
  const GroupSpec spec = require_gamma(o);
  const FiniteGroup g = make_group(spec);
  const WreathGroup w(g, resolve_subgroup(g, spec, o.delta), o.n);
  if (!fits(w, o.cap)) return cap_skip(r, w, o.cap);
  NumerologyReport n = numerology(w, o.cap);
  n.gamma = spec.str();
  print_numerology(n, out);
  numerology_checks(n, r);
  r.data["numerology"] = to_json(n);
}

void cmd_appendix(const Options& o, Report& r, std::ostream& out) {
  const GroupSpec spec = require_gamma(o);
  const FiniteGroup g = make_group(spec);
  const WreathGroup w(g, resolve_subgroup(g, spec, o.delta), o.n);
  if (!fits(w, o.cap)) return cap_skip(r, w, o.cap);
  AppendixReport a = appendix_checks(w, o.cap);
  a.numbers.gamma = spec.str();
  print_numerology(a.numbers, out);
  out << "sum tr(1 - r) = " << a.trace_sum.str() << ", sum 2|W_H| = " << to_string(a.stabilizer_sum) << "\n";
  r.check("sum over R of tr(1 - r) = 2(N + N*)", a.trace);
  r.check("f(e_p) = (k/2) e_p", a.f_operator);
  r.check("pairing sum = k for every H", a.pairing_sum);
  r.check("|A^H| = N* + 1 - k for every H", a.k_identity);
  r.data["appendix"] = to_json(a);
}

void cmd_mckay(const Options& o, Report& r, std::ostream& out) {
  const GroupSpec spec = require_gamma(o);
  const GammaContext ctx = make_context(spec);
  out << spec.str() << ": " << ctx.graph.type_name() << "\n"
      << "delta = " << to_string(ctx.roots.delta) << "\n"
      << "phi = " << to_string(ctx.roots.phi) << "\n"
      << "finite positive roots: " << ctx.roots.positive.size() << "\n";
  long sq = 0;
  for (Eigen::Index i = 0; i < ctx.graph.dims.size(); ++i) sq += ctx.graph.dims[i] * ctx.graph.dims[i];
  r.check("sum n_i^2 = |Gamma|", sq == ctx.group.order(), std::to_string(sq));
  r.check("Cartan delta = 0", (ctx.roots.cartan * ctx.roots.delta).isZero());
  r.data["mckay"] = to_json(ctx);

  const Subgroup d = resolve_subgroup(ctx.group, spec, o.delta);
  const LCharacter L = character_of_L(ctx, d, o.n);
  out << "Delta = " << o.delta << ", n = " << o.n << ": alpha = " << to_string(L.alpha.alpha)
      << ", ch L = " << to_string(L.ch) << ", dim L = " << L.dim << "\n";
  r.check("dim L = g + 1", L.dim_matches, std::to_string(L.dim) + " vs " + std::to_string(L.g + 1));
  r.check("dim L^chi <= n with one equality", L.dimension_bound);
  r.data["L"] = to_json(L);

  if (!o.dot.empty()) {
    std::ofstream f(o.dot);
    if (!f) throw Error("cannot write " + o.dot);
    DotOptions opts;
    opts.delta = &d;
    opts.alpha = &L.alpha.alpha;
    f << to_dot(ctx, opts);
  }
}

void cmd_zerofiber(const Options& o, Report& r, std::ostream& out) {
  const GroupSpec spec = require_gamma(o);
  const ZeroFiber z = zero_fiber(spec);
  out << spec.str() << ": degree = " << z.degree << "\n";
  for (const auto& f : z.invariants) out << "  " << f.name << " = " << f.poly.str() << "\n";
  out << "leading terms:";
  for (const auto& m : z.gb.leading) out << " " << to_string(m);
  out << "\n";
  r.check("degree = 2|Gamma| - 1", z.equals_formula, std::to_string(z.degree));
  r.check("fundamental invariants are invariant", z.invariants_ok);
  r.check("invariants up to the top degree lie in I", z.low_degree_invariants_in_ideal);
  r.check("S-polynomials reduce to zero", z.s_pairs_ok);
  r.check("basis is reduced", z.reduced_ok);
  if (!printed_leading_terms(spec).empty())
    r.check("printed leading terms lie in in(I)", z.printed_leading_contained);
  r.data["zero_fiber"] = to_json(z);
}

void audit_group(const GroupSpec& spec, Report& r, std::ostream& out, Json& groups) {
  const ZeroFiber z = zero_fiber(spec);
  r.check(spec.str() + ": degree = 2|Gamma| - 1", z.equals_formula, std::to_string(z.degree));
  out << spec.str() << ": degree = " << z.degree << "\n";
  Json entries = Json::array();
  for (const auto& e : verify_identity_ledger(spec)) {
    Verdict v = Verdict::Pass;
    if (e.status == IdentityStatus::Corrected) v = Verdict::Corrected;
    if (e.status == IdentityStatus::Failed) v = Verdict::Fail;
    r.add({e.name, v, e.note});
    out << "  " << std::left << std::setw(10) << to_string(e.status) << e.name << "\n";
    entries.push_back(to_json(e, spec.conductor()));
  }
  groups.push_back({{"gamma", spec.str()}, {"degree", z.degree}, {"ledger", entries}});
}

void cmd_audit(const Options& o, Report& r, std::ostream& out) {
  Json groups = Json::array();
  if (!o.gamma.empty()) {
    audit_group(require_gamma(o), r, out, groups);
  } else {
    for (const auto& s : catalogue()) audit_group(s, r, out, groups);
  }
  r.data["groups"] = groups;
}

void cmd_lowerbound(const Options& o, Report& r, std::ostream& out) {
  const GroupSpec spec = require_gamma(o);
  const LowerBoundReport lb = lower_bound_report(spec, o.delta, o.n, o.cap);
  out << "W_" << o.n << "(" << spec.str() << ", " << o.delta << "): g = " << lb.g << ", (g+1)^n = "
      << to_string(lb.bound) << "\n"
      << "alpha = " << to_string(lb.L.alpha.alpha) << ", ch L = " << to_string(lb.L.ch) << ", dim L = " << lb.L.dim
      << "\n";
  if (lb.L.equality_vertex >= 0) out << "dim L^chi = n at vertex " << lb.L.equality_vertex << "\n";
  r.check("dim L = g + 1", lb.dim_matches,
          lb.g_enumerated ? "g = 2N/n = " + std::to_string(*lb.g_enumerated) : "closed form only");
  r.check("sum_{i != 0} k_i n_i = 2|Delta| - 1", lb.alpha_condition, std::to_string(lb.L.alpha.weighted_sum));
  r.check("dim L^chi <= n with one equality", lb.L.dimension_bound);
  r.check("W-invariants of L^(x n) (x) det are one-dimensional", lb.fiber_invariants == 1);
  r.data["lower_bound"] = to_json(lb);
}

void cmd_tables(const Options& o, Report& r, std::ostream& out) {
  if (o.n_min < 1 || o.n_max < o.n_min) throw SpecError("bad --n-min/--n-max");
  Json rows = Json::array();
  for (Eta eta : {Eta::Det, Eta::Triv}) {
    out << "(chi, " << to_string(eta) << ") semi-invariants\n";
    out << std::left << std::setw(34) << "case";
    for (int n = o.n_min; n <= o.n_max; ++n) out << std::right << std::setw(8) << ("n=" + std::to_string(n));
    out << "   closed form\n";
    for (TableCase c : table_cases(eta)) {
      out << std::left << std::setw(34) << to_string(c);
      for (int n = o.n_min; n <= o.n_max; ++n) {
        const TableRow row = catalan_table(c, eta, n);
        out << std::right << std::setw(8) << to_string(row.dimension);
        const std::string l = to_string(eta) + " " + to_string(c) + " n=" + std::to_string(n);
        r.check(l, row.ok(), std::to_string(row.oracle_checked) + " oracle instances");
        rows.push_back(to_json(row));
      }
      out << "   " << closed_form_text(c, eta) << "\n";
    }
    out << "\n";
  }
  r.data["rows"] = rows;
}

void cmd_selftest(const Options&, Report& r, std::ostream& out) {
  for (const auto& c : run_acceptance()) {
    out << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << c.detail << "\n";
    r.check("criterion " + std::to_string(c.id) + ": " + c.title, c.pass, c.detail);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for quaternionic wreath reflection groups and Kleinian zero fibers"};
  app.require_subcommand(1);
  Options o;
  o.cap = default_cap();

  auto add_group = [&](CLI::App* sub, bool wreath) {
    sub->add_option("--gamma", o.gamma, "cyclic:l | bd:n | bt | bo | bi");
    if (wreath) {
      sub->add_option("--delta", o.delta, "whole | comm | cyc2 | gens:i,j,...");
      sub->add_option("--n", o.n, "rank")->check(CLI::PositiveNumber);
      sub->add_option("--cap", o.cap, "largest group enumerated (env ZF_CAP)");
    }
    sub->add_option("--json", o.json, "write the JSON report here");
  };

  add_group(app.add_subcommand("catalog", "list the supported groups"), false);
  add_group(app.add_subcommand("numerology", "reflections, hyperplanes and g, h, k"), true);
  add_group(app.add_subcommand("appendix", "appendix identities"), true);
  auto* mckay = app.add_subcommand("mckay", "McKay graph, roots and the module L");
  add_group(mckay, true);
  mckay->add_option("--dot", o.dot, "write the McKay graph in DOT format");
  add_group(app.add_subcommand("zerofiber", "Groebner basis of the invariant ideal"), false);
  add_group(app.add_subcommand("audit", "zero fiber and identity ledger"), false);
  add_group(app.add_subcommand("lowerbound", "(g+1)^n lower bound"), true);
  auto* tables = app.add_subcommand("tables", "semi-invariant dimension tables");
  tables->add_option("--n-min", o.n_min, "smallest n");
  tables->add_option("--n-max", o.n_max, "largest n");
  tables->add_option("--json", o.json, "write the JSON report here");
  add_group(app.add_subcommand("selftest", "run the acceptance suite"), false);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  Report report;
  report.command = command;
  report.args = args_json(o, command);
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (command == "catalog") cmd_catalog(o, report, std::cout);
    if (command == "numerology") cmd_numerology(o, report, std::cout);
    if (command == "appendix") cmd_appendix(o, report, std::cout);
    if (command == "mckay") cmd_mckay(o, report, std::cout);
    if (command == "zerofiber") cmd_zerofiber(o, report, std::cout);
    if (command == "audit") cmd_audit(o, report, std::cout);
    if (command == "lowerbound") cmd_lowerbound(o, report, std::cout);
    if (command == "tables") cmd_tables(o, report, std::cout);
    if (command == "selftest") cmd_selftest(o, report, std::cout);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const CapExceeded& e) {
    report.add({"cap", Verdict::Skipped, e.what()});
  } catch (const Error& e) {
    report.add({"internal", Verdict::Fail, e.what()});
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << report.text();
  std::cerr << "wall time: " << std::fixed << std::setprecision(3) << report.wall_seconds << " s\n";
  if (!o.json.empty()) {
    std::ofstream f(o.json);
    if (!f) {
      std::cerr << "error: cannot write " << o.json << "\n";
      return kExitFail;
    }
    f << report.to_json().dump(2) << "\n";
  }
  if (!report.passed()) code = kExitFail;
  else if (report.any_skipped()) code = kExitCap;
  return code;
}
