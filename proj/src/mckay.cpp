#include "qzf/mckay.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "qzf/error.hpp"

namespace qzf {

namespace {

std::vector<long> as_std(const GVector& v) { return std::vector<long>(v.data(), v.data() + v.size()); }

GVector unit(int size, int i) {
  GVector v = GVector::Zero(size);
  v(i) = 1;
  return v;
}

long degree_of(const IntMatrix& m, int i) {
  long d = 0;
  for (int j = 0; j < m.cols(); ++j) d += (i == j) ? 2 * m(i, j) : m(i, j);
  return d;
}

bool connected(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < n; ++y)
      if (m(x, y) > 0 && !seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
  }
  return count == n;
}

// Pivots of symmetric Gaussian elimination are all positive.
bool positive_definite(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(a(i, j));
  for (int k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

}  // namespace

std::string to_string(const GVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v(i));
  }
  return s + ")";
}

std::string McKayGraph::type_name() const {
  switch (type) {
    case AffineType::A:
      return "A_" + std::to_string(rank) + "^(1)";
    case AffineType::D:
      return "D_" + std::to_string(rank) + "^(1)";
    case AffineType::E6:
      return "E_6^(1)";
    case AffineType::E7:
      return "E_7^(1)";
    case AffineType::E8:
      return "E_8^(1)";
  }
  return "?";
}

McKayGraph mckay_graph(const FiniteGroup& g, const CharacterTable& t) {
  const int n = t.size();
  McKayGraph graph;
  graph.edges = IntMatrix::Zero(n, n);
  graph.dims = GVector::Zero(n);
  const ClassFunction chi_v = defining_character(g, t.conductor);
  for (int i = 0; i < n; ++i) {
    graph.dims(i) = t.degree_int(i);
    ClassFunction p = product(t.chars[i], chi_v);
    for (int j = 0; j < n; ++j) {
      Cyclotomic m = inner_product(g, p, t.chars[j]);
      if (!m.is_rational() || !is_integer(m.rational_value()) || sgn(m.rational_value()) < 0)
        throw VerificationError("non-integral McKay multiplicity " + m.str());
      graph.edges(i, j) = m.rational_value().get_num().get_si();
    }
  }
  verify(graph.edges == graph.edges.transpose(), "McKay multiplicities are not symmetric");
  verify(graph.dims(0) == 1, "vertex 0 is not one-dimensional");
  verify(connected(graph.edges), "McKay graph is not connected");
  graph.rank = n - 1;

  bool cycle = true;
  for (int i = 0; i < n; ++i)
    if (degree_of(graph.edges, i) != 2) cycle = false;
  if (cycle) {
    graph.type = AffineType::A;
    return graph;
  }
  long edge_total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      verify(graph.edges(i, j) <= 1, "multiple edge outside type A");
      edge_total += graph.edges(i, j);
    }
  for (int i = 0; i < n; ++i) verify(graph.edges(i, i) == 0, "loop outside type A_0");
  verify(edge_total == n - 1, "McKay graph is neither a cycle nor a tree");
  std::vector<int> branch;
  int deg4 = 0;
  for (int i = 0; i < n; ++i) {
    long d = degree_of(graph.edges, i);
    verify(d <= 4, "vertex of degree above 4");
    if (d == 3) branch.push_back(i);
    if (d == 4) ++deg4;
  }
  if (deg4 == 1 && n == 5 && branch.empty()) {
    graph.type = AffineType::D;
    return graph;
  }
  if (branch.size() == 2 && deg4 == 0) {
    graph.type = AffineType::D;
    return graph;
  }
  verify(branch.size() == 1 && deg4 == 0, "unrecognized McKay graph shape");
  const int b = branch[0];
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (graph.edges(b, start) == 0) continue;
    int prev = b, cur = start, len = 1;
    while (true) {
      int next = -1;
      for (int y = 0; y < n; ++y)
        if (y != prev && graph.edges(cur, y) > 0) next = y;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms == std::vector<int>{2, 2, 2}) {
    graph.type = AffineType::E6;
  } else if (arms == std::vector<int>{1, 3, 3}) {
    graph.type = AffineType::E7;
  } else if (arms == std::vector<int>{1, 2, 5}) {
    graph.type = AffineType::E8;
  } else {
    throw VerificationError("unrecognized arm lengths in McKay graph");
  }
  return graph;
}

long pairing(const RootSystem& r, const GVector& a, const GVector& b) { return a.dot(r.cartan * b); }

bool dominated(const GVector& a, const GVector& b) { return (a.array() <= b.array()).all(); }

bool lex_less(const GVector& a, const GVector& b) { return as_std(a) < as_std(b); }

bool is_finite_root(const RootSystem& r, const GVector& v) {
  if (v.size() != r.size() || v(0) != 0) return false;
  for (const auto& p : r.positive)
    if (p == v || p == GVector(-v)) return true;
  return false;
}

RootSystem root_context(const McKayGraph& graph) {
  const int n = graph.size();
  if (n < 2) throw SpecError("affine type A_0 (trivial group) has no finite root system");
  RootSystem r;
  r.cartan = 2 * IntMatrix::Identity(n, n) - graph.edges;
  r.delta = graph.dims;
  verify((r.cartan * r.delta).isZero(), "delta is not in the kernel of the affine Cartan matrix");
  verify(positive_definite(r.cartan.bottomRightCorner(n - 1, n - 1)),
         "deleting vertex 0 does not leave a finite root system");

  std::set<std::vector<long>> seen;
  std::deque<GVector> queue;
  for (int i = 1; i < n; ++i) {
    GVector a = unit(n, i);
    seen.insert(as_std(a));
    queue.push_back(a);
    r.positive.push_back(a);
  }
  while (!queue.empty()) {
    GVector beta = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      GVector ai = unit(n, i);
      if (pairing(r, beta, ai) != -1) continue;
      GVector next = beta + ai;
      if (seen.insert(as_std(next)).second) {
        r.positive.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(r.positive.begin(), r.positive.end(), [](const GVector& a, const GVector& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return lex_less(b, a);
  });
  for (const auto& p : r.positive) verify(pairing(r, p, p) == 2, "root of norm other than 2");
  r.phi = r.delta - unit(n, 0);
  verify(is_finite_root(r, r.phi), "delta - alpha_0 is not a root");
  for (const auto& p : r.positive) verify(dominated(p, r.phi), "delta - alpha_0 is not the highest root");
  return r;
}

Rational dot(const GVector& alpha, const ParamVector& c) {
  Rational s;
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    if (alpha(i) != 0) s += c[i] * alpha(i);
  return s;
}

namespace {

bool positive_real(long n, bool beta_positive) { return n > 0 || (n == 0 && beta_positive); }

std::vector<GVector> minimal_elements(std::vector<GVector> set) {
  std::vector<GVector> out;
  for (const auto& v : set) {
    bool minimal = true;
    for (const auto& w : set)
      if (w != v && dominated(w, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<GVector> sigma_c(const RootSystem& r, const ParamVector& c) {
  const Rational cd = dot(r.delta, c);
  if (sgn(cd) == 0) throw ArithmeticError("c . delta = 0: R_c is infinite");
  std::vector<GVector> positive_rc;
  for (const auto& p : r.positive)
    for (int sign : {1, -1}) {
      GVector beta = sign * p;
      Rational q = -dot(beta, c) / cd;
      if (!is_integer(q)) continue;
      long n = q.get_num().get_si();
      if (positive_real(n, sign > 0)) positive_rc.push_back(n * r.delta + beta);
    }
  return minimal_elements(std::move(positive_rc));
}

std::vector<GVector> sigma_c_bruteforce(const RootSystem& r, const ParamVector& c, long bound) {
  if (sgn(dot(r.delta, c)) == 0) throw ArithmeticError("c . delta = 0: R_c is infinite");
  std::vector<GVector> positive_rc;
  for (long n = -bound; n <= bound; ++n)
    for (const auto& p : r.positive)
      for (int sign : {1, -1}) {
        GVector v = n * r.delta + sign * p;
        if (sgn(dot(v, c)) == 0 && positive_real(n, sign > 0)) positive_rc.push_back(v);
      }
  return minimal_elements(std::move(positive_rc));
}

bool split_real_root(const RootSystem& r, const GVector& v, long& n, GVector& beta) {
  if (v.size() != r.size()) return false;
  n = v(0);
  beta = v - n * r.delta;
  if (!is_finite_root(r, beta)) return false;
  const bool beta_positive = (beta.array() >= 0).all();
  return n > 0 || (n == 0 && beta_positive);
}

ParamVector generic_on_hyperplane(const RootSystem& r, const GVector& alpha, std::uint64_t seed) {
  long m = 0;
  GVector beta;
  if (!split_real_root(r, alpha, m, beta)) throw ArithmeticError("not a positive real root: " + to_string(alpha));
  const int size = r.size();
  int j = 1;
  while (beta(j) == 0) ++j;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-100000, 100000);
  const long prime = 1000003;
  for (int attempt = 0; attempt < 200; ++attempt) {
    ParamVector c(size);
    for (int i = 1; i < size; ++i) c[i] = ratio(num(rng), prime);
    // c . beta = -m
    Rational rest;
    for (int i = 1; i < size; ++i)
      if (i != j) rest += c[i] * beta(i);
    c[j] = (Rational(-m) - rest) / beta(j);
    // c . delta = 1
    Rational s;
    for (int i = 1; i < size; ++i) s += c[i] * r.delta(i);
    c[0] = Rational(1) - s;
    bool generic = true;
    for (const auto& p : r.positive) {
      if (p == beta || p == GVector(-beta)) continue;
      if (is_integer(dot(p, c))) {
        generic = false;
        break;
      }
    }
    if (generic && sgn(dot(alpha, c)) == 0 && dot(r.delta, c) == 1) return c;
  }
  throw VerificationError("no generic parameter found on hyperplane of " + to_string(alpha));
}

GammaContext make_context(const GroupSpec& spec) {
  GammaContext ctx;
  ctx.spec = spec;
  ctx.group = make_group(spec);
  ctx.table = character_table(ctx.group, spec);
  ctx.graph = mckay_graph(ctx.group, ctx.table);
  ctx.roots = root_context(ctx.graph);
  return ctx;
}

std::vector<int> quotient_vertices(const GammaContext& ctx, const Subgroup& d) {
  std::vector<int> out;
  for (int i = 0; i < ctx.table.size(); ++i)
    if (ctx.table.is_linear(i) && kernel_contains(ctx.group, ctx.table.chars[i], d)) out.push_back(i);
  return out;
}

AlphaChoice admissible_alpha(const GammaContext& ctx, const Subgroup& d) {
  AlphaChoice choice;
  choice.quotient_vertices = quotient_vertices(ctx, d);
  const RootSystem& r = ctx.roots;
  auto weighted = [&](const GVector& a) {
    long s = 0;
    for (int i = 1; i < r.size(); ++i) s += a(i) * r.delta(i);
    return s;
  };
  const long target = 2L * d.order() - 1;
  if (d.order() == ctx.group.order()) {
    choice.whole = true;
    choice.alpha = r.phi;
    choice.maximal_candidates = 1;
    choice.satisfying_condition = weighted(r.phi) == ctx.group.order() - 1 ? 1 : 0;
    choice.weighted_sum = weighted(r.phi);
    return choice;
  }
  std::vector<GVector> candidates;
  for (const auto& p : r.positive) {
    long s = 0;
    for (int i : choice.quotient_vertices) s += p(i);
    if (s == 1) candidates.push_back(p);
  }
  std::vector<GVector> maximal;
  for (const auto& p : candidates) {
    bool is_max = true;
    for (const auto& q : candidates)
      if (q != p && dominated(p, q)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(p);
  }
  choice.maximal_candidates = static_cast<int>(maximal.size());
  std::vector<GVector> good;
  for (const auto& p : maximal)
    if (weighted(p) == target) good.push_back(p);
  choice.satisfying_condition = static_cast<int>(good.size());
  if (good.empty())
    throw VerificationError("no maximal admissible root satisfies sum k_i n_i = 2|Delta| - 1 for " + ctx.spec.str() +
                            " / " + d.spec);
  choice.alpha = *std::max_element(good.begin(), good.end(), lex_less);
  choice.weighted_sum = weighted(choice.alpha);
  return choice;
}

LCharacter character_of_L(const GammaContext& ctx, const Subgroup& d, int n) {
  if (n < 1) throw SpecError("n must be positive");
  LCharacter l;
  l.alpha = admissible_alpha(ctx, d);
  const RootSystem& r = ctx.roots;
  l.ch = l.alpha.whole ? GVector(n * r.delta + r.phi) : GVector((n - 1) * r.delta + l.alpha.alpha);
  l.dim = l.ch.dot(r.delta);
  l.g = static_cast<long>(n - 1) * ctx.group.order() + 2L * (d.order() - 1);
  l.dim_matches = l.dim == l.g + 1;
  int equal = 0;
  bool below = true;
  for (int i : l.alpha.quotient_vertices) {
    if (l.ch(i) > n) below = false;
    if (l.ch(i) == n) {
      ++equal;
      l.equality_vertex = i;
    }
  }
  l.dimension_bound = below && equal == 1;
  return l;
}

std::string to_dot(const GammaContext& ctx, const DotOptions& opts) {
  std::ostringstream out;
  const McKayGraph& g = ctx.graph;
  out << "graph mckay {\n";
  out << "  label=\"" << ctx.spec.str() << " " << g.type_name() << "\";\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < g.size(); ++i) {
    const bool linear = ctx.table.is_linear(i);
    out << "  v" << i << " [label=\"" << i << "\\ndim " << g.dims(i);
    if (linear) out << "\\nlinear";
    if (opts.delta && linear && kernel_contains(ctx.group, ctx.table.chars[i], *opts.delta)) out << "\\ntrivial on Delta";
    out << "\\ndelta=" << g.dims(i);
    if (opts.alpha) out << " alpha=" << (*opts.alpha)(i);
    out << "\"];\n";
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j = i; j < g.size(); ++j)
      for (long k = 0; k < g.edges(i, j); ++k) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qzf
