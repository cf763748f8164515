#include "qzf/wreath.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "qzf/error.hpp"

namespace qzf {

WreathGroup::WreathGroup(const FiniteGroup& gamma, Subgroup delta, int n)
    : gamma_(&gamma), delta_(std::move(delta)), n_(n) {
  if (n < 1) throw SpecError("rank n must be at least 1");
  quats_.reserve(gamma.order());
  for (const auto& m : gamma.elements()) {
    verify(m(0, 1) == -m(1, 0).conj() && m(1, 1) == m(0, 0).conj(), "group element is not of quaternion shape");
    quats_.emplace_back(m(0, 0), m(1, 0));
  }
}

Integer WreathGroup::order() const {
  Integer gamma = gamma_->order();
  Integer out = factorial(n_) * delta_.order();
  for (int i = 1; i < n_; ++i) out *= gamma;
  return out;
}

bool WreathGroup::contains(const MonomialElement& w) const {
  if (static_cast<int>(w.perm.size()) != n_ || static_cast<int>(w.gammas.size()) != n_) return false;
  std::vector<bool> seen(n_, false);
  for (int p : w.perm) {
    if (p < 0 || p >= n_ || seen[p]) return false;
    seen[p] = true;
  }
  int prod = 0;
  for (int g : w.gammas) prod = gamma_->mul(prod, g);
  return delta_.contains(prod);
}

MonomialElement WreathGroup::multiply(const MonomialElement& a, const MonomialElement& b) const {
  MonomialElement out{std::vector<int>(n_), std::vector<int>(n_)};
  for (int q = 0; q < n_; ++q) {
    const int p = b.perm[q];
    const int i = a.perm[p];
    out.perm[q] = i;
    out.gammas[i] = gamma_->mul(a.gammas[i], b.gammas[p]);
  }
  return out;
}

MonomialElement WreathGroup::identity() const {
  MonomialElement e{std::vector<int>(n_), std::vector<int>(n_, 0)};
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

int WreathGroup::element_order(const MonomialElement& w) const {
  // lcm over cycles of (cycle length) * (order of the product along the cycle)
  std::vector<bool> seen(n_, false);
  long out = 1;
  for (int q = 0; q < n_; ++q) {
    if (seen[q]) continue;
    int len = 0, prod = 0, c = q;
    do {
      seen[c] = true;
      c = w.perm[c];
      prod = gamma_->mul(w.gammas[c], prod);
      ++len;
    } while (c != q);
    out = std::lcm(out, static_cast<long>(len) * gamma_->element_order(prod));
  }
  return static_cast<int>(out);
}

QuatMatrix WreathGroup::quat_matrix(const MonomialElement& w) const {
  QuatMatrix m = QuatMatrix::Constant(n_, n_, Quaternion());
  for (int q = 0; q < n_; ++q) m(w.perm[q], q) = quats_[w.gammas[w.perm[q]]];
  return m;
}

CycMatrix WreathGroup::complex_matrix(const MonomialElement& w) const { return complex_embedding(quat_matrix(w)); }

void WreathGroup::for_each(const std::function<void(const MonomialElement&)>& f, std::size_t cap) const {
  if (order() > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded("|W| = " + order().get_str() + " exceeds cap " + std::to_string(cap));
  const int g = gamma_->order();
  MonomialElement e = identity();
  do {
    std::fill(e.gammas.begin(), e.gammas.end(), 0);
    while (true) {
      if (contains(e)) f(e);
      int pos = 0;
      while (pos < n_ && ++e.gammas[pos] == g) e.gammas[pos++] = 0;
      if (pos == n_) break;
    }
  } while (std::next_permutation(e.perm.begin(), e.perm.end()));
}

int FixRankOracle::rank(const MonomialElement& e, int limit) {
  const int n = w_->n();
  std::vector<bool> seen(n, false);
  int total = 0;
  for (int q = 0; q < n && total <= limit; ++q) {
    if (seen[q]) continue;
    std::vector<int> word;
    int c = q;
    do {
      seen[c] = true;
      c = e.perm[c];
      word.push_back(e.gammas[c]);
    } while (c != q);
    if (word.size() == 1 && word[0] == 0) continue;
    auto it = cache_.find(word);
    if (it == cache_.end()) {
      const int len = static_cast<int>(word.size());
      QuatMatrix block = QuatMatrix::Constant(len, len, Quaternion());
      for (int t = 0; t < len; ++t) block((t + 1) % len, t) = w_->quaternion(word[t]);
      for (int t = 0; t < len; ++t) block(t, t) -= Quaternion(1);
      it = cache_.emplace(word, qzf::rank(complex_embedding(block))).first;
    }
    total += it->second;
  }
  return total;
}

std::vector<Reflection> reflections(const WreathGroup& w, std::size_t cap) {
  FixRankOracle oracle(w);
  std::vector<Reflection> out;
  w.for_each(
      [&](const MonomialElement& e) {
        if (oracle.rank(e, 2) != 2) return;
        Reflection r;
        r.element = e;
        r.type = std::is_sorted(e.perm.begin(), e.perm.end()) ? ReflectionType::B : ReflectionType::A;
        r.order = w.element_order(e);
        out.push_back(std::move(r));
      },
      cap);
  return out;
}

bool has_structural_shape(const WreathGroup& w, const Reflection& r) {
  const auto& e = r.element;
  const int n = w.n();
  std::vector<int> moved;
  for (int q = 0; q < n; ++q)
    if (e.perm[q] != q) moved.push_back(q);
  if (r.type == ReflectionType::B) {
    if (!moved.empty()) return false;
    int nontrivial = 0;
    for (int g : e.gammas)
      if (g != 0) {
        ++nontrivial;
        if (!w.delta().contains(g)) return false;
      }
    return nontrivial == 1;
  }
  if (moved.size() != 2) return false;
  const int p = moved[0], q = moved[1];
  if (e.perm[p] != q || e.perm[q] != p) return false;
  for (int s = 0; s < n; ++s)
    if (s != p && s != q && e.gammas[s] != 0) return false;
  return w.gamma().mul(e.gammas[p], e.gammas[q]) == 0;
}

QuatVector root_vector(const WreathGroup& w, const MonomialElement& r) {
  QuatMatrix m = w.quat_matrix(r);
  for (int p = 0; p < w.n(); ++p) m(p, p) -= Quaternion(1);
  for (int c = 0; c < w.n(); ++c) {
    int first = -1;
    for (int p = 0; p < w.n() && first < 0; ++p)
      if (!m(p, c).is_zero()) first = p;
    if (first < 0) continue;
    const Quaternion s = m(first, c).inverse();
    QuatVector alpha(w.n());
    for (int p = 0; p < w.n(); ++p) alpha[p] = m(p, c) * s;
    return alpha;
  }
  throw VerificationError("root_vector of the identity");
}

namespace {

std::string text(const Cyclotomic& c, int conductor) {
  if (c.is_rational()) return to_string(c.rational_value());
  return c.lifted(conductor).str();
}

}  // namespace

std::string canonical_key(const QuatVector& alpha, int conductor) {
  std::string key;
  for (const auto& q : alpha) key += "[" + text(q.z1(), conductor) + "|" + text(q.z2(), conductor) + "]";
  return key;
}

std::vector<Hyperplane> hyperplanes(const WreathGroup& w, const std::vector<Reflection>& refl) {
  std::map<std::string, Hyperplane> by_key;
  for (const auto& r : refl) {
    QuatVector alpha = root_vector(w, r.element);
    std::string key = canonical_key(alpha, w.gamma().conductor());
    auto it = by_key.find(key);
    if (it == by_key.end()) it = by_key.emplace(key, Hyperplane{std::move(alpha), key, 1}).first;
    ++it->second.stabilizer;
  }
  std::vector<Hyperplane> out;
  out.reserve(by_key.size());
  for (auto& [key, h] : by_key) out.push_back(std::move(h));
  return out;
}

CycMatrix perp_equations(const std::vector<const QuatVector*>& alphas) {
  const Eigen::Index n = alphas.empty() ? 0 : static_cast<Eigen::Index>(alphas[0]->size());
  CycMatrix rows = CycMatrix::Constant(2 * static_cast<Eigen::Index>(alphas.size()), 2 * n, Cyclotomic());
  for (size_t a = 0; a < alphas.size(); ++a)
    for (Eigen::Index p = 0; p < n; ++p) {
      const Cyclotomic& c = (*alphas[a])[p].z1();
      const Cyclotomic& d = (*alphas[a])[p].z2();
      rows(2 * a, 2 * p) = c.conj();
      rows(2 * a, 2 * p + 1) = d.conj();
      rows(2 * a + 1, 2 * p) = -d;
      rows(2 * a + 1, 2 * p + 1) = c;
    }
  return rows;
}

std::string row_space_key(const CycMatrix& rows, int conductor) {
  const auto e = row_echelon(rows);
  const int m = conductor;
  std::string key;
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    key += "{";
    for (Eigen::Index j = 0; j < e.reduced.cols(); ++j) key += text(e.reduced(r, j), m) + ";";
    key += "}";
  }
  return key;
}

long reflection_count_formula(long gamma_order, long delta_order, int n) {
  return static_cast<long>(n) * (n - 1) / 2 * gamma_order + n * (delta_order - 1);
}

long g_formula(long gamma_order, long delta_order, int n) { return (n - 1) * gamma_order + 2 * (delta_order - 1); }

bool roots_certify_irreducible(const std::vector<Hyperplane>& hs, int n) {
  if (hs.empty()) return false;
  QuatMatrix span(n, static_cast<Eigen::Index>(hs.size()));
  for (size_t c = 0; c < hs.size(); ++c)
    for (int p = 0; p < n; ++p) span(p, c) = hs[c].alpha[p];
  if (rank(complex_embedding(span)) != 2 * n) return false;
  std::vector<bool> seen(hs.size(), false);
  std::deque<size_t> queue{0};
  seen[0] = true;
  size_t count = 1;
  while (!queue.empty()) {
    size_t a = queue.front();
    queue.pop_front();
    for (size_t b = 0; b < hs.size(); ++b)
      if (!seen[b] && !hermitian_form(hs[a].alpha, hs[b].alpha).is_zero()) {
        seen[b] = true;
        ++count;
        queue.push_back(b);
      }
  }
  return count == hs.size();
}

NumerologyReport numerology(const WreathGroup& w, const std::vector<Reflection>& refl,
                            const std::vector<Hyperplane>& hs) {
  NumerologyReport r;
  r.delta = w.delta().spec;
  r.n = w.n();
  r.order = w.order();
  r.N = static_cast<long>(refl.size());
  r.Nstar = static_cast<long>(hs.size());
  r.shapes_ok = true;
  r.all_order_two = true;
  for (const auto& x : refl) {
    (x.type == ReflectionType::A ? r.type_a : r.type_b) += 1;
    if (!has_structural_shape(w, x)) r.shapes_ok = false;
    if (x.order != 2) r.all_order_two = false;
  }
  r.g = Rational(2 * r.N) / r.n;
  r.h = Rational(r.N + r.Nstar) / r.n;
  r.k = Rational(2 * r.Nstar) / r.n;
  r.g.canonicalize();
  r.h.canonicalize();
  r.k.canonicalize();
  r.g_integral = is_integer(r.g);
  r.h_integral = is_integer(r.h);
  r.k_integral = is_integer(r.k);
  const long go = w.gamma().order(), dord = w.delta().order();
  r.N_formula = reflection_count_formula(go, dord, r.n);
  r.g_formula = g_formula(go, dord, r.n);
  r.N_matches = r.N == r.N_formula;
  r.g_matches = r.g == Rational(r.g_formula);
  r.g_plus_k = r.g + r.k == 2 * r.h;
  r.ordering = r.g >= r.h && r.h >= r.k;
  r.equalities_iff_order_two = ((r.g == r.h) && (r.h == r.k)) == r.all_order_two;
  r.irreducible = r.n == 1 || roots_certify_irreducible(hs, r.n);
  return r;
}

NumerologyReport numerology(const WreathGroup& w, std::size_t cap) {
  const auto refl = reflections(w, cap);
  return numerology(w, refl, hyperplanes(w, refl));
}

AppendixReport appendix_checks(const WreathGroup& w, std::size_t cap) {
  AppendixReport rep;
  const auto refl = reflections(w, cap);
  const auto hs = hyperplanes(w, refl);
  rep.numbers = numerology(w, refl, hs);
  const int n = w.n();
  const Rational target = 2 * Rational(rep.numbers.N + rep.numbers.Nstar);

  // (i) trace identity
  Cyclotomic trace;
  for (const auto& r : refl) {
    const CycMatrix m = w.complex_matrix(r.element);
    trace += Cyclotomic(2 * n);
    for (Eigen::Index i = 0; i < m.rows(); ++i) trace -= m(i, i);
  }
  rep.trace_sum = trace;
  for (const auto& h : hs) rep.stabilizer_sum += 2 * h.stabilizer;
  rep.trace = trace == Cyclotomic(target) && rep.stabilizer_sum == target;

  // (a, a) is real but need not be rational
  std::vector<Cyclotomic> inv_norms;
  for (const auto& h : hs) inv_norms.push_back(hermitian_form(h.alpha, h.alpha).z1().inverse());

  // (ii) f(e_p) = (k/2) e_p
  const Rational half_k = rep.numbers.k / 2;
  rep.f_operator = true;
  for (int p = 0; p < n; ++p) {
    QuatVector e(n, Quaternion());
    e[p] = Quaternion(1);
    QuatVector f(n, Quaternion());
    for (size_t i = 0; i < hs.size(); ++i) {
      const Quaternion c = hermitian_form(hs[i].alpha, e) * Quaternion(inv_norms[i]);
      for (int q = 0; q < n; ++q) f[q] += hs[i].alpha[q] * c;
    }
    for (int q = 0; q < n; ++q)
      if (!(f[q] == Quaternion(Cyclotomic(q == p ? half_k : Rational(0))))) rep.f_operator = false;
  }

  // (iii) pairing sum and (iv) |A^H|
  rep.pairing_sum = true;
  rep.k_identity = true;
  const Rational expected_ah = Rational(rep.numbers.Nstar + 1) - rep.numbers.k;
  for (size_t i = 0; i < hs.size(); ++i) {
    Cyclotomic s;
    std::set<std::string> meets;
    for (size_t j = 0; j < hs.size(); ++j) {
      s += hermitian_form(hs[j].alpha, hs[i].alpha).norm_sq() * inv_norms[i] * inv_norms[j];
      if (j != i) meets.insert(row_space_key(perp_equations({&hs[i].alpha, &hs[j].alpha}), w.gamma().conductor()));
    }
    if (!(s * Cyclotomic(2) == Cyclotomic(rep.numbers.k))) rep.pairing_sum = false;
    rep.intersections.push_back(static_cast<long>(meets.size()));
    if (Rational(static_cast<long>(meets.size())) != expected_ah) rep.k_identity = false;
  }
  return rep;
}

std::string to_string(ReflectionType t) { return t == ReflectionType::A ? "a" : "b"; }

}  // namespace qzf
