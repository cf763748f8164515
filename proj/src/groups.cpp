#include "qzf/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "qzf/error.hpp"

namespace qzf {

namespace {

Mat2 diag(const Cyclotomic& a, const Cyclotomic& b) {
  Mat2 m;
  m << a, Cyclotomic(0), Cyclotomic(0), b;
  return m;
}

Mat2 lift_all(Mat2 m, int conductor) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = m(i, j).lifted(conductor);
  return m;
}

std::vector<Rational> key_of(const Mat2& m, int conductor) {
  std::vector<Rational> key;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Cyclotomic& e = m(i, j).conductor() == conductor ? m(i, j) : m(i, j).lifted(conductor);
      key.insert(key.end(), e.coeffs().begin(), e.coeffs().end());
    }
  return key;
}

bool is_identity(const Mat2& m) {
  return m(0, 0) == Cyclotomic(1) && m(1, 1) == Cyclotomic(1) && m(0, 1).is_zero() && m(1, 0).is_zero();
}

int parse_positive(std::string_view s, std::string_view what) {
  if (s.empty()) throw SpecError("missing parameter in " + std::string(what));
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw SpecError("bad integer in " + std::string(what));
    v = v * 10 + (c - '0');
    if (v > 100000) throw SpecError("parameter too large in " + std::string(what));
  }
  if (v < 1) throw SpecError("parameter must be positive in " + std::string(what));
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::parse(std::string_view text) {
  GroupSpec s;
  if (text == "bt") {
    s.family = Family::Tetrahedral;
  } else if (text == "bo") {
    s.family = Family::Octahedral;
  } else if (text == "bi") {
    s.family = Family::Icosahedral;
  } else if (text.rfind("cyclic:", 0) == 0) {
    s.family = Family::Cyclic;
    s.param = parse_positive(text.substr(7), text);
  } else if (text.rfind("bd:", 0) == 0) {
    s.family = Family::BinaryDihedral;
    s.param = parse_positive(text.substr(3), text);
  } else {
    throw SpecError("unknown group spec: " + std::string(text));
  }
  return s;
}

std::string GroupSpec::str() const {
  switch (family) {
    case Family::Cyclic:
      return "cyclic:" + std::to_string(param);
    case Family::BinaryDihedral:
      return "bd:" + std::to_string(param);
    case Family::Tetrahedral:
      return "bt";
    case Family::Octahedral:
      return "bo";
    case Family::Icosahedral:
      return "bi";
  }
  return "?";
}

long GroupSpec::order() const {
  switch (family) {
    case Family::Cyclic:
      return param;
    case Family::BinaryDihedral:
      return 4L * param;
    case Family::Tetrahedral:
      return 24;
    case Family::Octahedral:
      return 48;
    case Family::Icosahedral:
      return 120;
  }
  return 0;
}

int GroupSpec::conductor() const {
  switch (family) {
    case Family::Cyclic:
      return param;
    case Family::BinaryDihedral:
      return std::lcm(2 * param, 4);
    case Family::Tetrahedral:
      return 4;
    case Family::Octahedral:
      return 8;
    case Family::Icosahedral:
      return 20;
  }
  return 1;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.family == b.family && (a.param == b.param || (a.family != Family::Cyclic && a.family != Family::BinaryDihedral));
}

std::vector<Mat2> builtin_generators(const GroupSpec& spec) {
  const Cyclotomic i = imag_unit();
  Mat2 w2;
  w2 << Cyclotomic(0), i, i, Cyclotomic(0);
  Mat2 w3_tetra;
  w3_tetra << Cyclotomic(1), i, Cyclotomic(1), -i;
  w3_tetra *= (Cyclotomic(1) - i).inverse();

  std::vector<Mat2> gens;
  switch (spec.family) {
    case Family::Cyclic: {
      const int l = spec.param;
      gens.push_back(diag(Cyclotomic::zeta(l, 1), Cyclotomic::zeta(l, -1)));
      break;
    }
    case Family::BinaryDihedral: {
      const int m = 2 * spec.param;
      gens.push_back(diag(Cyclotomic::zeta(m, 1), Cyclotomic::zeta(m, -1)));
      gens.push_back(w2);
      break;
    }
    case Family::Tetrahedral:
      gens.push_back(diag(i, -i));
      gens.push_back(w2);
      gens.push_back(w3_tetra);
      break;
    case Family::Octahedral:
      gens.push_back(diag(Cyclotomic::zeta(8, 1), Cyclotomic::zeta(8, -1)));
      gens.push_back(w2);
      gens.push_back(w3_tetra);
      break;
    case Family::Icosahedral: {
      auto z = [](long k) { return Cyclotomic::zeta(5, k); };
      Mat2 w3;
      w3 << -z(1) + z(4), z(2) - z(3), z(2) - z(3), z(1) - z(4);
      w3 *= sqrt5().inverse();
      // Diagonal sign chosen so that f1, f2, f3 below are invariant. The matrix
      // [[0,i],[i,0]] does not normalize <w1, w3> (adding it gives an infinite
      // group), so only w1 and w3 are used.
      gens.push_back(diag(Cyclotomic::zeta(10, 1), Cyclotomic::zeta(10, -1)));
      gens.push_back(w3);
      break;
    }
  }
  const int m = spec.conductor();
  for (auto& g : gens) {
    g = lift_all(g, m);
    verify(det2(CycMatrix(g)) == Cyclotomic(1), "generator of " + spec.str() + " has determinant != 1");
  }
  return gens;
}

// ---------------------------------------------------------------------------
// FiniteGroup

int FiniteGroup::find(const Mat2& m) const {
  auto it = index_.find(key_of(m, conductor_));
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup close(const std::vector<Mat2>& generators, std::size_t cap) {
  FiniteGroup g;
  int m = 1;
  for (const auto& x : generators)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m = static_cast<int>(lcm_conductor(m, x(i, j).conductor()));
  g.conductor_ = m;
  std::vector<Mat2> gens;
  for (const auto& x : generators) gens.push_back(lift_all(x, m));

  Mat2 id = lift_all(diag(Cyclotomic(1), Cyclotomic(1)), m);
  g.elements_.push_back(id);
  g.parent_.push_back(-1);
  g.parent_gen_.push_back(-1);
  g.index_.emplace(key_of(id, m), 0);
  // right[k][x] = index of x * gens[k]
  std::vector<std::vector<int>> right(gens.size());
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Mat2 p = g.elements_[head] * gens[k];
      auto key = key_of(p, m);
      auto it = g.index_.find(key);
      int idx;
      if (it == g.index_.end()) {
        if (g.elements_.size() >= cap)
          throw CapExceeded("group closure exceeded cap of " + std::to_string(cap) + " elements");
        idx = static_cast<int>(g.elements_.size());
        g.elements_.push_back(p);
        g.parent_.push_back(static_cast<int>(head));
        g.parent_gen_.push_back(static_cast<int>(k));
        g.index_.emplace(std::move(key), idx);
      } else {
        idx = it->second;
      }
      right[k].push_back(idx);
    }
  }
  const std::size_t n = g.elements_.size();
  for (const auto& x : gens) g.generators_.push_back(g.index_.at(key_of(x, m)));

  // mul(a, b) = mul(a, parent(b)) * gen(b), filled in BFS order of b.
  g.table_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) g.table_[a * n] = static_cast<int>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const int pb = g.parent_[b];
    const int k = g.parent_gen_[b];
    for (std::size_t a = 0; a < n; ++a) g.table_[a * n + b] = right[k][g.table_[a * n + pb]];
  }
  g.inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) {
        g.inverse_[a] = static_cast<int>(b);
        break;
      }
  g.orders_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    int x = static_cast<int>(a), o = 1;
    while (x != 0) {
      x = g.mul(x, static_cast<int>(a));
      ++o;
    }
    g.orders_[a] = o;
  }
  g.class_of_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.class_of_[a] >= 0) continue;
    std::set<int> orbit;
    for (std::size_t h = 0; h < n; ++h) orbit.insert(g.conj_by(static_cast<int>(h), static_cast<int>(a)));
    const int c = static_cast<int>(g.classes_.size());
    g.classes_.emplace_back(orbit.begin(), orbit.end());
    for (int x : orbit) g.class_of_[x] = c;
  }
  verify(is_identity(g.elements_[0]), "closure: element 0 is not the identity");
  for (const auto& e : g.elements_) verify(det2(CycMatrix(e)) == Cyclotomic(1), "closure: determinant != 1");
  return g;
}

FiniteGroup make_group(const GroupSpec& spec, std::size_t cap) {
  FiniteGroup g = close(builtin_generators(spec), cap);
  verify(g.order() == spec.order(), "group " + spec.str() + " has order " + std::to_string(g.order()) +
                                        ", expected " + std::to_string(spec.order()));
  return g;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens, std::string name) {
  Subgroup s;
  s.spec = std::move(name);
  s.member.assign(g.order(), false);
  std::deque<int> queue{0};
  s.member[0] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int k : gens) {
      int y = g.mul(x, k);
      if (!s.member[y]) {
        s.member[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (int i = 0; i < g.order(); ++i)
    if (s.member[i]) s.elements.push_back(i);
  return s;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::set<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, std::vector<int>(comms.begin(), comms.end()), "comm");
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x : h.elements)
    for (int a = 0; a < g.order(); ++a)
      if (!h.contains(g.conj_by(a, x))) return false;
  return true;
}

Subgroup resolve_subgroup(const FiniteGroup& g, const GroupSpec& spec, std::string_view text) {
  Subgroup s;
  if (text == "whole") {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    s = generated_subgroup(g, all, "whole");
  } else if (text == "comm") {
    s = commutator_subgroup(g);
  } else if (text == "cyc2") {
    if (spec.family != Family::BinaryDihedral) throw SpecError("cyc2 is only defined for binary dihedral groups");
    s = generated_subgroup(g, {g.generator_indices()[0]}, "cyc2");
  } else if (text.rfind("gens:", 0) == 0) {
    std::vector<int> gens;
    std::string body(text.substr(5));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw SpecError("empty generator index in " + std::string(text));
      int v = 0;
      for (char c : item) {
        if (c < '0' || c > '9') throw SpecError("bad generator index in " + std::string(text));
        v = v * 10 + (c - '0');
        if (v >= g.order()) throw SpecError("generator index out of range in " + std::string(text));
      }
      gens.push_back(v);
    }
    s = generated_subgroup(g, gens, std::string(text));
  } else {
    throw SpecError("unknown subgroup spec: " + std::string(text));
  }
  if (!is_normal(g, s)) throw SpecError("subgroup " + std::string(text) + " is not normal");
  Subgroup c = commutator_subgroup(g);
  for (int x : c.elements)
    if (!s.contains(x)) throw SpecError("quotient by " + std::string(text) + " is not abelian");
  return s;
}

// ---------------------------------------------------------------------------
// Characters

long CharacterTable::degree_int(int i) const {
  Rational d = chars[i][0].rational_value();
  return d.get_num().get_si();
}

int character_conductor(const FiniteGroup& g) {
  return static_cast<int>(lcm_conductor(g.conductor(), g.exponent()));
}

Cyclotomic inner_product(const FiniteGroup& g, const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic s;
  for (int c = 0; c < g.num_classes(); ++c) s += Cyclotomic(g.class_size(c)) * a[c] * b[c].conj();
  return s * Cyclotomic(ratio(1, g.order()));
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

ClassFunction defining_character(const FiniteGroup& g, int conductor) {
  ClassFunction f;
  for (int c = 0; c < g.num_classes(); ++c) {
    const Mat2& m = g.element(g.class_rep(c));
    f.push_back((m(0, 0) + m(1, 1)).lifted(conductor));
  }
  return f;
}

ClassFunction trivial_character(const FiniteGroup& g, int conductor) {
  return ClassFunction(g.num_classes(), Cyclotomic(1).lifted(conductor));
}

std::vector<ClassFunction> linear_characters(const FiniteGroup& g, int conductor) {
  const Subgroup comm = commutator_subgroup(g);
  // cosets of the commutator subgroup
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int c : comm.elements) coset_of[g.mul(a, c)] = id;
  }
  const int q = static_cast<int>(reps.size());
  auto qmul = [&](int x, int y) { return coset_of[g.mul(reps[x], reps[y])]; };
  auto qorder = [&](int x) {
    int y = x, o = 1;
    while (y != 0) {
      y = qmul(y, x);
      ++o;
    }
    return o;
  };
  // greedy generators of the quotient, largest order first
  std::vector<int> gens;
  std::vector<bool> covered(q, false);
  covered[0] = true;
  auto regenerate = [&]() {
    std::fill(covered.begin(), covered.end(), false);
    covered[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int k : gens) {
        int y = qmul(x, k);
        if (!covered[y]) {
          covered[y] = true;
          queue.push_back(y);
        }
      }
    }
  };
  while (std::count(covered.begin(), covered.end(), true) < q) {
    int best = -1, best_order = 0;
    for (int x = 0; x < q; ++x)
      if (!covered[x] && qorder(x) > best_order) {
        best = x;
        best_order = qorder(x);
      }
    gens.push_back(best);
    regenerate();
  }
  std::vector<int> orders;
  int l = 1;
  for (int x : gens) {
    orders.push_back(qorder(x));
    l = std::lcm(l, orders.back());
  }
  // words: exponent of zeta_l for each coset, given generator exponents
  std::vector<ClassFunction> out;
  std::vector<int> e(gens.size(), 0);
  while (true) {
    std::vector<int> value(q, -1);
    value[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = qmul(x, gens[k]);
        if (value[y] < 0) {
          value[y] = (value[x] + e[k] * (l / orders[k])) % l;
          queue.push_back(y);
        }
      }
    }
    bool hom = true;
    for (int x = 0; x < q && hom; ++x)
      for (int y = 0; y < q && hom; ++y)
        if (value[qmul(x, y)] != (value[x] + value[y]) % l) hom = false;
    if (hom) {
      ClassFunction f;
      for (int c = 0; c < g.num_classes(); ++c)
        f.push_back(Cyclotomic::zeta(l, value[coset_of[g.class_rep(c)]]).lifted(conductor));
      out.push_back(std::move(f));
    }
    std::size_t k = 0;
    while (k < e.size() && ++e[k] == orders[k]) e[k++] = 0;
    if (k == e.size()) break;
  }
  verify(static_cast<int>(out.size()) == q, "number of linear characters differs from the abelianization order");
  return out;
}

namespace {

bool contains_char(const std::vector<ClassFunction>& list, const ClassFunction& f) {
  return std::find(list.begin(), list.end(), f) != list.end();
}

CharacterTable cyclic_table(const FiniteGroup& g, int conductor) {
  const int l = g.order();
  CharacterTable t;
  t.conductor = conductor;
  std::vector<int> exp_of(l, -1);
  if (l > 1) {
    const int w = g.generator_indices()[0];
    int x = 0;
    for (int a = 0; a < l; ++a) {
      exp_of[x] = a;
      x = g.mul(x, w);
    }
  } else {
    exp_of[0] = 0;
  }
  for (int k = 0; k < l; ++k) {
    ClassFunction f;
    for (int c = 0; c < g.num_classes(); ++c)
      f.push_back(Cyclotomic::zeta(l, static_cast<long>(k) * exp_of[g.class_rep(c)]).lifted(conductor));
    t.chars.push_back(std::move(f));
  }
  return t;
}

CharacterTable dihedral_table(const FiniteGroup& g, int n, int conductor) {
  const int w1 = g.generator_indices()[0];
  const int w2 = g.generator_indices()[1];
  // every element is w1^a or w1^a w2
  std::vector<int> a_of(g.order(), -1), b_of(g.order(), -1);
  int x = 0;
  for (int a = 0; a < 2 * n; ++a) {
    a_of[x] = a;
    b_of[x] = 0;
    int y = g.mul(x, w2);
    a_of[y] = a;
    b_of[y] = 1;
    x = g.mul(x, w1);
  }
  CharacterTable t;
  t.conductor = conductor;
  const Cyclotomic i = imag_unit();
  for (int s : {1, -1}) {
    // t^2 = s^n
    const bool square_minus = (s == -1 && n % 2 == 1);
    for (int sign : {1, -1}) {
      Cyclotomic tv = square_minus ? Cyclotomic(sign) * i : Cyclotomic(sign);
      ClassFunction f;
      for (int c = 0; c < g.num_classes(); ++c) {
        int r = g.class_rep(c);
        Cyclotomic v = (a_of[r] % 2 == 0) ? Cyclotomic(1) : Cyclotomic(s);
        if (b_of[r] == 1) v *= tv;
        f.push_back(v.lifted(conductor));
      }
      t.chars.push_back(std::move(f));
    }
  }
  for (int k = 1; k < n; ++k) {
    ClassFunction f;
    for (int c = 0; c < g.num_classes(); ++c) {
      int r = g.class_rep(c);
      Cyclotomic v = b_of[r] == 1 ? Cyclotomic(0)
                                  : Cyclotomic::zeta(2 * n, static_cast<long>(k) * a_of[r]) +
                                        Cyclotomic::zeta(2 * n, -static_cast<long>(k) * a_of[r]);
      f.push_back(v.lifted(conductor));
    }
    t.chars.push_back(std::move(f));
  }
  return t;
}

}  // namespace

CharacterTable sieve_character_table(const FiniteGroup& g) {
  const int m = character_conductor(g);
  CharacterTable t;
  t.conductor = m;
  const std::vector<ClassFunction> linear = linear_characters(g, m);
  const ClassFunction chi_v = defining_character(g, m);
  std::vector<long> units;
  for (long k = 2; k < m; ++k)
    if (std::gcd(k, static_cast<long>(m)) == 1) units.push_back(k);

  auto& known = t.chars;
  auto add_closed = [&](const ClassFunction& f) {
    if (contains_char(known, f)) return;
    std::size_t start = known.size();
    known.push_back(f);
    for (std::size_t idx = start; idx < known.size(); ++idx) {
      const ClassFunction cur = known[idx];
      for (const auto& lam : linear) {
        ClassFunction tw = product(cur, lam);
        if (!contains_char(known, tw)) known.push_back(tw);
      }
      for (long k : units) {
        ClassFunction gal;
        for (const auto& v : cur) gal.push_back(v.galois(k));
        if (!contains_char(known, gal)) known.push_back(gal);
      }
    }
  };
  add_closed(trivial_character(g, m));
  for (const auto& lam : linear) add_closed(lam);
  if (inner_product(g, chi_v, chi_v) == Cyclotomic(1)) add_closed(chi_v);

  const int target = g.num_classes();
  while (static_cast<int>(known.size()) < target) {
    bool progress = false;
    for (std::size_t idx = 0; idx < known.size() && static_cast<int>(known.size()) < target; ++idx) {
      ClassFunction rest = product(known[idx], chi_v);
      const std::size_t count = known.size();
      for (std::size_t j = 0; j < count; ++j) {
        Cyclotomic mult = inner_product(g, rest, known[j]);
        if (mult.is_zero()) continue;
        for (int c = 0; c < target; ++c) rest[c] -= mult * known[j][c];
      }
      Cyclotomic norm = inner_product(g, rest, rest);
      if (norm == Cyclotomic(1) && sgn(rest[0].rational_value()) > 0 && !contains_char(known, rest)) {
        add_closed(rest);
        progress = true;
      }
    }
    if (!progress) throw VerificationError("character sieve stalled");
  }
  verify(static_cast<int>(known.size()) == target, "character sieve produced too many characters");
  return t;
}

CharacterTable character_table(const FiniteGroup& g, const GroupSpec& spec) {
  const int m = character_conductor(g);
  CharacterTable t;
  switch (spec.family) {
    case Family::Cyclic:
      t = cyclic_table(g, m);
      break;
    case Family::BinaryDihedral:
      t = dihedral_table(g, spec.param, m);
      break;
    default:
      t = sieve_character_table(g);
      break;
  }
  verify(validate_table(g, t).ok(), "character table of " + spec.str() + " failed validation");
  return t;
}

TableValidation validate_table(const FiniteGroup& g, const CharacterTable& t) {
  TableValidation v;
  const int k = g.num_classes();
  if (t.size() != k) return v;
  v.row_orthonormal = true;
  for (int a = 0; a < k && v.row_orthonormal; ++a)
    for (int b = 0; b <= a; ++b)
      if (!(inner_product(g, t.chars[a], t.chars[b]) == Cyclotomic(a == b ? 1 : 0))) {
        v.row_orthonormal = false;
        break;
      }
  v.column_orthogonal = true;
  for (int c = 0; c < k && v.column_orthogonal; ++c)
    for (int d = 0; d <= c; ++d) {
      Cyclotomic s;
      for (int i = 0; i < k; ++i) s += t.chars[i][c] * t.chars[i][d].conj();
      Cyclotomic expect = c == d ? Cyclotomic(ratio(g.order(), g.class_size(c))) : Cyclotomic(0);
      if (!(s == expect)) {
        v.column_orthogonal = false;
        break;
      }
    }
  Rational sum;
  bool degrees_ok = true;
  for (int i = 0; i < k; ++i) {
    if (!t.chars[i][0].is_rational()) {
      degrees_ok = false;
      break;
    }
    Rational d = t.chars[i][0].rational_value();
    sum += d * d;
  }
  v.degree_sum = degrees_ok && sum == g.order();
  v.tensor_integral = true;
  const ClassFunction chi_v = defining_character(g, t.conductor);
  for (int a = 0; a < k && v.tensor_integral; ++a) {
    ClassFunction p = product(t.chars[a], chi_v);
    for (int b = 0; b < k; ++b) {
      Cyclotomic mult = inner_product(g, p, t.chars[b]);
      if (!mult.is_rational() || !is_integer(mult.rational_value()) || sgn(mult.rational_value()) < 0) {
        v.tensor_integral = false;
        break;
      }
    }
  }
  return v;
}

bool same_characters(const CharacterTable& a, const CharacterTable& b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a.chars)
    if (!contains_char(b.chars, f)) return false;
  return true;
}

bool kernel_contains(const FiniteGroup& g, const ClassFunction& chi, const Subgroup& d) {
  for (int x : d.elements)
    if (!(value_at(g, chi, x) == chi[0])) return false;
  return true;
}

bool same_restriction(const FiniteGroup& g, const ClassFunction& chi, const ClassFunction& psi, const Subgroup& d) {
  for (int x : d.elements)
    if (!(value_at(g, chi, x) == value_at(g, psi, x))) return false;
  return true;
}

}  // namespace qzf
