#include "lieq/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace lieq {

void validate_type(const SimpleType& t) {
  auto bad = [&] { throw DomainError("invalid rank for type " + t.name()); };
  switch (t.family) {
    case 'A': if (t.rank < 1) bad(); break;
    case 'B': if (t.rank < 2) bad(); break;
    case 'C': if (t.rank < 2) bad(); break;
    case 'D': if (t.rank < 4) bad(); break;
    case 'E': if (t.rank < 6 || t.rank > 8) bad(); break;
    case 'F': if (t.rank != 4) bad(); break;
    case 'G': if (t.rank != 2) bad(); break;
    default: throw DomainError(std::string("unknown family '") + t.family + "'");
  }
}

namespace {

// Bourbaki numbering, 0-based.
std::vector<std::vector<long>> simple_cartan(const SimpleType& t) {
  const int n = t.rank;
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(2, 3);
      link(1, 3);
      link(3, 4);
      for (int i = 4; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      link(0, 1);
      c[1][0] = -3;  // alpha_1 short
      break;
  }
  return c;
}

}  // namespace

std::string RootDatum::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].name();
  }
  return s;
}

int RootDatum::root_index(const Root& r) const {
  auto it = index.find(r);
  if (it == index.end()) throw DomainError("not a root: " + ivec_str(r));
  return it->second;
}

int RootDatum::factor_of(int simple_index) const {
  for (int f = static_cast<int>(offset.size()) - 1; f >= 0; --f)
    if (simple_index >= offset[f]) return f;
  throw DomainError("simple index out of range");
}

Rational RootDatum::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0 && cartan[i][j] != 0) s += a[i] * b[j] * cartan[i][j] * d[j];
  }
  return s;
}

long RootDatum::sq_len_half(const Root& a) const {
  Rational s = inner(a, a) / 2;
  return s.get_num().get_si();
}

Weight RootDatum::root_to_weight(const Root& a) const {
  Weight w(n, 0);
  for (int i = 0; i < n; ++i)
    if (a[i] != 0)
      for (int j = 0; j < n; ++j) w[j] += a[i] * cartan[i][j];
  return w;
}

QVec RootDatum::weight_to_root_coords(const Weight& w) const {
  // w = a^T C  =>  a = w^T C^{-1} (as a row vector)
  QVec a(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (w[i] != 0) a[j] += w[i] * inverse_cartan(i, j);
  return a;
}

bool RootDatum::weight_is_root_lattice(const Weight& w) const {
  for (const auto& x : weight_to_root_coords(w))
    if (x.get_den() != 1) return false;
  return true;
}

Root RootDatum::weight_to_root(const Weight& w) const {
  Root r(n, 0);
  QVec a = weight_to_root_coords(w);
  for (int i = 0; i < n; ++i) {
    if (a[i].get_den() != 1) throw DomainError("weight not in the root lattice: " + ivec_str(w));
    r[i] = a[i].get_num().get_si();
  }
  return r;
}

long RootDatum::height(const Root& a) const {
  long h = 0;
  for (auto x : a) h += x;
  return h;
}

Weight RootDatum::fundamental(int i) const {
  Weight w(n, 0);
  w[i] = 1;
  return w;
}

Root RootDatum::simple(int i) const {
  Root r(n, 0);
  r[i] = 1;
  return r;
}

RootDatum build_root_system(const SimpleType& t) { return build_root_system(std::vector<SimpleType>{t}); }

RootDatum build_root_system(const std::vector<SimpleType>& types) {
  if (types.empty()) throw DomainError("empty type list");
  RootDatum rd;
  rd.factors = types;
  for (const auto& t : types) {
    validate_type(t);
    rd.offset.push_back(rd.n);
    rd.n += t.rank;
  }
  const int n = rd.n;
  rd.cartan.assign(n, std::vector<long>(n, 0));
  rd.d.assign(n, 1);
  for (std::size_t f = 0; f < types.size(); ++f) {
    auto c = simple_cartan(types[f]);
    const int o = rd.offset[f], r = types[f].rank;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) rd.cartan[o + i][o + j] = c[i][j];
    // symmetrizer: C_ij d_j = C_ji d_i, propagated along the (connected) diagram
    std::vector<Rational> dq(r, Rational(0));
    dq[0] = 1;
    std::deque<int> todo{0};
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop_front();
      for (int j = 0; j < r; ++j)
        if (j != i && c[i][j] != 0 && sgn(dq[j]) == 0) {
          dq[j] = dq[i] * c[j][i] / c[i][j];
          todo.push_back(j);
        }
    }
    Rational mn = dq[0];
    for (auto& x : dq) mn = std::min(mn, x);
    for (int i = 0; i < r; ++i) {
      Rational v = dq[i] / mn;
      rd.d[o + i] = v.get_num().get_si();
    }
  }

  QMatrix cm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cm(i, j) = rd.cartan[i][j];
  // inverse via solving against the identity
  QMatrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    QVec e(n, Rational(0));
    e[j] = 1;
    QVec x = solve_linear(cm, e);
    for (int i = 0; i < n; ++i) inv(i, j) = x[i];
  }
  rd.inverse_cartan = inv;

  // positive roots: close the simple roots under simple reflections, keep positives
  std::set<Root> seen;
  std::deque<Root> todo;
  for (int i = 0; i < n; ++i) {
    seen.insert(rd.simple(i));
    todo.push_back(rd.simple(i));
  }
  while (!todo.empty()) {
    Root r = todo.front();
    todo.pop_front();
    Weight w = rd.root_to_weight(r);
    for (int j = 0; j < n; ++j) {
      Root s = r;
      s[j] -= w[j];
      if (seen.insert(s).second) todo.push_back(s);
    }
  }
  for (const auto& r : seen) {
    bool pos = true;
    for (auto x : r)
      if (x < 0) pos = false;
    if (pos) rd.positive.push_back(r);
  }
  std::sort(rd.positive.begin(), rd.positive.end(), [&](const Root& a, const Root& b) {
    long ha = rd.height(a), hb = rd.height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rd.roots = rd.positive;
  for (const auto& r : rd.positive) rd.roots.push_back(negate(r));
  for (std::size_t k = 0; k < rd.roots.size(); ++k) rd.index[rd.roots[k]] = static_cast<int>(k);
  if (seen.size() != rd.roots.size()) throw CheckFailure("root closure is not symmetric");

  // highest long / short root per factor: the dominant positive roots
  for (std::size_t f = 0; f < types.size(); ++f) {
    const int o = rd.offset[f], r = types[f].rank;
    Root bmax, bmin;
    long lmax = -1, lmin = -1;
    for (const auto& root : rd.positive) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (root[i] != 0 && (i < o || i >= o + r)) inside = false;
      if (!inside) continue;
      Weight w = rd.root_to_weight(root);
      if (!is_dominant(w)) continue;
      long l = rd.sq_len_half(root);
      if (lmax < 0 || l > lmax) { lmax = l; bmax = root; }
      if (lmin < 0 || l < lmin) { lmin = l; bmin = root; }
    }
    rd.beta_max.push_back(bmax);
    rd.beta_min.push_back(bmin);
  }
  return rd;
}

long pairing(const RootDatum& rd, const Weight& lam, const Root& alpha) {
  if (!rd.is_root(alpha)) throw DomainError("pairing: not a root: " + ivec_str(alpha));
  long num = 0;
  for (int j = 0; j < rd.n; ++j) num += lam[j] * alpha[j] * rd.d[j];
  long den = rd.sq_len_half(alpha);
  if (num % den != 0) throw CheckFailure("non-integral pairing");
  return num / den;
}

long pairing_roots(const RootDatum& rd, const Root& beta, const Root& alpha) {
  return pairing(rd, rd.root_to_weight(beta), alpha);
}

Weight reflect(const RootDatum& rd, const Root& alpha, const Weight& lam) {
  long p = pairing(rd, lam, alpha);
  return add_vec(lam, rd.root_to_weight(alpha), -p);
}

Root reflect_root(const RootDatum& rd, const Root& alpha, const Root& beta) {
  long p = pairing_roots(rd, beta, alpha);
  return add_vec(beta, alpha, -p);
}

Weight simple_reflect(const RootDatum& rd, int j, const Weight& lam) {
  Weight w = lam;
  const long c = lam[j];
  if (c == 0) return w;
  for (int k = 0; k < rd.n; ++k) w[k] -= c * rd.cartan[j][k];
  return w;
}

Root simple_reflect_root(const RootDatum& rd, int j, const Root& beta) {
  Root r = beta;
  r[j] -= rd.root_to_weight(beta)[j];
  return r;
}

std::set<Weight> weyl_orbit(const RootDatum& rd, const Weight& lam) {
  std::set<Weight> orbit{lam};
  std::deque<Weight> todo{lam};
  while (!todo.empty()) {
    Weight w = todo.front();
    todo.pop_front();
    for (int j = 0; j < rd.n; ++j) {
      if (w[j] == 0) continue;
      Weight s = simple_reflect(rd, j, w);
      if (orbit.insert(s).second) todo.push_back(s);
    }
  }
  return orbit;
}

bool is_dominant(const Weight& lam) {
  for (auto x : lam)
    if (x < 0) return false;
  return true;
}

std::pair<Weight, std::vector<int>> dominant_representative(const RootDatum& rd,
                                                            const Weight& lam) {
  Weight w = lam;
  std::vector<int> word;
  for (;;) {
    int j = -1;
    for (int k = 0; k < rd.n; ++k)
      if (w[k] < 0) {
        j = k;
        break;
      }
    if (j < 0) return {w, word};
    w = simple_reflect(rd, j, w);
    word.push_back(j);
  }
}

Weight apply_word(const RootDatum& rd, const std::vector<int>& word, const Weight& lam) {
  Weight w = lam;
  for (int j : word) w = simple_reflect(rd, j, w);
  return w;
}

Root apply_word_root(const RootDatum& rd, const std::vector<int>& word, const Root& beta) {
  Root r = beta;
  for (int j : word) r = simple_reflect_root(rd, j, r);
  return r;
}

StringLengths root_string(const RootDatum& rd, const Weight& lam, const Root& beta,
                          const std::set<Weight>& weights) {
  if (!weights.count(lam)) throw DomainError("root_string: weight not in the weight set");
  const Weight bw = rd.root_to_weight(beta);
  StringLengths s;
  while (weights.count(add_vec(lam, bw, -(s.j + 1)))) ++s.j;
  while (weights.count(add_vec(lam, bw, s.k + 1))) ++s.k;
  // the string must not resume after a gap
  const long reach = s.j + s.k + 8;
  for (long r = 1; r <= reach; ++r) {
    if (weights.count(add_vec(lam, bw, -(s.j + 1 + r))) || weights.count(add_vec(lam, bw, s.k + 1 + r)))
      throw CheckFailure("root_string: broken string through " + ivec_str(lam));
  }
  if (pairing(rd, lam, beta) != s.j - s.k)
    throw CheckFailure("root_string: <lam,beta> != j - k at " + ivec_str(lam));
  return s;
}

Weight factor_projection(const RootDatum& rd, int i, const Weight& lam) {
  if (rd.is_simple()) throw DomainError("factor_projection needs a semisimple datum");
  if (i < 0 || i >= static_cast<int>(rd.factors.size())) throw DomainError("factor index out of range");
  const int o = rd.offset[i];
  return Weight(lam.begin() + o, lam.begin() + o + rd.factors[i].rank);
}

Weight embed_factor(const RootDatum& rd, int i, const Weight& part) {
  Weight w(rd.n, 0);
  for (int k = 0; k < rd.factors[i].rank; ++k) w[rd.offset[i] + k] = part[k];
  return w;
}

bool in_positive_half(const Weight& lam) {
  for (auto x : lam) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

IVec negate(IVec v) {
  for (auto& x : v) x = -x;
  return v;
}

IVec add_vec(const IVec& a, const IVec& b, long s) {
  IVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
  return r;
}

bool is_zero_ivec(const IVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

std::string ivec_str(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace lieq
