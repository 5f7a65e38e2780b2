#include "lieq/repmod.hpp"

#include <algorithm>

namespace lieq {

namespace {

GMatrix unit(int d, int i, int j, const Gauss& v = Gauss(1)) {
  GMatrix m(d, d);
  m(i, j) = v;
  return m;
}

GMatrix commutator(const GMatrix& a, const GMatrix& b) { return a * b - b * a; }

bool is_gauss_integral(const GMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).re.get_den() != 1 || m(i, j).im.get_den() != 1) return false;
  return true;
}

bool is_diagonal(const GMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

// Chevalley generators e_i, f_i, h_i of the natural representation.
struct NaturalGens {
  int dim = 0;
  std::vector<GMatrix> e, f, h;
};

NaturalGens natural_generators(const SimpleType& t) {
  NaturalGens g;
  const int n = t.rank;
  auto push = [&](GMatrix e, GMatrix f) {
    g.h.push_back(commutator(e, f));
    g.e.push_back(std::move(e));
    g.f.push_back(std::move(f));
  };
  if (t.family == 'A') {
    g.dim = n + 1;
    for (int i = 0; i < n; ++i) push(unit(g.dim, i, i + 1), unit(g.dim, i + 1, i));
    return g;
  }
  // v_1..v_n first, then (B only) v_0, then v_-n..v_-1
  const bool b = t.family == 'B';
  g.dim = b ? 2 * n + 1 : 2 * n;
  auto pos = [](int s) { return s; };
  auto neg = [&](int s) { return b ? 2 * n - s : 2 * n - 1 - s; };
  const int d = g.dim;
  for (int s = 0; s + 1 < n; ++s) {
    GMatrix e = unit(d, pos(s), pos(s + 1)) - unit(d, neg(s + 1), neg(s));
    push(e, e.transpose());
  }
  const int s = n - 1;
  switch (t.family) {
    case 'B': {
      // (1 + i) normalization keeps X_-a = X_a^* with the standard Hermitian form
      const int z = n;
      GMatrix e = unit(d, pos(s), z) - unit(d, z, neg(s));
      push(Gauss(1, 1) * e, Gauss(1, -1) * e.transpose());
      break;
    }
    case 'C':
      push(unit(d, pos(s), neg(s)), unit(d, neg(s), pos(s)));
      break;
    case 'D': {
      GMatrix e = unit(d, pos(s - 1), neg(s)) - unit(d, pos(s), neg(s - 1));
      push(e, e.transpose());
      break;
    }
    default:
      throw DomainError("natural module only for types A, B, C, D");
  }
  return g;
}

GMatrix power(const GMatrix& m, long k) {
  GMatrix r = GMatrix::identity(m.rows());
  for (long i = 0; i < k; ++i) r = r * m;
  return r;
}

// span of real and imaginary parts
QSubspace re_im_span(const std::vector<GVec>& vs, std::size_t ambient) {
  std::vector<QVec> out;
  for (const auto& v : vs) {
    QVec re(ambient), im(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      re[i] = v[i].re;
      im[i] = v[i].im;
    }
    out.push_back(std::move(re));
    out.push_back(std::move(im));
  }
  return span(out, ambient);
}

QSubspace image_of(const std::vector<QMatrix>& maps, const QSubspace& s) {
  std::vector<QVec> vs;
  for (const auto& m : maps)
    for (const auto& b : s.basis) vs.push_back(m * b);
  return span(vs, s.ambient);
}

GSubspace empty_g(std::size_t n) { return GSubspace{n, {}}; }

// weight-raising equivalence: V_{lam+b} != 0 iff X_b V_lam != 0
void verify_raising(const ComplexModule& m) {
  for (const auto& [lam, v] : m.weight_spaces)
    for (int a = 0; a < m.cd.nroots; ++a) {
      const bool target = m.has_weight(add_vec(lam, m.cd.weight_of(a)));
      const bool moves = !image(m.action[a], v).empty();
      require(target == moves, "raising equivalence fails at weight " + ivec_str(lam) + ", root " +
                                   ivec_str(m.cd.rd.roots[a]));
    }
}

// G acting on C^dim through complex-linear extension of action0
ComplexModule complexify(const ChevalleyData& cd, const CompactBasis& cb,
                         const std::vector<QMatrix>& action0) {
  ComplexModule m;
  m.cd = cd;
  m.kind = ModuleKind::Complexified;
  m.dim = static_cast<int>(action0[0].rows());
  const int P = cb.npos;
  const Gauss half(frac(1, 2));
  const Gauss mi(Rational(0), Rational(-1));
  m.action.resize(cd.dim);
  for (int k = 0; k < P; ++k) {
    GMatrix a = to_gauss(action0[cb.A(k)]), b = to_gauss(action0[cb.B(k)]);
    m.action[k] = (a + mi * b) * half;
    m.action[k + P] = (-a + mi * b) * half;
  }
  for (int i = 0; i < cb.n; ++i) m.action[cd.h_index(i)] = mi * to_gauss(action0[cb.tt(i)]);
  verify_homomorphism(m);
  decompose_weights(m);
  verify_raising(m);
  return m;
}

std::vector<QVec> samples(const QSubspace& s) {
  std::vector<QVec> out = s.basis;
  if (s.dim() < 2) return out;
  QVec sum(s.ambient, Rational(0)), ramp = sum, alt = sum;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    sum = add(sum, s.basis[i]);
    ramp = add(ramp, s.basis[i], Rational(static_cast<long>(i + 1)));
    alt = add(alt, s.basis[i], Rational(i % 2 ? -1 : 1));
  }
  out.push_back(sum);
  out.push_back(ramp);
  out.push_back(alt);
  return out;
}

int positive_root_index(const RootDatum& rd, const Root& beta) {
  if (!rd.is_root(beta)) throw DomainError("not a root: " + ivec_str(beta));
  const int k = rd.root_index(beta);
  if (k >= static_cast<int>(rd.positive.size())) throw DomainError("not a positive root: " + ivec_str(beta));
  return k;
}

}  // namespace

std::string kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::Adjoint: return "adjoint";
    case ModuleKind::Natural: return "natural";
    case ModuleKind::Complexified: return "complexified";
  }
  return "?";
}

GMatrix ComplexModule::act(const GVec& x) const {
  GMatrix out(dim, dim);
  for (int k = 0; k < cd.dim; ++k)
    if (!x[k].is_zero()) out += x[k] * action[k];
  return out;
}

GSubspace ComplexModule::weight_space(const Weight& mu) const {
  auto it = weight_spaces.find(mu);
  return it == weight_spaces.end() ? empty_g(dim) : it->second;
}

bool ComplexModule::has_weight(const Weight& mu) const { return weight_spaces.count(mu) > 0; }

std::set<Weight> ComplexModule::weights() const {
  std::set<Weight> out;
  for (const auto& [w, s] : weight_spaces) out.insert(w);
  return out;
}

std::set<Weight> ComplexModule::nonzero_weights() const {
  std::set<Weight> out;
  for (const auto& [w, s] : weight_spaces)
    if (!is_zero_ivec(w)) out.insert(w);
  return out;
}

ComplexModule build_module(const RootDatum& rd, ModuleKind kind) {
  return build_module(build_chevalley(rd), kind);
}

ComplexModule build_module(const ChevalleyData& cd, ModuleKind kind) {
  const RootDatum& rd = cd.rd;
  ComplexModule m;
  m.cd = cd;
  m.kind = kind;
  if (kind == ModuleKind::Adjoint) {
    m.dim = cd.dim;
    for (int k = 0; k < cd.dim; ++k) m.action.push_back(to_gauss(adjoint_matrix(cd, k)));
  } else if (kind == ModuleKind::Natural) {
    if (!rd.is_simple() || std::string("ABCD").find(rd.factors[0].family) == std::string::npos)
      throw DomainError("natural module only for simple types A, B, C, D, not " + rd.name());
    NaturalGens g = natural_generators(rd.factors[0]);
    m.dim = g.dim;
    const int P = cd.nroots / 2;
    m.action.assign(cd.dim, GMatrix(m.dim, m.dim));
    for (int i = 0; i < rd.n; ++i) {
      const int k = rd.root_index(rd.simple(i));
      m.action[k] = g.e[i];
      m.action[cd.neg(k)] = g.f[i];
      m.action[cd.h_index(i)] = g.h[i];
    }
    for (int x = 0; x < P; ++x) {
      auto [r, s] = cd.extraspecial[x];
      if (r < 0) continue;
      m.action[x] = commutator(m.action[r], m.action[s]) * Gauss(frac(1, cd.N(r, s)));
      const int nr = cd.neg(r), ns = cd.neg(s);
      m.action[cd.neg(x)] = commutator(m.action[nr], m.action[ns]) * Gauss(frac(1, cd.N(nr, ns)));
    }
  } else {
    throw DomainError("build_module: use realify for complexified modules");
  }
  verify_homomorphism(m);
  decompose_weights(m);
  verify_raising(m);
  return m;
}

void verify_homomorphism(const ComplexModule& m) {
  const ChevalleyData& cd = m.cd;
  std::vector<int> gens;
  for (int i = 0; i < cd.rd.n; ++i) {
    const int k = cd.rd.root_index(cd.rd.simple(i));
    gens.push_back(k);
    gens.push_back(cd.neg(k));
    gens.push_back(cd.h_index(i));
  }
  for (int a : gens)
    for (int b = 0; b < cd.dim; ++b) {
      GMatrix lhs(m.dim, m.dim);
      for (const auto& [c, v] : cd.bracket_basis(a, b)) lhs += Gauss(v) * m.action[c];
      require(lhs == commutator(m.action[a], m.action[b]),
              "module action is not a homomorphism at basis pair (" + std::to_string(a) + ", " +
                  std::to_string(b) + ")");
    }
}

void decompose_weights(ComplexModule& m) {
  const int n = m.cd.rd.n;
  const std::size_t d = m.dim;
  std::vector<GMatrix> h;
  for (int i = 0; i < n; ++i) h.push_back(m.action[m.cd.h_index(i)]);
  m.weight_spaces.clear();

  auto integer_of = [](const Gauss& z) {
    require(z.is_real() && z.re.get_den() == 1, "non-integral eigenvalue of a coroot");
    return z.re.get_num().get_si();
  };

  if (std::all_of(h.begin(), h.end(), is_diagonal)) {
    std::map<Weight, std::vector<GVec>> groups;
    for (std::size_t c = 0; c < d; ++c) {
      Weight w(n);
      for (int i = 0; i < n; ++i) w[i] = integer_of(h[i](c, c));
      GVec e(d, Gauss(0));
      e[c] = 1;
      groups[w].push_back(std::move(e));
    }
    for (auto& [w, vs] : groups) m.weight_spaces[w] = span(vs, d);
  } else {
    std::vector<std::pair<Weight, GSubspace>> parts{{Weight{}, whole_space<Gauss>(d)}};
    for (int i = 0; i < n; ++i) {
      long bound = 0;
      for (std::size_t r = 0; r < d; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < d; ++c) s += abs(h[i](r, c).re) + abs(h[i](r, c).im);
        mpz_class up;
        mpz_cdiv_q(up.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        bound = std::max(bound, up.get_si());
      }
      std::vector<std::pair<Weight, GSubspace>> next;
      for (auto& [w, s] : parts) {
        std::size_t found = 0;
        for (long c = -bound; c <= bound && found < s.dim(); ++c) {
          GSubspace k = kernel_on(h[i] - Gauss(c) * GMatrix::identity(d), s);
          if (k.empty()) continue;
          found += k.dim();
          Weight w2 = w;
          w2.push_back(c);
          next.emplace_back(std::move(w2), std::move(k));
        }
        require(found == s.dim(), "coroot action not diagonalizable with integer eigenvalues");
      }
      parts = std::move(next);
    }
    for (auto& [w, s] : parts) m.weight_spaces[w] = std::move(s);
  }

  std::size_t total = 0;
  for (const auto& [w, s] : m.weight_spaces) total += s.dim();
  require(total == d, "weight spaces do not fill the module");
  m.zero_space = m.weight_space(Weight(n, 0));
  for (const auto& [w, s] : m.weight_spaces)
    for (int j = 0; j < n; ++j)
      require(m.weight_space(simple_reflect(m.cd.rd, j, w)).dim() == s.dim(),
              "weight multiplicities not Weyl invariant at " + ivec_str(w));
}

ZFormReport zform_check(const ComplexModule& m) {
  ZFormReport rep;
  for (const auto& a : m.action)
    if (!is_gauss_integral(a)) rep.integral_generators = false;
  for (int a = 0; a < m.cd.nroots; ++a) {
    const GMatrix& x = m.action[a];
    GMatrix term = GMatrix::identity(m.dim);
    for (int k = 1;; ++k) {
      term = term * x * Gauss(frac(1, k));
      if (term.is_zero()) {
        rep.max_power[a] = k - 1;
        break;
      }
      if (k > m.dim) throw CheckFailure("root generator is not nilpotent");
      if (!is_gauss_integral(term)) {
        rep.ok = false;
        rep.violations.emplace_back(a, k);
      }
    }
  }
  return rep;
}

ComplexModule with_scaled_root_generators(const ComplexModule& m, const Rational& s) {
  ComplexModule out = m;
  for (int a = 0; a < m.cd.nroots; ++a) out.action[a] *= Gauss(s);
  return out;
}

// ---- real modules

QMatrix RealModule::act0(const QVec& z) const {
  QMatrix out(dim, dim);
  for (int a = 0; a < cb.dim; ++a)
    if (sgn(z[a]) != 0) out += z[a] * action0[a];
  return out;
}

GVec RealModule::conjugation(const GVec& v) const {
  GVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

QSubspace RealModule::u_weight(const Weight& lam) const {
  if (is_zero_ivec(lam)) return u_zero;
  auto it = u_weight_spaces.find(in_positive_half(lam) ? lam : negate(lam));
  return it == u_weight_spaces.end() ? QSubspace{static_cast<std::size_t>(dim), {}} : it->second;
}

std::vector<Weight> RealModule::positive_weights() const {
  std::vector<Weight> out;
  for (const auto& [w, s] : u_weight_spaces)
    if (!is_zero_ivec(w)) out.push_back(w);
  return out;
}

namespace {

// vc, the conjugation check, real weight spaces and the Gram checks, from action0 and blocks
void finish_real_module(RealModule& u) {
  const ChevalleyData& cd = u.source.cd;
  u.vc = complexify(cd, u.cb, u.action0);

  // J X J = J0(X): J0 X_r = -X_-r, J0 h = -h
  for (int k = 0; k < cd.dim; ++k) {
    const int j0 = cd.is_root_index(k) ? cd.neg(k) : k;
    GMatrix c = u.vc.action[k];
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = c(i, j).conj();
    require(c == -u.vc.action[j0], "conjugation does not intertwine X and J0(X)");
  }

  const std::size_t D = u.dim;
  u.u_zero = QSubspace{D, {}};
  u.u_weight_spaces.clear();
  for (const auto& [lam, v] : u.vc.weight_spaces) {
    QSubspace s = re_im_span(v.basis, D);
    if (is_zero_ivec(lam)) {
      require(s.dim() == v.dim(), "dim U_0 != dim V_0");
      u.u_zero = s;
      u.u_weight_spaces[lam] = s;
      continue;
    }
    require(same_subspace(s, re_im_span(u.vc.weight_space(negate(lam)).basis, D)),
            "U_lam != U_-lam at " + ivec_str(lam));
    require(s.dim() == 2 * v.dim(), "dim U_lam != 2 dim V_lam at " + ivec_str(lam));
    if (in_positive_half(lam)) u.u_weight_spaces[lam] = s;
  }

  u.inner_gram = invariant_inner_product(u);
  std::size_t total = 0;
  std::vector<const QSubspace*> parts;
  for (const auto& [w, s] : u.u_weight_spaces) {
    total += s.dim();
    parts.push_back(&s);
  }
  require(total == D, "real weight spaces do not fill U");
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (const auto& x : parts[a]->basis)
        for (const auto& y : parts[b]->basis)
          require(sgn(bilinear(x, u.inner_gram, y)) == 0, "real weight spaces not orthogonal");
}

}  // namespace

RealModule realify(const ComplexModule& m) {
  RealModule u;
  const ChevalleyData& cd = m.cd;
  u.cb = build_compact_basis(cd);
  u.source = m;
  u.adjoint_real = m.kind == ModuleKind::Adjoint;
  if (u.adjoint_real) {
    u.dim = cd.dim;
    for (int a = 0; a < u.cb.dim; ++a) u.action0.push_back(u.cb.ad(a));
  } else {
    u.dim = 2 * m.dim;
    for (int a = 0; a < u.cb.dim; ++a) u.action0.push_back(realify(m.act(u.cb.to_chevalley(a))));
  }
  u.blocks = {{u.dim, u.adjoint_real}};
  finish_real_module(u);
  return u;
}

RealModule trivial_module(const ChevalleyData& cd, int dim) {
  if (dim <= 0) throw DomainError("trivial module needs positive dimension");
  RealModule u;
  u.cb = build_compact_basis(cd);
  u.source.cd = cd;
  u.source.kind = ModuleKind::Complexified;
  u.dim = dim;
  u.action0.assign(u.cb.dim, QMatrix(dim, dim));
  u.blocks = {{dim, false}};
  finish_real_module(u);
  return u;
}

RealModule direct_sum(const RealModule& a, const RealModule& b) {
  if (a.cd().rd.cartan != b.cd().rd.cartan) throw DomainError("direct sum of modules over different groups");
  RealModule u;
  u.cb = a.cb;
  u.source = a.source;
  u.dim = a.dim + b.dim;
  for (int z = 0; z < u.cb.dim; ++z) {
    QMatrix m(u.dim, u.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m(i, j) = a.action0[z](i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.action0[z](i, j);
    u.action0.push_back(std::move(m));
  }
  u.blocks = a.blocks;
  u.blocks.insert(u.blocks.end(), b.blocks.begin(), b.blocks.end());
  finish_real_module(u);
  return u;
}

bool is_invariant_gram(const RealModule& u, const QMatrix& gram) {
  for (const auto& z : u.action0)
    if (!(z.transpose() * gram + gram * z).is_zero()) return false;
  return true;
}

QMatrix invariant_inner_product(const RealModule& u) {
  QMatrix g(u.dim, u.dim);
  int off = 0;
  for (const auto& [d, adj] : u.blocks) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        g(off + i, off + j) = adj ? u.cb.neg_killing(i, j) : Rational(i == j ? 1 : 0);
    off += d;
  }
  require(off == u.dim, "Gram blocks do not cover U");
  require(is_positive_definite(g), "inner product candidate is not positive definite");
  require(is_invariant_gram(u, g), "G0 does not act skew-symmetrically for the candidate Gram");
  return g;
}

// ---- Weyl operators

Weight WeylOperator::apply(const RootDatum& rd, const Weight& mu) const {
  Weight w = mu;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(rd, *it, w);
  return w;
}

Root WeylOperator::apply_root(const RootDatum& rd, const Root& r) const {
  Root x = r;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect_root(rd, *it, x);
  return x;
}

WeylOperator weyl_operator(const ComplexModule& m, const std::vector<Root>& word) {
  const ChevalleyData& cd = m.cd;
  const RootDatum& rd = cd.rd;
  WeylOperator w;
  w.word = word;
  GMatrix t = GMatrix::identity(m.dim), tinv = t;
  for (const auto& r : word) {
    if (!rd.is_root(r)) throw DomainError("weyl_operator: not a root: " + ivec_str(r));
    const int a = rd.root_index(r);
    const GMatrix& x = m.action[a];
    const GMatrix& y = m.action[cd.neg(a)];
    GMatrix ex = nilpotent_exp(x), emy = nilpotent_exp(-y);
    t = t * ex * emy * ex;
    GMatrix enx = nilpotent_exp(-x), ey = nilpotent_exp(y);
    tinv = enx * ey * enx * tinv;
  }
  require(t * tinv == GMatrix::identity(m.dim), "Weyl operator inverse mismatch");
  w.matrix = t;

  auto coroot_action = [&](const Root& r) {
    auto c = cd.coroot(r);
    GMatrix h(m.dim, m.dim);
    for (int i = 0; i < rd.n; ++i)
      if (c[i]) h += Gauss(c[i]) * m.action[cd.h_index(i)];
    return h;
  };
  for (int j = 0; j < rd.n; ++j)
    require(t * m.action[cd.h_index(j)] * tinv == coroot_action(w.apply_root(rd, rd.simple(j))),
            "T h T^-1 != sigma(h)");
  for (const auto& [mu, v] : m.weight_spaces)
    require(same_subspace(image(t, v), m.weight_space(w.apply(rd, mu))),
            "T(V_mu) != V_sigma(mu) at " + ivec_str(mu));
  require(same_subspace(image(t, m.zero_space), m.zero_space), "T(V_0) != V_0");
  return w;
}

WeylOperator weyl_operator(const RealModule& u, const std::vector<Root>& word) {
  WeylOperator w = weyl_operator(u.vc, word);
  require(is_real(w.matrix), "Weyl operator does not preserve U");
  return w;
}

// ---- kernels and nonsingular subspaces

QSubspace ab_kernel(const RealModule& u, const Root& beta, const Weight& lam) {
  const RootDatum& rd = u.cd().rd;
  const int k = positive_root_index(rd, beta);
  const QSubspace ul = u.u_weight(lam);
  const QMatrix a = u.A(k), b = u.B(k);
  QSubspace ka = kernel_on(a, ul), kb = kernel_on(b, ul);
  const std::string at = " (beta " + ivec_str(beta) + ", lam " + ivec_str(lam) + ")";
  require(same_subspace(ka, kb), "Ker A_beta != Ker B_beta on U_lam" + at);
  if (ul.empty()) return ka;
  const Weight bw = rd.root_to_weight(beta);
  if (!is_zero_ivec(lam) && pairing(rd, lam, beta) != 0)
    require(ka.empty(), "kernel nonzero although <lam,beta> != 0" + at);
  const bool neighbors = u.vc.has_weight(add_vec(lam, bw)) || u.vc.has_weight(add_vec(lam, bw, -1));
  require(same_subspace(ka, ul) == !neighbors,
          "A_beta = B_beta = 0 on U_lam does not match V_{lam+-beta} = 0" + at);
  for (const auto& x : samples(ul)) {
    if (contains(ka, x)) continue;
    require(span_dim(std::vector<QVec>{a * x, b * x}, ul.ambient) == 2,
            "A_beta u and B_beta u dependent" + at);
  }
  return ka;
}

NonsingularData nonsingular_subspace(const RealModule& u, const Root& beta, const Weight& lam) {
  const ChevalleyData& cd = u.cd();
  const RootDatum& rd = cd.rd;
  const ComplexModule& v = u.vc;
  const int kb = positive_root_index(rd, beta);
  const Weight bw = rd.root_to_weight(beta);
  if (!v.has_weight(lam)) throw DomainError("nonsingular_subspace: not a weight: " + ivec_str(lam));
  if (!v.has_weight(add_vec(lam, bw)) && !v.has_weight(add_vec(lam, bw, -1)))
    throw DomainError("nonsingular_subspace: neither lam + beta nor lam - beta is a weight");
  const std::string at = " (beta " + ivec_str(beta) + ", lam " + ivec_str(lam) + ")";

  NonsingularData out;
  StringLengths s = root_string(rd, lam, beta, v.weights());
  out.j = s.j;
  out.k = s.k;
  const GMatrix& xp = v.action[kb];
  const GMatrix& xm = v.action[cd.neg(kb)];
  const GSubspace top = v.weight_space(add_vec(lam, bw, s.k));
  GSubspace down = image(power(xm, s.k), top);
  GSubspace up = image(power(xp, s.j), v.weight_space(add_vec(lam, bw, -s.j)));
  require(same_subspace(down, up), "X_-beta^k V_{lam+k beta} != X_beta^j V_{lam-j beta}" + at);
  require(contains(v.weight_space(lam), down), "V_{lam,beta} not in V_lam" + at);
  require(down.dim() == top.dim(), "X_-beta^k not injective on V_{lam+k beta}" + at);
  out.v_lam_beta = down;

  // the partner for -lam has the string lengths swapped
  const Weight ml = negate(lam);
  GSubspace partner = image(power(xm, s.j), v.weight_space(add_vec(ml, bw, s.j)));
  std::vector<GVec> conj_basis;
  for (const auto& x : down.basis) conj_basis.push_back(u.conjugation(x));
  require(same_subspace(span(conj_basis, v.dim), partner), "J(V_{lam,beta}) != V_{-lam,beta}" + at);

  out.u_lam_beta = re_im_span(down.basis, u.dim);
  const std::size_t expect = is_zero_ivec(lam) ? top.dim() : 2 * top.dim();
  require(out.u_lam_beta.dim() == expect, "dim U_{lam,beta} != expected" + at);
  require(contains(u.u_weight(lam), out.u_lam_beta), "U_{lam,beta} not in U_lam" + at);
  require(kernel_on(u.A(kb), out.u_lam_beta).empty() && kernel_on(u.B(kb), out.u_lam_beta).empty(),
          "A_beta or B_beta singular on U_{lam,beta}" + at);
  return out;
}

PropertyReport verify_module_properties(const RealModule& u) {
  PropertyReport rep;
  const ChevalleyData& cd = u.cd();
  const RootDatum& rd = cd.rd;
  const ComplexModule& v = u.vc;
  const GMatrix g = to_gauss(u.inner_gram);
  const int P = cd.nroots / 2;
  auto check = [&](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  };
  auto guarded = [&](const std::string& what, auto&& f) {
    ++rep.checks;
    try {
      f();
    } catch (const CheckFailure& e) {
      rep.failures.push_back(what + ": " + e.what());
    }
  };

  // Hermitian adjoints: X_b^* = X_-b and h^* = h for <v, w> = v^H G w
  for (int k = 0; k < cd.dim; ++k) {
    const int partner = cd.is_root_index(k) ? cd.neg(k) : k;
    check(v.action[k].conj_transpose() * g == g * v.action[partner],
          "Hermitian adjoint of basis element " + std::to_string(k));
  }

  // B*(V_lam, V_mu) = 0 unless lam + mu = 0; B* nondegenerate on V_0
  for (const auto& [l, sl] : v.weight_spaces)
    for (const auto& [m, sm] : v.weight_spaces) {
      if (is_zero_ivec(add_vec(l, m))) continue;
      bool ok = true;
      for (const auto& x : sl.basis)
        for (const auto& y : sm.basis)
          if (!bilinear(x, g, y).is_zero()) ok = false;
      check(ok, "B* pairs V_" + ivec_str(l) + " with V_" + ivec_str(m));
    }
  if (!v.zero_space.empty()) {
    GMatrix z(v.zero_space.dim(), v.zero_space.dim());
    for (std::size_t a = 0; a < v.zero_space.dim(); ++a)
      for (std::size_t b = 0; b < v.zero_space.dim(); ++b)
        z(a, b) = bilinear(v.zero_space.basis[a], g, v.zero_space.basis[b]);
    check(rank(z) == v.zero_space.dim(), "B* degenerate on V_0");
  }

  std::vector<Weight> lams = u.positive_weights();
  if (!u.u_zero.empty()) lams.push_back(Weight(rd.n, 0));
  for (int k = 0; k < P; ++k) {
    const Root& beta = rd.positive[k];
    const Weight bw = rd.root_to_weight(beta);
    const std::vector<QMatrix> ab{u.A(k), u.B(k)};
    for (const auto& lam : lams) {
      const std::size_t before = rep.failures.size();
      const std::string at = " (beta " + ivec_str(beta) + ", lam " + ivec_str(lam) + ")";
      const QSubspace ul = u.u_weight(lam);
      const QSubspace img = image_of(ab, ul);
      check(contains(sum(u.u_weight(add_vec(lam, bw)), u.u_weight(add_vec(lam, bw, -1))), img),
            "G0_beta(U_lam) not in U_{lam+beta} + U_{lam-beta}" + at);
      std::vector<GVec> moved;
      for (const auto& w : v.weight_space(lam).basis) moved.push_back(v.action[k] * w);
      for (const auto& w : v.weight_space(negate(lam)).basis) moved.push_back(v.action[k] * w);
      check(same_subspace(img, re_im_span(moved, u.dim)), "G0_beta(U_lam) != Re X_beta(V_lam + V_-lam)" + at);

      const bool weight_cond = v.has_weight(add_vec(bw, lam)) || v.has_weight(add_vec(bw, lam, -1));
      const bool image_cond = !img.empty();
      bool kernel_cond = false;
      guarded("ab_kernel" + at, [&] { kernel_cond = !same_subspace(ab_kernel(u, beta, lam), ul); });
      check(weight_cond == image_cond && image_cond == kernel_cond,
            "weight / image / kernel conditions disagree" + at);
      if (weight_cond) guarded("nonsingular_subspace" + at, [&] { nonsingular_subspace(u, beta, lam); });
      if (rep.failures.size() != before) rep.failing_pairs.emplace(beta, lam);
    }
  }
  return rep;
}

}  // namespace lieq
