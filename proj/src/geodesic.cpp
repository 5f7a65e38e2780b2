#include "lieq/geodesic.hpp"

#include <array>
#include <set>

#include "lieq/admissible.hpp"

namespace lieq {

namespace {

QVec unit_q(std::size_t n, std::size_t i) {
  QVec v(n, Rational(0));
  v[i] = 1;
  return v;
}

QSubspace coordinate_block(std::size_t ambient, std::size_t from, std::size_t to) {
  std::vector<QVec> vs;
  for (std::size_t i = from; i < to; ++i) vs.push_back(unit_q(ambient, i));
  return span(vs, ambient);
}

QVec u_of(const MetricNilpotent& n, const QVec& x) { return QVec(x.begin(), x.begin() + n.du); }
QVec g_of(const MetricNilpotent& n, const QVec& x) { return QVec(x.begin() + n.du, x.end()); }

bool integral(const Rational& q) { return q.get_den() == 1; }

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool two_lam_is_root(const RootDatum& rd, const Weight& lam) {
  const Weight t = add_vec(lam, lam);
  return rd.weight_is_root_lattice(t) && rd.is_root(rd.weight_to_root(t));
}

QSubspace rational_weight_basis(const MetricNilpotent& n, const RationalStructure& rs, const Weight& lam) {
  for (const Weight& key : {lam, negate(lam)}) {
    auto it = rs.weight_bases.find(key);
    if (it != rs.weight_bases.end()) return it->second;
  }
  return QSubspace{static_cast<std::size_t>(n.du), {}};
}

QVec tt_coroot(const RootDatum& rd, const CompactBasis& cb, const Root& beta) {
  QVec z(cb.dim, Rational(0));
  const long s = rd.sq_len_half(beta);
  for (int j = 0; j < rd.n; ++j) z[cb.tt(j)] = frac(beta[j] * rd.d[j], s);
  return z;
}

// center of a subspace of G0 under the G0 bracket
QSubspace lie_center(const CompactBasis& cb, const std::vector<QVec>& vs) {
  QMatrix m(vs.size() * cb.dim, vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const QVec b = cb.bracket(vs[k], vs[j]);
      for (int a = 0; a < cb.dim; ++a) m(j * cb.dim + a, k) = b[a];
    }
  std::vector<QVec> out;
  for (const auto& c : kernel(m)) {
    QVec x(cb.dim, Rational(0));
    for (std::size_t k = 0; k < vs.size(); ++k) x = add(x, vs[k], c[k]);
    out.push_back(x);
  }
  return span(out, cb.dim);
}

// quaternion units 1, i, j, k
using Quat = std::array<Rational, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qcomm(const Quat& a, const Quat& b) {
  const Quat x = qmul(a, b), y = qmul(b, a);
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

void finish(const MetricNilpotent& n, const RationalStructure& rs, GeodesicResult& r) {
  CheckReport& c = r.checks;
  const bool closed = c.check(is_closed(n, r.sub), "not closed under the bracket");
  if (closed) {
    r.totally_geodesic = is_totally_geodesic(n, r.sub);
    c.check(r.totally_geodesic, "not totally geodesic");
    r.center = subalgebra_center(n, r.sub);
  }
  r.rational = rationality_check(r.sub, rs);
  c.check(r.rational, "no basis in the rational structure");
}

}  // namespace

Subalgebra make_subalgebra(const MetricNilpotent& n, const std::vector<QVec>& vectors) {
  Subalgebra s;
  const QSubspace sp = span(vectors, n.dim);
  s.basis = sp.basis;
  s.u_part = intersect(sp, coordinate_block(n.dim, 0, n.du));
  s.g_part = intersect(sp, coordinate_block(n.dim, n.du, n.dim));
  return s;
}

// ---- rational structure

RationalStructure chevalley_rational_structure(const MetricNilpotent& n) {
  RationalStructure rs;
  rs.du = n.du;
  rs.dg = n.dg;
  const CompactBasis& cb = n.g0();
  const RealModule& u = n.u;

  rs.compact_integral = true;
  for (int a = 0; a < n.dg; ++a)
    for (int b = 0; b < n.dg; ++b)
      for (const auto& x : cb.bracket(unit_q(n.dg, a), unit_q(n.dg, b)))
        rs.compact_integral = rs.compact_integral && integral(x);
  require(rs.compact_integral, "compact basis structure constants are not integers");

  rs.module_integral = true;
  for (const auto& m : u.action0)
    for (int i = 0; i < n.du; ++i)
      for (int j = 0; j < n.du; ++j) rs.module_integral = rs.module_integral && integral(m(i, j));

  mpz_class den = 1;
  for (const auto& f : n.forms)
    for (int i = 0; i < n.du; ++i)
      for (int j = 0; j < n.du; ++j) den = lcm_z(den, f(i, j).get_den());
  rs.bracket_denominator = Rational(den);
  rs.bracket_integral = den == 1;

  // H0 = sum x_i tt_i with x = (1, N, N^2, ...): lam(H0) = i s_lam, s_lam = sum x_i lam_i
  const std::vector<Weight> lams = u.positive_weights();
  auto s_of = [&](const QVec& x, const Weight& lam) {
    Rational s = 0;
    for (int i = 0; i < cb.n; ++i) s += x[i] * lam[i];
    return s;
  };
  bool found = false;
  for (long base = 2; base < 200 && !found; ++base) {
    QVec x(cb.n);
    Rational p = 1;
    for (int i = 0; i < cb.n; ++i, p *= base) x[i] = p;
    std::set<Rational> squares;
    found = true;
    for (const auto& lam : lams) {
      const Rational s = s_of(x, lam);
      if (sgn(s) == 0 || !squares.insert(s * s).second) {
        found = false;
        break;
      }
    }
    if (found) rs.h0 = x;
  }
  require(found, "no separating rational element of h0 found");

  QVec z(n.dg, Rational(0));
  for (int i = 0; i < cb.n; ++i) z[cb.tt(i)] = rs.h0[i];
  const QMatrix h = u.act0(z);
  const QMatrix h2 = h * h;
  auto kernel_space = [&](const Rational& s2) {
    QMatrix t = h2;
    for (int i = 0; i < n.du; ++i) t(i, i) += s2;
    return span(kernel(t), n.du);
  };
  if (!u.u_zero.empty()) {
    const QSubspace k0 = kernel_space(0);
    rs.checks.check(same_subspace(k0, u.u_zero), "Q-kernel of H0^2 != U_0");
    rs.weight_bases[Weight(cb.n, 0)] = k0;
  }
  for (const auto& lam : lams) {
    const Rational s = s_of(rs.h0, lam);
    const QSubspace k = kernel_space(s * s);
    rs.checks.check(same_subspace(k, u.u_weight(lam)), "Q-kernel of H0^2 + lam(H0)^2 != U_lam at " + ivec_str(lam));
    rs.weight_bases[lam] = k;
  }

  std::vector<QVec> std_basis;
  for (int i = 0; i < n.du; ++i) std_basis.push_back(unit_q(n.du, i));
  rs.orthogonal_u_basis = gram_schmidt_q(std_basis, u.inner_gram);
  bool orth = rs.orthogonal_u_basis.size() == static_cast<std::size_t>(n.du);
  for (std::size_t i = 0; i < rs.orthogonal_u_basis.size() && orth; ++i)
    for (std::size_t j = i + 1; j < rs.orthogonal_u_basis.size() && orth; ++j)
      orth = sgn(bilinear(rs.orthogonal_u_basis[i], u.inner_gram, rs.orthogonal_u_basis[j])) == 0;
  rs.checks.check(orth, "Gram-Schmidt basis of U is not orthogonal");
  // compact basis is orthogonal off the Cartan block
  bool cb_orth = true;
  for (int a = cb.n; a < n.dg; ++a)
    for (int b = 0; b < n.dg; ++b)
      if (a != b) cb_orth = cb_orth && sgn(n.g0_gram(a, b)) == 0;
  rs.checks.check(cb_orth, "A_beta, B_beta not orthogonal under -B0");
  return rs;
}

// ---- subalgebras

bool is_closed(const MetricNilpotent& n, const Subalgebra& s) {
  const QSubspace sp{static_cast<std::size_t>(n.dim), s.basis};
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!contains(sp, n.bracket(s.basis[i], s.basis[j]))) return false;
  return true;
}

bool is_totally_geodesic(const MetricNilpotent& n, const Subalgebra& s) {
  if (!s.surd.empty()) throw DomainError("totally geodesic test needs a rational basis");
  if (!is_closed(n, s)) throw DomainError("not a subalgebra: the span is not closed under the bracket");
  if (s.u_part.dim() + s.g_part.dim() != s.dim()) return false;
  for (const auto& x : s.u_part.basis)
    for (const auto& y : s.u_part.basis)
      if (!contains(s.g_part, n.bracket(x, y))) return false;
  for (const auto& z : s.g_part.basis) {
    const QMatrix m = n.u.act0(g_of(n, z));
    for (const auto& x : s.u_part.basis)
      if (!contains(s.u_part, n.embed_u(m * u_of(n, x)))) return false;
  }
  return true;
}

QSubspace subalgebra_center(const MetricNilpotent& n, const Subalgebra& s) {
  const std::size_t m = s.dim();
  QMatrix a(m * n.dim, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j) {
      const QVec b = n.bracket(s.basis[k], s.basis[j]);
      for (int i = 0; i < n.dim; ++i) a(j * n.dim + i, k) = b[i];
    }
  std::vector<QVec> out;
  for (const auto& c : kernel(a)) {
    QVec x(n.dim, Rational(0));
    for (std::size_t k = 0; k < m; ++k) x = add(x, s.basis[k], c[k]);
    out.push_back(x);
  }
  return span(out, n.dim);
}

bool rationality_check(const Subalgebra& s, const RationalStructure& rs) {
  if (!rs.checks.ok()) return false;
  if (s.surd.empty()) return true;  // coordinates are rational in L0
  if (s.surd.size() != s.basis.size()) throw DomainError("surd part does not match the basis");
  // dim over Q(sqrt d) from the rational 2N x 2m matrix [[A, dB], [B, A]]; the space
  // is rational iff the Q-span of all rational and surd parts has that dimension
  const std::size_t amb = s.basis.empty() ? 0 : s.basis[0].size(), m = s.basis.size();
  QMatrix big(2 * amb, 2 * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < amb; ++i) {
      big(i, k) = s.basis[k][i];
      big(i, m + k) = s.radicand * s.surd[k][i];
      big(amb + i, k) = s.surd[k][i];
      big(amb + i, m + k) = s.basis[k][i];
    }
  std::vector<QVec> parts = s.basis;
  parts.insert(parts.end(), s.surd.begin(), s.surd.end());
  return 2 * span_dim(parts, amb) == rank(big);
}

GeodesicResult build_weight_subalgebra(const MetricNilpotent& n, const RationalStructure& rs, const Weight& lam) {
  const RootDatum& rd = n.cd().rd;
  if (static_cast<int>(lam.size()) != rd.n || is_zero_ivec(lam)) throw DomainError("need a nonzero weight");
  if (two_lam_is_root(rd, lam)) throw DomainError("precondition violated: 2 lam is a root at " + ivec_str(lam));
  const QSubspace ul = rational_weight_basis(n, rs, lam);
  if (ul.empty()) throw DomainError("U_lam = 0 at " + ivec_str(lam));

  GeodesicResult r;
  r.lambda_admissible = is_admissible(rd, lam).admissible;
  const QVec h = n.embed_g0(g0_coords(n.g0(), real_weight_vector(n, lam)));
  std::vector<QVec> vs{h};
  for (const auto& b : ul.basis) vs.push_back(n.embed_u(b));
  r.sub = make_subalgebra(n, vs);
  r.checks.check(same_subspace(ul, n.u.u_weight(lam)), "rational basis does not span U_lam");
  const QSubspace hline = span(std::vector<QVec>{h}, n.dim);
  bool into_line = true;
  for (const auto& x : ul.basis)
    for (const auto& y : ul.basis) into_line = into_line && contains(hline, n.bracket(n.embed_u(x), n.embed_u(y)));
  r.checks.check(into_line, "[U_lam, U_lam] leaves R H~_lam");
  finish(n, rs, r);
  r.checks.check(r.center.dim() == 1 && same_subspace(r.center, hline), "center is not R H~_lam");
  return r;
}

GeodesicResult build_heisenberg(const MetricNilpotent& n, const RationalStructure& rs, const Weight& lam,
                                const QVec& u) {
  const RootDatum& rd = n.cd().rd;
  if (static_cast<int>(lam.size()) != rd.n || is_zero_ivec(lam)) throw DomainError("need a nonzero weight");
  if (two_lam_is_root(rd, lam)) throw DomainError("precondition violated: 2 lam is a root at " + ivec_str(lam));
  if (static_cast<int>(u.size()) != n.du || is_zero_vec(u)) throw DomainError("need a nonzero vector of U");
  if (!contains(n.u.u_weight(lam), u)) throw DomainError("vector is not in U_lam at " + ivec_str(lam));

  GeodesicResult r;
  r.lambda_admissible = is_admissible(rd, lam).admissible;
  const QVec hz = g0_coords(n.g0(), real_weight_vector(n, lam));
  const QVec hu = n.u.act0(hz) * u;
  const QVec h = n.embed_g0(hz);
  r.sub = make_subalgebra(n, {n.embed_u(u), n.embed_u(hu), h});
  r.checks.check(r.sub.dim() == 3, "u, H~_lam(u), H~_lam are dependent");
  finish(n, rs, r);
  r.checks.check(r.center.dim() == 1 && contains(r.center, h), "center is not R H~_lam");
  // Heisenberg: 3-dimensional, derived algebra = center = a line
  const QVec b = n.bracket(n.embed_u(u), n.embed_u(hu));
  r.checks.check(!is_zero_vec(b) && contains(r.center, b), "[u, H~_lam(u)] does not span the center");
  return r;
}

QuaternionResult build_quaternion_subalgebra(const MetricNilpotent& n, const RationalStructure& rs,
                                             const Weight& lam, const Root& beta) {
  const RootDatum& rd = n.cd().rd;
  const CompactBasis& cb = n.g0();
  if (static_cast<int>(lam.size()) != rd.n || is_zero_ivec(lam)) throw DomainError("need a nonzero weight");
  if (!rd.is_root(beta) || rd.root_index(beta) >= cb.npos) throw DomainError("beta must be a positive root");
  for (const auto& w : all_witnesses(RootTable(rd), lam)) {
    long p = 0;
    if (w.alpha == beta)
      p = w.p;
    else if (w.alpha == negate(beta))
      p = -w.p;
    else
      continue;
    throw DomainError("precondition violated: 2 lam + " + std::to_string(p) + " beta is a root");
  }
  const Weight wb = rd.root_to_weight(beta);
  auto as_q = [](const Weight& w) { return QVec(w.begin(), w.end()); };
  if (span_dim(std::vector<QVec>{as_q(lam), as_q(wb)}, rd.n) != 2)
    throw DomainError("lam and beta are dependent");

  QuaternionResult r;
  r.lambda_admissible = is_admissible(rd, lam).admissible;
  CheckReport& c = r.checks;
  std::vector<QVec> uvs;
  for (long k = -n.du; k <= n.du; ++k) {
    const Weight mu = add_vec(lam, wb, k);
    if (is_zero_ivec(mu) || !n.u.vc.has_weight(mu)) continue;
    r.string.push_back(k);
    const QSubspace b = rational_weight_basis(n, rs, mu);
    c.check(same_subspace(b, n.u.u_weight(mu)), "rational basis does not span U at " + ivec_str(mu));
    for (const auto& v : b.basis) uvs.push_back(v);
  }
  if (r.string.empty()) throw DomainError("no weight on the beta-string through lam");
  const QSubspace uprime = span(uvs, n.du);

  const int k = rd.root_index(beta);
  const QVec a = unit_q(n.dg, cb.A(k)), b = unit_q(n.dg, cb.B(k));
  r.h_lam = g0_coords(cb, real_weight_vector(n, lam));
  r.tt_beta = tt_coroot(rd, cb, beta);
  const QVec& h = r.h_lam;
  const QVec& tt = r.tt_beta;

  // beta(H_lam): H~_lam = i H_lam has the coordinates of H_lam on h_i, and beta(h_i) = <beta, alpha_i>
  Rational bh = 0;
  for (int i = 0; i < rd.n; ++i) bh += h[cb.tt(i)] * wb[i];
  const Rational ib = -bh;  // i beta(H~_lam)
  auto br = [&](const QVec& x, const QVec& y) { return cb.bracket(x, y); };
  c.check(br(a, b) == scale(tt, Rational(2)), "[A_beta, B_beta] != 2 tt_beta");
  c.check(br(tt, a) == scale(b, Rational(2)), "[tt_beta, A_beta] != 2 B_beta");
  c.check(br(tt, b) == scale(a, Rational(-2)), "[tt_beta, B_beta] != -2 A_beta");
  c.check(br(h, b) == scale(a, ib), "[H~_lam, B_beta] != i beta(H~_lam) A_beta");
  c.check(br(h, a) == scale(b, Rational(-ib)), "[H~_lam, A_beta] != -i beta(H~_lam) B_beta");
  c.check(is_zero_vec(br(tt, h)), "[tt_beta, H~_lam] != 0");

  r.c = -bh / 2;
  r.xi = add(h, tt, r.c);
  const std::vector<QVec> gens{a, b, h, tt};
  r.g_part = span(gens, n.dg);
  c.check(r.g_part.dim() == 4, "G_{lam,beta} is not 4-dimensional");
  bool central = true;
  for (const auto& g : gens) central = central && is_zero_vec(br(r.xi, g));
  c.check(central, "xi = H~_lam + c tt_beta is not central in G_{lam,beta}");

  // phi(xi) = 1, phi(A) = i, phi(B) = j, phi(tt) = k
  const std::vector<QVec> qbasis{r.xi, a, b, tt};
  const QMatrix to_q_basis = QMatrix::from_cols(qbasis, n.dg);
  bool iso = span_dim(qbasis, n.dg) == 4;
  for (int x = 0; x < 4 && iso; ++x)
    for (int y = 0; y < 4 && iso; ++y) {
      auto coords = try_solve(to_q_basis, br(qbasis[x], qbasis[y]));
      if (!coords) {
        iso = false;
        break;
      }
      Quat ex, ey;
      ex.fill(0);
      ey.fill(0);
      ex[x] = 1;
      ey[y] = 1;
      const Quat want = qcomm(ex, ey);
      for (int t = 0; t < 4; ++t) iso = iso && (*coords)[t] == want[t];
    }
  c.check(iso, "G_{lam,beta} is not isomorphic to the quaternions via xi, A, B, tt -> 1, i, j, k");
  c.check(lie_center(cb, gens).dim() == 1, "G_{lam,beta} does not have a 1-dimensional center");
  std::vector<QVec> derived;
  for (const auto& x : gens)
    for (const auto& y : gens) derived.push_back(br(x, y));
  c.check(span_dim(derived, n.dg) == 3, "derived algebra of G_{lam,beta} is not 3-dimensional");

  bool invariant = true;
  for (const auto& g : gens) invariant = invariant && contains(uprime, image(n.u.act0(g), uprime));
  c.check(invariant, "U'_{lam,beta} is not G_{lam,beta}-invariant");

  std::vector<QVec> vs;
  for (const auto& v : uprime.basis) vs.push_back(n.embed_u(v));
  for (const auto& g : gens) vs.push_back(n.embed_g0(g));
  r.sub = make_subalgebra(n, vs);
  finish(n, rs, r);
  std::vector<QVec> gemb;
  for (const auto& g : gens) gemb.push_back(n.embed_g0(g));
  c.check(r.center.dim() == 4 && same_subspace(r.center, span(gemb, n.dim)), "center is not G_{lam,beta}");
  return r;
}

}  // namespace lieq
