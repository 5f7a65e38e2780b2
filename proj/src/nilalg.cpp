#include "lieq/nilalg.hpp"

#include <algorithm>

namespace lieq {

namespace {

QVec unit_q(std::size_t n, std::size_t i) {
  QVec v(n, Rational(0));
  v[i] = 1;
  return v;
}

// x^T f y
Rational form(const QVec& x, const QMatrix& f, const QVec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0 && sgn(f(i, j)) != 0) row += f(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

QVec u_part(const MetricNilpotent& n, const QVec& x) { return QVec(x.begin(), x.begin() + n.du); }

std::vector<QVec> samples(const QSubspace& s) {
  std::vector<QVec> out = s.basis;
  if (s.dim() < 2) return out;
  QVec sum(s.ambient, Rational(0)), ramp = sum;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    sum = add(sum, s.basis[i]);
    ramp = add(ramp, s.basis[i], Rational(static_cast<long>(i + 1)));
  }
  out.push_back(sum);
  out.push_back(ramp);
  return out;
}

QSubspace line(const QVec& v) { return span(std::vector<QVec>{v}, v.size()); }

std::string wstr(const Weight& w) { return ivec_str(w); }

}  // namespace

// ---- the algebra

QVec MetricNilpotent::bracket_u(const QVec& x, const QVec& y) const {
  QVec out(dg, Rational(0));
  for (int a = 0; a < dg; ++a) out[a] = form(x, forms[a], y);
  return out;
}

QVec MetricNilpotent::bracket(const QVec& x, const QVec& y) const {
  QVec out(dim, Rational(0));
  QVec b = bracket_u(u_part(*this, x), u_part(*this, y));
  std::copy(b.begin(), b.end(), out.begin() + du);
  return out;
}

QVec MetricNilpotent::bracket_basis(int i, int j) const {
  QVec out(dg);
  for (int a = 0; a < dg; ++a) out[a] = forms[a](i, j);
  return out;
}

QVec MetricNilpotent::embed_u(const QVec& x) const {
  QVec out(dim, Rational(0));
  std::copy(x.begin(), x.end(), out.begin());
  return out;
}

QVec MetricNilpotent::embed_g0(const QVec& z) const {
  QVec out(dim, Rational(0));
  std::copy(z.begin(), z.end(), out.begin() + du);
  return out;
}

MetricNilpotent build_nilalg(const RealModule& u) {
  MetricNilpotent n;
  n.u = u;
  n.du = u.dim;
  n.dg = u.cb.dim;
  n.dim = n.du + n.dg;
  n.g0_gram = u.cb.neg_killing;
  require(is_invariant_gram(u, u.inner_gram), "U Gram is not G0-invariant");

  // <Z_b x, y> = x^T m_b y with m_b = Z_b^T G; coordinates solve against -B0
  const QMatrix kinv = inverse(n.g0_gram);
  std::vector<QMatrix> m;
  for (int b = 0; b < n.dg; ++b) m.push_back(u.action0[b].transpose() * u.inner_gram);
  for (int a = 0; a < n.dg; ++a) {
    QMatrix f(n.du, n.du);
    for (int b = 0; b < n.dg; ++b)
      if (sgn(kinv(a, b)) != 0) f += kinv(a, b) * m[b];
    n.forms.push_back(std::move(f));
  }

  n.inner_gram = QMatrix(n.dim, n.dim);
  for (int i = 0; i < n.du; ++i)
    for (int j = 0; j < n.du; ++j) n.inner_gram(i, j) = u.inner_gram(i, j);
  for (int i = 0; i < n.dg; ++i)
    for (int j = 0; j < n.dg; ++j) n.inner_gram(n.du + i, n.du + j) = n.g0_gram(i, j);

  // U and G0 orthogonal
  for (int i = 0; i < n.du; ++i)
    for (int j = 0; j < n.dg; ++j) require(sgn(n.inner_gram(i, n.du + j)) == 0, "U not orthogonal to G0");

  // defining identity: sum_b <Z_a, Z_b> forms[b] = m_a entrywise
  for (int a = 0; a < n.dg; ++a) {
    QMatrix lhs(n.du, n.du);
    for (int b = 0; b < n.dg; ++b)
      if (sgn(n.g0_gram(a, b)) != 0) lhs += n.g0_gram(a, b) * n.forms[b];
    require(lhs == m[a], "<[u,u'], Z> != <Z(u), u'> for compact basis element " + std::to_string(a));
    require((n.forms[a] + n.forms[a].transpose()).is_zero(), "bracket not antisymmetric");
  }

  // 2-step and Jacobi: brackets land in G0, which brackets trivially
  std::vector<QVec> all;
  for (int i = 0; i < n.du; ++i)
    for (int j = i + 1; j < n.du; ++j) {
      QVec b = n.bracket(unit_q(n.dim, i), unit_q(n.dim, j));
      require(is_zero_vec(u_part(n, b)), "bracket has a U component");
      all.push_back(QVec(b.begin() + n.du, b.end()));
    }
  for (int a = 0; a < n.dg; ++a)
    for (int k = 0; k < n.dim; ++k) {
      const QVec z = n.embed_g0(unit_q(n.dg, a));
      require(is_zero_vec(n.bracket(z, unit_q(n.dim, k))), "G0 is not central");
    }
  for (int i = 0; i < n.du; ++i)
    for (int j = 0; j < n.du; ++j)
      for (int k = 0; k < n.du; ++k) {
        const QVec ei = unit_q(n.dim, i), ej = unit_q(n.dim, j), ek = unit_q(n.dim, k);
        QVec s = add(add(n.bracket(n.bracket(ei, ej), ek), n.bracket(n.bracket(ej, ek), ei)),
                     n.bracket(n.bracket(ek, ei), ej));
        require(is_zero_vec(s), "Jacobi fails");
      }
  require(span(all, n.dg).dim() == static_cast<std::size_t>(n.dg), "[N0, N0] != G0 (module not faithful)");
  return n;
}

QSubspace module_kernel(const RealModule& u) {
  QMatrix stacked(u.dim * u.cb.dim, u.dim);
  for (int a = 0; a < u.cb.dim; ++a)
    for (int i = 0; i < u.dim; ++i)
      for (int j = 0; j < u.dim; ++j) stacked(a * u.dim + i, j) = u.action0[a](i, j);
  return span(kernel(stacked), u.dim);
}

QSubspace center(const MetricNilpotent& n) {
  // x -> ([x, e_j])_j for U basis e_j; only the U part of x matters
  QMatrix l(n.dg * n.du, n.dim);
  for (int a = 0; a < n.dg; ++a)
    for (int j = 0; j < n.du; ++j)
      for (int i = 0; i < n.du; ++i) l(a * n.du + j, i) = n.forms[a](i, j);
  QSubspace c = span(kernel(l), n.dim);

  std::vector<QVec> expected;
  for (int a = 0; a < n.dg; ++a) expected.push_back(n.embed_g0(unit_q(n.dg, a)));
  const QSubspace ker = module_kernel(n.u);
  for (const auto& v : ker.basis) expected.push_back(n.embed_u(v));
  require(same_subspace(c, span(expected, n.dim)), "center != G0 + Ker(G0)");
  require((c.dim() == static_cast<std::size_t>(n.dg)) == ker.empty(), "center = G0 iff Ker(G0) = 0 fails");
  return c;
}

// ---- real weight vectors

RealWeightVector real_weight_vector(const ChevalleyData& cd, const CompactBasis& cb, const Weight& lam) {
  const int nn = cb.n;
  if (static_cast<int>(lam.size()) != nn) throw DomainError("weight has wrong rank: " + wstr(lam));
  QMatrix k(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) k(i, j) = cb.neg_killing(cb.tt(i), cb.tt(j));
  // -i lam(tt_i) = -i lam(i h_i) = lam_i
  QVec q(nn);
  for (int i = 0; i < nn; ++i) q[i] = Rational(lam[i]);
  RealWeightVector h{lam, solve_linear(k, q)};
  require(k * h.coords == q, "H~_lam does not solve its defining system");
  require(h.coords == killing_dual_weight(cd, lam), "H~_lam != i H_lam at " + wstr(lam));
  return h;
}

RealWeightVector real_weight_vector(const MetricNilpotent& n, const Weight& lam) {
  return real_weight_vector(n.cd(), n.g0(), lam);
}

QVec g0_coords(const CompactBasis& cb, const RealWeightVector& h) {
  QVec z(cb.dim, Rational(0));
  for (int i = 0; i < cb.n; ++i) z[cb.tt(i)] = h.coords[i];
  return z;
}

QSubspace g0_root_space(const MetricNilpotent& n, const Weight& lam) {
  const RootDatum& rd = n.cd().rd;
  QSubspace s{static_cast<std::size_t>(n.dg), {}};
  if (is_zero_ivec(lam) || !rd.weight_is_root_lattice(lam)) return s;
  Root r = rd.weight_to_root(lam);
  if (!rd.is_root(r)) return s;
  int k = rd.root_index(r);
  if (k >= n.g0().npos) k -= n.g0().npos;
  return span(std::vector<QVec>{unit_q(n.dg, n.g0().A(k)), unit_q(n.dg, n.g0().B(k))}, n.dg);
}

QSubspace bracket_span(const MetricNilpotent& n, const QSubspace& a, const QSubspace& b) {
  std::vector<QVec> vs;
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) vs.push_back(n.bracket_u(x, y));
  return span(vs, n.dg);
}

QSubspace bracket_kernel_in(const MetricNilpotent& n, const QVec& x, const QSubspace& s) {
  std::vector<QVec> cols;
  for (const auto& y : s.basis) cols.push_back(n.bracket_u(x, y));
  std::vector<QVec> out;
  for (const auto& c : kernel(QMatrix::from_cols(cols, n.dg))) {
    QVec y(n.du, Rational(0));
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (sgn(c[j]) != 0) y = add(y, s.basis[j], c[j]);
    out.push_back(y);
  }
  return span(out, n.du);
}

QSubspace bracket_image_of(const MetricNilpotent& n, const QVec& x, const QSubspace& s) {
  std::vector<QVec> vs;
  for (const auto& y : s.basis) vs.push_back(n.bracket_u(x, y));
  return span(vs, n.dg);
}

CheckReport verify_bracket_relations(const MetricNilpotent& n) {
  CheckReport r;
  const RealModule& u = n.u;
  const RootDatum& rd = n.cd().rd;
  const std::vector<Weight> lams = u.positive_weights();
  const QSubspace zero_g{static_cast<std::size_t>(n.dg), {}};

  r.check(same_subspace(bracket_span(n, u.u_zero, u.u_zero), zero_g), "[U_0, U_0] != 0");
  for (const auto& lam : lams) {
    const QSubspace ul = u.u_weight(lam);
    r.check(same_subspace(bracket_span(n, u.u_zero, ul), g0_root_space(n, lam)),
            "[U_0, U_lam] != G0_lam at lam " + wstr(lam));
    for (const auto& mu : lams) {
      if (!(mu < lam)) continue;
      const QSubspace expect = sum(g0_root_space(n, add_vec(mu, lam)), g0_root_space(n, add_vec(mu, lam, -1)));
      r.check(same_subspace(bracket_span(n, u.u_weight(mu), ul), expect),
              "[U_mu, U_lam] != G0_{mu+lam} + G0_{mu-lam} at mu " + wstr(mu) + ", lam " + wstr(lam));
    }
    const Weight twice = add_vec(lam, lam);
    const bool two_lam_root = rd.weight_is_root_lattice(twice) && rd.is_root(rd.weight_to_root(twice));
    const bool lam_root = rd.weight_is_root_lattice(lam) && rd.is_root(rd.weight_to_root(lam));
    if (two_lam_root && !lam_root) continue;
    const QVec h = g0_coords(n.g0(), real_weight_vector(n, lam));
    r.check(same_subspace(bracket_span(n, ul, ul), line(h)), "[U_lam, U_lam] != R H~_lam at lam " + wstr(lam));
  }
  return r;
}

QSubspace ad_range(const MetricNilpotent& n, const QVec& u) {
  if (static_cast<int>(u.size()) != n.du) throw DomainError("vector is not in U");
  const QSubspace direct = bracket_image_of(n, u, whole_space<Rational>(n.du));
  std::vector<QVec> cols;
  for (int a = 0; a < n.dg; ++a) cols.push_back(n.u.action0[a] * u);
  const QSubspace stab = span(kernel(QMatrix::from_cols(cols, n.du)), n.dg);
  const QSubspace perp = orth_complement_in(stab, whole_space<Rational>(n.dg), n.g0_gram);
  require(same_subspace(direct, perp), "im ad u != orthogonal complement of the stabilizer");
  return direct;
}

// ---- weight ranges

bool root_equation_free(const RootDatum& rd, const Weight& lam) {
  const Weight twice = add_vec(lam, lam);
  for (std::size_t a = 0; a < rd.roots.size(); ++a) {
    const Weight wa = rd.root_to_weight(rd.roots[a]);
    if (wa == twice) return false;
    for (std::size_t b = a + 1; b < rd.roots.size(); ++b)
      if (add_vec(wa, rd.root_to_weight(rd.roots[b])) == twice) return false;
  }
  return true;
}

GVec weight_component(const RealModule& u, const Weight& lam, const QVec& x) {
  const GSubspace vp = u.vc.weight_space(lam), vm = u.vc.weight_space(negate(lam));
  std::vector<GVec> cols = vp.basis;
  cols.insert(cols.end(), vm.basis.begin(), vm.basis.end());
  auto c = try_solve(GMatrix::from_cols(cols, u.dim), to_gauss(x));
  if (!c) throw DomainError("vector is not in U_lam at " + wstr(lam));
  GVec v(u.dim, Gauss(0));
  for (std::size_t j = 0; j < vp.dim(); ++j) v = add(v, vp.basis[j], (*c)[j]);
  return v;
}

WeightRange ad_range_weight(const MetricNilpotent& n, const Weight& lam, const QVec& u_lam) {
  const RealModule& u = n.u;
  const ChevalleyData& cd = n.cd();
  const RootDatum& rd = cd.rd;
  if (is_zero_ivec(lam) || !u.vc.has_weight(lam)) throw DomainError("not a nonzero weight: " + wstr(lam));
  if (!contains(u.u_weight(lam), u_lam)) throw DomainError("vector is not in U_lam at " + wstr(lam));
  if (!root_equation_free(rd, lam))
    throw DomainError("precondition violated: 2 lam = alpha or alpha + beta has a root solution at " + wstr(lam));

  WeightRange w;
  w.image = ad_range(n, u_lam);
  std::vector<QVec> pred = {g0_coords(n.g0(), real_weight_vector(n, lam))};
  for (const auto& b : g0_root_space(n, lam).basis) pred.push_back(b);

  const GVec v = weight_component(u, lam, u_lam);
  w.generic = !is_zero_vec(v);
  for (int a = 0; a < cd.nroots; ++a) {
    const Weight wa = cd.weight_of(a);
    if (!u.vc.has_weight(add_vec(lam, wa, -1))) continue;  // alpha not in Phi_lam
    for (const auto& b : g0_root_space(n, wa).basis) pred.push_back(b);
    if (is_zero_vec(u.vc.action[cd.neg(a)] * v)) w.generic = false;
  }
  if (rd.weight_is_root_lattice(lam) && rd.is_root(rd.weight_to_root(lam))) {
    const int a = rd.root_index(rd.weight_to_root(lam));
    if (is_zero_vec(u.vc.action[cd.neg(a)] * v)) w.generic = false;
  }
  w.predicted = span(pred, n.dg);
  require(contains(w.predicted, w.image), "ad u_lam(U) not contained in the predicted space at " + wstr(lam));
  w.equal = same_subspace(w.predicted, w.image);
  return w;
}

// ---- automorphisms and derivations

QMatrix induced_g0_map(const RealModule& u, const QMatrix& t) {
  const int du = u.dim, dg = u.cb.dim;
  QMatrix flat(du * du, dg);
  for (int a = 0; a < dg; ++a)
    for (int i = 0; i < du; ++i)
      for (int j = 0; j < du; ++j) flat(i * du + j, a) = u.action0[a](i, j);
  const QMatrix tinv = inverse(t);
  QMatrix phi(dg, dg);
  for (int a = 0; a < dg; ++a) {
    const QMatrix c = t * u.action0[a] * tinv;
    QVec rhs(du * du);
    for (int i = 0; i < du; ++i)
      for (int j = 0; j < du; ++j) rhs[i * du + j] = c(i, j);
    auto x = try_solve(flat, rhs);
    require(x.has_value(), "T Z T^-1 leaves the image of G0");
    for (int b = 0; b < dg; ++b) phi(b, a) = (*x)[b];
  }
  return phi;
}

namespace {

// (T on U, phi on G0) preserves the bracket, both Grams and the G0 bracket
void check_pair_map(const MetricNilpotent& n, const QMatrix& t, const QMatrix& phi, const std::string& tag,
                    CheckReport& r) {
  bool bracket_ok = true;
  for (int c = 0; c < n.dg && bracket_ok; ++c) {
    QMatrix lhs(n.du, n.du);
    for (int b = 0; b < n.dg; ++b)
      if (sgn(phi(c, b)) != 0) lhs += phi(c, b) * n.forms[b];
    bracket_ok = lhs == t.transpose() * n.forms[c] * t;
  }
  r.check(bracket_ok, tag + ": bracket not preserved");
  r.check(t.transpose() * n.u.inner_gram * t == n.u.inner_gram, tag + ": U Gram not preserved");
  r.check(phi.transpose() * n.g0_gram * phi == n.g0_gram, tag + ": -B0 not preserved");
  bool aut = true;
  for (int a = 0; a < n.dg && aut; ++a)
    for (int b = 0; b < n.dg && aut; ++b)
      aut = phi * n.g0().bracket(unit_q(n.dg, a), unit_q(n.dg, b)) ==
            n.g0().bracket(phi.col(a), phi.col(b));
  r.check(aut, tag + ": phi is not an automorphism of G0");
}

QMatrix real_weyl(const RealModule& u, const std::vector<Root>& word) {
  return real_part(weyl_operator(u, word).matrix);
}

}  // namespace

CheckReport verify_aut_der(const MetricNilpotent& n) {
  CheckReport r;
  const RootDatum& rd = n.cd().rd;
  for (int c = 0; c < n.dg; ++c) {
    const QMatrix& m = n.u.action0[c];
    const QMatrix d = n.g0().ad(c);
    bool der = true;
    for (int a = 0; a < n.dg && der; ++a) {
      QMatrix lhs(n.du, n.du);
      for (int b = 0; b < n.dg; ++b)
        if (sgn(d(a, b)) != 0) lhs += d(a, b) * n.forms[b];
      der = lhs == m.transpose() * n.forms[a] + n.forms[a] * m;
    }
    const std::string tag = "t(e_" + std::to_string(c) + ")";
    r.check(der, tag + ": not a derivation");
    r.check((m.transpose() * n.u.inner_gram + n.u.inner_gram * m).is_zero(), tag + ": not skew on U");
    r.check((d.transpose() * n.g0_gram + n.g0_gram * d).is_zero(), tag + ": not skew on G0");
  }

  std::vector<std::vector<Root>> words = {{}};
  std::vector<Root> all_simple;
  for (int i = 0; i < rd.n; ++i) {
    words.push_back({rd.simple(i)});
    all_simple.push_back(rd.simple(i));
  }
  if (rd.n > 1) words.push_back(all_simple);
  for (std::size_t k = 0; k < rd.positive.size(); ++k)
    if (rd.height(rd.positive[k]) > 1) words.push_back({rd.positive[k]});
  for (const auto& w : words) {
    const QMatrix t = real_weyl(n.u, w);
    const QMatrix phi = induced_g0_map(n.u, t);
    std::string tag = "zeta[";
    for (const auto& a : w) tag += ivec_str(a);
    tag += "]";
    if (w.empty()) r.check(t == QMatrix::identity(n.du) && phi == QMatrix::identity(n.dg), tag + ": not identity");
    check_pair_map(n, t, phi, tag, r);
  }
  return r;
}

InterplayReport verify_zero_weight_interplay(const MetricNilpotent& n) {
  const RealModule& u = n.u;
  const RootDatum& rd = n.cd().rd;
  if (u.u_zero.empty()) throw DomainError("hypothesis not met: U_0 = 0");
  std::vector<int> betas;
  for (std::size_t k = 0; k < rd.positive.size(); ++k)
    if (u.vc.has_weight(rd.root_to_weight(rd.positive[k]))) betas.push_back(static_cast<int>(k));
  if (betas.empty()) throw DomainError("hypothesis not met: no positive root is a weight");

  InterplayReport r;
  for (int k : betas) {
    const Root& beta = rd.positive[k];
    const Weight wb = rd.root_to_weight(beta);
    const std::string at = " (beta " + ivec_str(beta) + ")";
    const QSubspace ub = u.u_weight(wb);
    const QSubspace gb = g0_root_space(n, wb);
    const QMatrix a = u.A(k), b = u.B(k);
    const QVec h = g0_coords(n.g0(), real_weight_vector(n, wb));
    const QMatrix hact = u.act0(h);
    const QSubspace hline = line(h);

    r.check(same_subspace(image(hact, ub), ub) && kernel_on(hact, ub).empty(),
            "H~_beta is not an isomorphism of U_beta" + at);

    std::vector<std::pair<QVec, QSubspace>> movers;  // u_0 with span{A u_0, B u_0}
    for (const auto& u0 : samples(u.u_zero)) {
      if (is_zero_vec(a * u0)) {
        ++r.skipped;
        continue;
      }
      const QSubspace w = span(std::vector<QVec>{a * u0, b * u0}, n.du);
      r.check(w.dim() == 2 && contains(ub, w), "span{A u0, B u0} is not a plane in U_beta" + at);
      r.check(same_subspace(bracket_kernel_in(n, u0, ub), orth_complement_in(w, ub, u.inner_gram)),
              "Ker ad u0 on U_beta != span{A u0, B u0}^perp" + at);
      r.check(same_subspace(bracket_image_of(n, u0, ub), gb), "ad u0 : U_beta -> G0_beta not onto" + at);
      movers.push_back({u0, w});
    }

    std::vector<QVec> ubs = samples(ub);
    for (const auto& [u0, w] : movers) {
      ubs.push_back(a * u0);
      ubs.push_back(add(a * u0, b * u0, Rational(2)));
    }
    for (const auto& x : ubs) {
      if (is_zero_vec(x)) continue;
      const QSubspace kx = bracket_kernel_in(n, x, ub);
      r.check(same_subspace(kx, orth_complement_in(line(hact * x), ub, u.inner_gram)),
              "Ker ad u_beta != {H~_beta u_beta}^perp" + at);
      r.check(same_subspace(bracket_image_of(n, x, ub), hline), "ad u_beta : U_beta -> R H~_beta not onto" + at);
      for (const auto& [u0, w] : movers) {
        const bool inclusion = contains(kx, bracket_kernel_in(n, u0, ub));
        r.check(inclusion == contains(w, x), "Ker ad u0 in Ker ad u_beta <=> u_beta in span{A u0, B u0} fails" + at);
      }
    }
  }
  return r;
}

}  // namespace lieq
