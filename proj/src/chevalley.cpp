#include "lieq/chevalley.hpp"

#include <functional>

namespace lieq {

namespace {

Root root_or_zero(const ChevalleyData& cd, int k) {
  if (k < cd.nroots) return cd.rd.roots[k];
  return Root(cd.rd.n, 0);
}

inline bool is_zero(long v) { return v == 0; }
using lieq::is_zero;

template <class T>
void accumulate(std::map<int, T>& acc, int k, const T& v) {
  auto [it, fresh] = acc.emplace(k, v);
  if (!fresh) {
    it->second += v;
    if (is_zero(it->second)) acc.erase(it);
  }
}

}  // namespace

Weight ChevalleyData::weight_of(int k) const { return rd.root_to_weight(root_or_zero(*this, k)); }

std::vector<long> ChevalleyData::coroot(const Root& r) const {
  const long dr = rd.sq_len_half(r);
  std::vector<long> c(rd.n);
  for (int i = 0; i < rd.n; ++i) {
    long num = r[i] * rd.d[i];
    if (num % dr != 0) throw CheckFailure("non-integral coroot");
    c[i] = num / dr;
  }
  return c;
}

Sparse<long> ChevalleyData::bracket_basis(int a, int b) const {
  Sparse<long> out;
  const bool ra = a < nroots, rb = b < nroots;
  if (ra && rb) {
    if (a == neg(b)) {
      auto c = coroot(rd.roots[a]);
      for (int i = 0; i < rd.n; ++i)
        if (c[i]) out.emplace_back(h_index(i), c[i]);
    } else if (int s = sum(a, b); s >= 0) {
      out.emplace_back(s, N(a, b));
    }
  } else if (!ra && rb) {
    long v = rd.root_to_weight(rd.roots[b])[a - nroots];
    if (v) out.emplace_back(b, v);
  } else if (ra && !rb) {
    long v = rd.root_to_weight(rd.roots[a])[b - nroots];
    if (v) out.emplace_back(a, -v);
  }
  return out;
}

QVec ChevalleyData::bracket(const QVec& x, const QVec& y) const {
  QVec out(dim, Rational(0));
  for (int a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (sgn(y[b]) == 0) continue;
      for (const auto& [c, v] : bracket_basis(a, b)) out[c] += x[a] * y[b] * v;
    }
  }
  return out;
}

GVec ChevalleyData::bracket(const GVec& x, const GVec& y) const {
  GVec out(dim, Gauss(0));
  for (int a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      for (const auto& [c, v] : bracket_basis(a, b)) out[c] += x[a] * y[b] * Gauss(v);
    }
  }
  return out;
}

ChevalleyData build_chevalley(const RootDatum& rd) {
  ChevalleyData cd;
  cd.rd = rd;
  cd.nroots = static_cast<int>(rd.roots.size());
  cd.dim = cd.nroots + rd.n;
  const int R = cd.nroots, P = R / 2;
  cd.sum_index.assign(R * R, -1);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      auto it = rd.index.find(add_vec(rd.roots[a], rd.roots[b]));
      if (it != rd.index.end()) cd.sum_index[a * R + b] = it->second;
    }

  auto string_p = [&](int a, int b) {  // largest p with b - p a a root
    long p = 0;
    Root t = rd.roots[b];
    for (;;) {
      t = add_vec(t, rd.roots[a], -1);
      if (!rd.is_root(t)) return p;
      ++p;
    }
  };
  auto len = [&](int k) { return rd.inner(rd.roots[k], rd.roots[k]); };

  // positive pairs (a, b), a < b, a + b positive
  std::map<std::pair<int, int>, Rational> pos;
  std::function<Rational(int, int)> get = [&](int a, int b) -> Rational {
    const bool pa = a < P, pb = b < P;
    if (pa && pb) {
      if (a < b) return pos.at({a, b});
      return -pos.at({b, a});
    }
    if (!pa && !pb) return -get(cd.neg(a), cd.neg(b));
    const int c = cd.neg(cd.sum(a, b));  // a + b + c = 0
    const bool pc = c < P;
    // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
    if (pc == pb) return len(c) / len(a) * get(b, c);
    return len(c) / len(b) * get(c, a);
  };

  cd.extraspecial.assign(P, {-1, -1});
  for (int x = 0; x < P; ++x) {
    std::vector<std::pair<int, int>> special;
    for (int r = 0; r < x; ++r) {
      int m = cd.sum(r, x + P);  // r - x
      if (m < 0) continue;
      int s = cd.neg(m);
      if (s >= P || s <= r) continue;
      special.emplace_back(r, s);
    }
    if (special.empty()) continue;
    auto [r1, s1] = special.front();
    cd.extraspecial[x] = {r1, s1};
    const Rational n1(string_p(r1, s1) + 1);
    pos[{r1, s1}] = n1;
    for (std::size_t k = 1; k < special.size(); ++k) {
      auto [r, s] = special[k];
      Rational t = 0;
      const int mr1 = cd.neg(r1), ms1 = cd.neg(s1);
      if (int u = cd.sum(s, mr1); u >= 0) t += get(s, mr1) * get(r, ms1) / len(u);
      if (int u = cd.sum(r, mr1); u >= 0) t += get(mr1, r) * get(s, ms1) / len(u);
      pos[{r, s}] = len(x) / n1 * t;
    }
  }

  cd.n_table.assign(R * R, 0);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (cd.sum(a, b) < 0) continue;
      Rational v = get(a, b);
      if (v.get_den() != 1) throw CheckFailure("non-integral structure constant");
      long n = v.get_num().get_si();
      if (std::abs(n) != string_p(a, b) + 1) throw CheckFailure("|N| != p+1 at " + ivec_str(rd.roots[a]) + "," + ivec_str(rd.roots[b]));
      cd.n_table[a * R + b] = n;
    }
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (cd.N(a, b) != -cd.N(b, a) || cd.N(a, b) != -cd.N(cd.neg(a), cd.neg(b)))
        throw CheckFailure("structure constant sign identity fails");
    }

  // Killing form on weight-compatible pairs
  cd.killing_gram = QMatrix(cd.dim, cd.dim);
  auto trace_pair = [&](int a, int b) {
    Rational t = 0;
    for (int c = 0; c < cd.dim; ++c)
      for (const auto& [e, v] : cd.bracket_basis(b, c))
        for (const auto& [f, w] : cd.bracket_basis(a, e))
          if (f == c) t += v * w;
    return t;
  };
  for (int a = 0; a < R; ++a) cd.killing_gram(a, cd.neg(a)) = trace_pair(a, cd.neg(a));
  for (int i = 0; i < rd.n; ++i)
    for (int j = 0; j < rd.n; ++j) cd.killing_gram(R + i, R + j) = trace_pair(R + i, R + j);
  return cd;
}

QMatrix adjoint_matrix(const ChevalleyData& cd, int k) {
  QMatrix m(cd.dim, cd.dim);
  for (int c = 0; c < cd.dim; ++c)
    for (const auto& [e, v] : cd.bracket_basis(k, c)) m(e, c) += v;
  return m;
}

QMatrix adjoint_matrix(const ChevalleyData& cd, const QVec& x) {
  QMatrix m(cd.dim, cd.dim);
  for (int k = 0; k < cd.dim; ++k)
    if (sgn(x[k]) != 0) m += x[k] * adjoint_matrix(cd, k);
  return m;
}

Rational killing_form(const ChevalleyData& cd, const QVec& x, const QVec& y) {
  return bilinear(x, cd.killing_gram, y);
}

Gauss killing_form(const ChevalleyData& cd, const GVec& x, const GVec& y) {
  Gauss s(0);
  for (int a = 0; a < cd.dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < cd.dim; ++b)
      if (!y[b].is_zero() && sgn(cd.killing_gram(a, b)) != 0) s += x[a] * y[b] * Gauss(cd.killing_gram(a, b));
  }
  return s;
}

namespace {

QMatrix cartan_block(const ChevalleyData& cd) {
  const int n = cd.rd.n;
  QMatrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = cd.killing_gram(cd.nroots + i, cd.nroots + j);
  return k;
}

}  // namespace

QVec killing_dual_weight(const ChevalleyData& cd, const Weight& w) {
  QVec rhs;
  for (auto x : w) rhs.emplace_back(x);
  return solve_linear(cartan_block(cd), rhs);
}

QVec killing_dual(const ChevalleyData& cd, const Root& r) {
  return killing_dual_weight(cd, cd.rd.root_to_weight(r));
}

long count_jacobi_failures(const ChevalleyData& cd) {
  long failures = 0;
  auto br = [&](const std::map<int, long>& x, int c) {
    std::map<int, long> out;
    for (const auto& [a, v] : x)
      for (const auto& [e, w] : cd.bracket_basis(a, c)) accumulate(out, e, v * w);
    return out;
  };
  for (int a = 0; a < cd.dim; ++a)
    for (int b = a + 1; b < cd.dim; ++b) {
      std::map<int, long> ab;
      for (const auto& [e, v] : cd.bracket_basis(a, b)) accumulate(ab, e, v);
      for (int c = b + 1; c < cd.dim; ++c) {
        std::map<int, long> bc, ca;
        for (const auto& [e, v] : cd.bracket_basis(b, c)) accumulate(bc, e, v);
        for (const auto& [e, v] : cd.bracket_basis(c, a)) accumulate(ca, e, v);
        std::map<int, long> total = br(ab, c);
        for (const auto& [e, v] : br(bc, a)) accumulate(total, e, v);
        for (const auto& [e, v] : br(ca, b)) accumulate(total, e, v);
        if (!total.empty()) ++failures;
      }
    }
  return failures;
}

void verify_killing_identities(const ChevalleyData& cd) {
  const int R = cd.nroots, n = cd.rd.n;
  if (cd.dim <= 80) {
    for (int a = 0; a < cd.dim; ++a)
      for (int b = 0; b < cd.dim; ++b) {
        Rational t = 0;
        for (int c = 0; c < cd.dim; ++c)
          for (const auto& [e, v] : cd.bracket_basis(b, c))
            for (const auto& [f, w] : cd.bracket_basis(a, e))
              if (f == c) t += v * w;
        require(t == cd.killing_gram(a, b), "Killing trace mismatch");
      }
  }
  require(rank(cd.killing_gram) == static_cast<std::size_t>(cd.dim), "Killing form degenerate");
  QMatrix kh = cartan_block(cd);
  for (const auto& r : cd.rd.positive) {
    QVec h = killing_dual(cd, r);
    // B(h_i, H_r) = r(h_i)
    Weight w = cd.rd.root_to_weight(r);
    QVec lhs = kh * h;
    for (int i = 0; i < n; ++i) require(lhs[i] == w[i], "B(H, H_r) != r(H)");
    Rational bb = bilinear(h, kh, h);
    auto c = cd.coroot(r);
    for (int i = 0; i < n; ++i) require(2 * h[i] / bb == c[i], "tau_r != 2 H_r / B(H_r, H_r)");
    int a = cd.rd.root_index(r);
    Rational bx = cd.killing_gram(a, cd.neg(a));
    for (int i = 0; i < n; ++i) require(bx * h[i] == c[i], "[X_r, X_-r] != B(X_r, X_-r) H_r");
  }
  (void)R;
}

QMatrix order_two_automorphism(const ChevalleyData& cd) {
  QMatrix phi(cd.dim, cd.dim);
  for (int k = 0; k < cd.nroots; ++k) phi(cd.neg(k), k) = -1;
  for (int i = 0; i < cd.rd.n; ++i) phi(cd.h_index(i), cd.h_index(i)) = -1;
  return phi;
}

void verify_automorphism(const ChevalleyData& cd, const QMatrix& phi) {
  require(phi * phi == QMatrix::identity(cd.dim), "phi^2 != Id");
  for (int a = 0; a < cd.dim; ++a)
    for (int b = 0; b < cd.dim; ++b) {
      QVec ea(cd.dim, Rational(0)), eb(cd.dim, Rational(0)), ab(cd.dim, Rational(0));
      ea[a] = 1;
      eb[b] = 1;
      for (const auto& [e, v] : cd.bracket_basis(a, b)) ab[e] += v;
      require(phi * ab == cd.bracket(phi * ea, phi * eb), "phi is not a homomorphism");
    }
}

// ---- compact basis

GVec CompactBasis::to_chevalley(int a) const {
  GVec z(dim, Gauss(0));
  const int R = 2 * npos;
  if (a < n) {
    z[R + a] = Gauss::i();
  } else {
    const int k = (a - n) / 2;
    if ((a - n) % 2 == 0) {
      z[k] = 1;
      z[k + npos] = -1;
    } else {
      z[k] = Gauss::i();
      z[k + npos] = Gauss::i();
    }
  }
  return z;
}

GVec CompactBasis::to_chevalley(const QVec& x) const {
  GVec z(dim, Gauss(0));
  for (int a = 0; a < dim; ++a)
    if (sgn(x[a]) != 0) z = add(z, to_chevalley(a), Gauss(x[a]));
  return z;
}

QVec CompactBasis::from_chevalley(const GVec& z) const {
  QVec x(dim, Rational(0));
  const int R = 2 * npos;
  const Gauss minus_i(Rational(0), Rational(-1));
  for (int i = 0; i < n; ++i) {
    Gauss t = minus_i * z[R + i];
    require(t.is_real(), "element is not in the compact form");
    x[i] = t.re;
  }
  for (int k = 0; k < npos; ++k) {
    const Gauss& p = z[k];
    const Gauss& m = z[k + npos];
    Gauss a = (p - m) * Gauss(frac(1, 2));
    Gauss b = minus_i * (p + m) * Gauss(frac(1, 2));
    require(a.is_real() && b.is_real(), "element is not in the compact form");
    x[A(k)] = a.re;
    x[B(k)] = b.re;
  }
  return x;
}

QVec CompactBasis::bracket(const QVec& x, const QVec& y) const {
  QVec out(dim, Rational(0));
  for (int a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (sgn(y[b]) == 0) continue;
      for (const auto& [c, v] : table[a][b]) out[c] += x[a] * y[b] * v;
    }
  }
  return out;
}

QMatrix CompactBasis::ad(int a) const {
  QMatrix m(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (const auto& [e, v] : table[a][c]) m(e, c) += v;
  return m;
}

QMatrix CompactBasis::ad(const QVec& x) const {
  QMatrix m(dim, dim);
  for (int a = 0; a < dim; ++a)
    if (sgn(x[a]) != 0) m += x[a] * ad(a);
  return m;
}

std::vector<Rational> xb_j0xb_values(const ChevalleyData& cd) {
  std::vector<Rational> out;
  const int P = cd.nroots / 2;
  for (int k = 0; k < P; ++k) out.push_back(-cd.killing_gram(k, k + P));
  return out;
}

CompactBasis build_compact_basis(const ChevalleyData& cd) {
  CompactBasis cb;
  cb.n = cd.rd.n;
  cb.npos = cd.nroots / 2;
  cb.dim = cd.dim;
  const int D = cb.dim;
  std::vector<Sparse<Gauss>> images(D);
  for (int a = 0; a < D; ++a) {
    GVec z = cb.to_chevalley(a);
    for (int k = 0; k < D; ++k)
      if (!z[k].is_zero()) images[a].emplace_back(k, z[k]);
  }
  cb.table.assign(D, std::vector<Sparse<Rational>>(D));
  for (int a = 0; a < D; ++a)
    for (int b = a + 1; b < D; ++b) {
      std::map<int, Gauss> acc;
      for (const auto& [p, u] : images[a])
        for (const auto& [q, w] : images[b])
          for (const auto& [e, v] : cd.bracket_basis(p, q)) accumulate(acc, e, u * w * Gauss(v));
      GVec z(D, Gauss(0));
      for (const auto& [e, v] : acc) z[e] = v;
      QVec x = cb.from_chevalley(z);
      for (int c = 0; c < D; ++c) {
        if (sgn(x[c]) == 0) continue;
        require(x[c].get_den() == 1, "non-integral compact structure constant");
        cb.table[a][b].emplace_back(c, x[c]);
        cb.table[b][a].emplace_back(c, -x[c]);
      }
    }

  // -B0 on the compact basis
  cb.neg_killing = QMatrix(D, D);
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      Gauss s(0);
      for (const auto& [p, u] : images[a])
        for (const auto& [q, w] : images[b])
          if (sgn(cd.killing_gram(p, q)) != 0) s += u * w * Gauss(cd.killing_gram(p, q));
      require(s.is_real(), "Killing form not real on the compact form");
      cb.neg_killing(a, b) = -s.re;
    }
  // A_r, B_r pairwise orthogonal and orthogonal to the Cartan part; the
  // Cartan block is the coroot Gram, positive definite but not diagonal
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      if (a == b) require(sgn(cb.neg_killing(a, a)) > 0, "-B0 not positive on the compact basis");
      else if (a >= cb.n || b >= cb.n) require(sgn(cb.neg_killing(a, b)) == 0, "root part of the compact basis not orthogonal under -B0");
    }
  QMatrix hblock(cb.n, cb.n);
  for (int i = 0; i < cb.n; ++i)
    for (int j = 0; j < cb.n; ++j) hblock(i, j) = cb.neg_killing(i, j);
  require(is_positive_definite(hblock), "-B0 not positive definite on the Cartan part");

  // relations with the Cartan part and between A_r, B_r
  auto xj = xb_j0xb_values(cd);
  for (int k = 0; k < cb.npos; ++k) {
    const Root& r = cd.rd.positive[k];
    Weight w = cd.rd.root_to_weight(r);
    for (int i = 0; i < cb.n; ++i) {
      Sparse<Rational> ea, eb;
      if (w[i]) {
        ea.emplace_back(cb.B(k), Rational(w[i]));
        eb.emplace_back(cb.A(k), Rational(-w[i]));
      }
      require(cb.table[cb.tt(i)][cb.A(k)] == ea, "[i h, A_r] != r(h) B_r");
      require(cb.table[cb.tt(i)][cb.B(k)] == eb, "[i h, B_r] != -r(h) A_r");
    }
    QVec hr = killing_dual(cd, r);
    auto co = cd.coroot(r);
    QVec expect(D, Rational(0)), expect2(D, Rational(0));
    for (int i = 0; i < cb.n; ++i) {
      expect[cb.tt(i)] = -2 * xj[k] * hr[i];
      expect2[cb.tt(i)] = 2 * co[i];
    }
    QVec got(D, Rational(0));
    for (const auto& [c, v] : cb.table[cb.A(k)][cb.B(k)]) got[c] = v;
    require(got == expect, "[A_r, B_r] != -2 B(X_r, J0 X_r) i H_r");
    require(got == expect2, "[A_r, B_r] != 2 tt_r");
  }
  return cb;
}

long count_jacobi_failures(const CompactBasis& cb) {
  long failures = 0;
  const int D = cb.dim;
  auto br = [&](const std::map<int, Rational>& x, int c) {
    std::map<int, Rational> out;
    for (const auto& [a, v] : x)
      for (const auto& [e, w] : cb.table[a][c]) accumulate(out, e, Rational(v * w));
    return out;
  };
  auto basis = [&](int a, int b) {
    std::map<int, Rational> m;
    for (const auto& [e, v] : cb.table[a][b]) m[e] = v;
    return m;
  };
  for (int a = 0; a < D; ++a)
    for (int b = a + 1; b < D; ++b) {
      auto ab = basis(a, b);
      for (int c = b + 1; c < D; ++c) {
        auto total = br(ab, c);
        for (const auto& [e, v] : br(basis(b, c), a)) accumulate(total, e, v);
        for (const auto& [e, v] : br(basis(c, a), b)) accumulate(total, e, v);
        if (!total.empty()) ++failures;
      }
    }
  return failures;
}

}  // namespace lieq
