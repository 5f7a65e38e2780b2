#include "lieq/exactq.hpp"

#include <cctype>

namespace lieq {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Gauss& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  std::string im = Rational(abs(z.im)).get_str() + "*i";
  if (sgn(z.re) == 0) return sgn(z.im) < 0 ? "-" + im : im;
  return z.re.get_str() + (sgn(z.im) < 0 ? "-" : "+") + im;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string t = s;
  if (t[0] == '+') t = t.substr(1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Gauss parse_gauss(const std::string& s) {
  if (s.size() < 2 || s.substr(s.size() - 2) != "*i") return Gauss(parse_rational(s));
  std::string body = s.substr(0, s.size() - 2);
  // split at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return Gauss(Rational(0), parse_rational(body));
  return Gauss(parse_rational(body.substr(0, cut)), parse_rational(body.substr(cut)));
}

GMatrix to_gauss(const QMatrix& m) {
  GMatrix g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gauss(m(i, j));
  return g;
}

GVec to_gauss(const QVec& v) {
  GVec g;
  g.reserve(v.size());
  for (const auto& x : v) g.emplace_back(x);
  return g;
}

QMatrix real_part(const GMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
  return r;
}

QMatrix imag_part(const GMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).im;
  return r;
}

bool is_real(const GMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

QMatrix realify(const GMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  QMatrix out(2 * r, 2 * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const Gauss& z = m(i, j);
      out(i, j) = z.re;
      out(i, c + j) = -z.im;
      out(r + i, j) = z.im;
      out(r + i, c + j) = z.re;
    }
  return out;
}

void normalize_integral(QVec& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (sgn(g) == 0) return;
  int lead = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  for (auto& x : v) x /= g;
}

void normalize_integral(GVec& v) {
  Integer l = 1, g = 0;
  for (const auto& z : v) {
    if (sgn(z.re) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re.get_den_mpz_t());
    if (sgn(z.im) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im.get_den_mpz_t());
  }
  for (auto& z : v) {
    z.re *= l;
    z.im *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.re.get_num_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.im.get_num_mpz_t());
  }
  if (sgn(g) == 0) return;
  for (auto& z : v) {
    z.re /= g;
    z.im /= g;
  }
  // rotate by a unit so that the leading entry lies in {re > 0, im >= 0}
  for (const auto& z : v) {
    if (z.is_zero()) continue;
    Gauss unit(1);
    if (sgn(z.re) > 0 && sgn(z.im) >= 0) unit = Gauss(1);
    else if (sgn(z.re) <= 0 && sgn(z.im) > 0) unit = Gauss(Rational(0), Rational(-1));
    else if (sgn(z.re) < 0 && sgn(z.im) <= 0) unit = Gauss(-1);
    else unit = Gauss(Rational(0), Rational(1));
    for (auto& w : v) w *= unit;
    break;
  }
}

bool is_positive_definite(const QMatrix& g) {
  if (!g.is_square() || g != g.transpose()) return false;
  QMatrix m = g;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

std::vector<QVec> gram_schmidt_q(const std::vector<QVec>& vectors, const QMatrix& gram) {
  std::vector<QVec> out;
  std::vector<Rational> norms;
  for (const auto& v : vectors) {
    QVec w = v;
    for (std::size_t k = 0; k < out.size(); ++k) {
      Rational c = bilinear(v, gram, out[k]) / norms[k];
      w = add(w, out[k], Rational(-c));
    }
    Rational n = bilinear(w, gram, w);
    if (sgn(n) == 0) throw DependentInput();
    out.push_back(w);
    norms.push_back(n);
  }
  return out;
}

QSubspace orth_complement_in(const QSubspace& s, const QSubspace& t, const QMatrix& gram) {
  QSubspace out;
  out.ambient = t.ambient;
  if (t.empty()) return out;
  if (s.empty()) return t;
  // coefficients c on t's basis with <s_i, sum c_j t_j> = 0
  QMatrix m(s.dim(), t.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    QVec gs = gram.transpose() * s.basis[i];
    for (std::size_t j = 0; j < t.dim(); ++j) m(i, j) = dot(gs, t.basis[j]);
  }
  std::vector<QVec> vs;
  for (const auto& k : kernel(m)) {
    QVec x(t.ambient, Rational(0));
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (sgn(k[j]) != 0) x = add(x, t.basis[j], k[j]);
    vs.push_back(x);
  }
  return span(vs, t.ambient);
}

}  // namespace lieq
