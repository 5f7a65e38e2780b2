// Exact scalars and dense linear algebra over Q and Q(i).
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieq {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational frac(long p, long q) {
  Rational r(p);
  r /= q;
  return r;
}

struct Gauss {
  Rational re;
  Rational im;

  Gauss() = default;
  Gauss(long v) : re(v), im(0) {}
  Gauss(const Rational& r) : re(r), im(0) {}
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gauss i() { return Gauss(Rational(0), Rational(1)); }

  Gauss conj() const { return Gauss(re, -im); }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
  Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
  Gauss& operator*=(const Gauss& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Gauss& operator/=(const Gauss& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }
  Gauss operator-() const { return Gauss(-re, -im); }
  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

// "p/q" or "p"
std::string to_string(const Rational& q);
// "a", "b*i", "a+b*i", "a-b*i"
std::string to_string(const Gauss& z);
Rational parse_rational(const std::string& s);
Gauss parse_gauss(const std::string& s);

// Scalar traits used by the templated elimination routines.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gauss& z) { return z.is_zero(); }
inline Integer pivot_key(const Rational& q) { return abs(q.get_num()); }
inline Integer pivot_key(const Gauss& z) {
  return abs(z.re.get_num()) + abs(z.im.get_num());
}
inline Rational conj(const Rational& q) { return q; }
inline Gauss conj(const Gauss& z) { return z.conj(); }

template <class T>
using Vec = std::vector<T>;
using QVec = Vec<Rational>;
using GVec = Vec<Gauss>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  // columns given as vectors
  static Matrix from_cols(const std::vector<Vec<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<T> col(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<T> row(std::size_t i) const {
    return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!lieq::is_zero(x)) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = lieq::conj((*this)(i, j));
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    T t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (lieq::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (lieq::is_zero(y)) continue;
          t = x;
          t *= y;
          c(i, j) += t;
        }
      }
    return c;
  }
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (lieq::is_zero(a(i, k)) || lieq::is_zero(v[k])) continue;
        out[i] += a(i, k) * v[k];
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gauss>;

GMatrix to_gauss(const QMatrix& m);
GVec to_gauss(const QVec& v);
// Real and imaginary parts of a Gaussian matrix.
QMatrix real_part(const GMatrix& m);
QMatrix imag_part(const GMatrix& m);
bool is_real(const GMatrix& m);
// (P + iQ) acting on C^m, written on R^{2m} with coordinates (x, y) for x + iy.
QMatrix realify(const GMatrix& m);

struct NoSolution : std::runtime_error {
  NoSolution() : std::runtime_error("linear system has no solution") {}
};
struct NotNilpotent : std::runtime_error {
  NotNilpotent() : std::runtime_error("matrix is not nilpotent") {}
};
struct DependentInput : std::runtime_error {
  DependentInput() : std::runtime_error("input vectors are linearly dependent") {}
};

// Row echelon data: reduced matrix plus pivot columns.
template <class T>
struct Echelon {
  Matrix<T> r;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan with the pivot rule: leftmost column holding a nonzero entry,
// then the row whose entry has the smallest absolute numerator (first row on ties).
template <class T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> e;
  std::size_t lead = 0;
  const std::size_t R = m.rows(), C = m.cols();
  T f;
  for (std::size_t c = 0; c < C && lead < R; ++c) {
    std::size_t best = R;
    Integer best_key;
    for (std::size_t r = lead; r < R; ++r) {
      if (is_zero(m(r, c))) continue;
      Integer k = pivot_key(m(r, c));
      if (best == R || k < best_key) {
        best = r;
        best_key = k;
      }
    }
    if (best == R) continue;
    if (best != lead)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(best, j), m(lead, j));
    T inv = T(1) / m(lead, c);
    for (std::size_t j = c; j < C; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == lead || is_zero(m(r, c))) continue;
      f = m(r, c);
      for (std::size_t j = c; j < C; ++j) {
        if (is_zero(m(lead, j))) continue;
        m(r, j) -= f * m(lead, j);
      }
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.r = std::move(m);
  return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Scale to integral entries with content 1 and a positive leading entry.
void normalize_integral(QVec& v);
// Gaussian analogue: Gaussian-integral entries, integer content 1, leading
// entry with re > 0 and im >= 0.
void normalize_integral(GVec& v);

template <class T>
std::vector<Vec<T>> kernel(const Matrix<T>& m) {
  Echelon<T> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.r(k, f);
    normalize_integral(v);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
std::optional<Vec<T>> try_solve(const Matrix<T>& a, const Vec<T>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon<T> e = rref(aug);
  Vec<T> x(a.cols(), T(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == a.cols()) return std::nullopt;
    x[e.pivots[k]] = e.r(k, a.cols());
  }
  return x;
}

// Pivot solution of a x = b (free variables set to zero); throws NoSolution.
template <class T>
Vec<T> solve_linear(const Matrix<T>& a, const Vec<T>& b) {
  auto x = try_solve(a, b);
  if (!x) throw NoSolution();
  return *x;
}

// Inverse of a square matrix via rref of [m | I]; throws NoSolution if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  Echelon<T> e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] >= n) throw NoSolution();
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.r(i, n + j);
  return out;
}

template <class T>
Matrix<T> nilpotent_exp(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("nilpotent_exp: square matrix required");
  const std::size_t n = m.rows();
  Matrix<T> sum = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * m;
    if (term.is_zero()) return sum;
    term *= T(frac(1, static_cast<long>(k)));
    sum += term;
  }
  throw NotNilpotent();
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

template <class T>
T bilinear(const Vec<T>& a, const Matrix<T>& g, const Vec<T>& b) {
  return dot(a, g * b);
}

template <class T>
Vec<T> add(Vec<T> a, const Vec<T>& b, const T& s = T(1)) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(b[i])) a[i] += s * b[i];
  return a;
}

template <class T>
Vec<T> scale(Vec<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// Symmetric elimination: all pivots positive.
bool is_positive_definite(const QMatrix& g);

// Orthogonalize against gram without normalization; output stays rational.
std::vector<QVec> gram_schmidt_q(const std::vector<QVec>& vectors, const QMatrix& gram);

// Basis of the intersection of ker(mats[i] - eigs[i] I).
template <class T>
std::vector<Vec<T>> simultaneous_eigenspace(const std::vector<Matrix<T>>& mats,
                                            const std::vector<T>& eigs) {
  if (mats.size() != eigs.size()) throw std::invalid_argument("eigenspace: count mismatch");
  if (mats.empty()) return {};
  const std::size_t n = mats[0].rows();
  Matrix<T> stack(n * mats.size(), n);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != n || mats[k].cols() != n)
      throw std::invalid_argument("eigenspace: matrices must be square of equal size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T x = mats[k](i, j);
        if (i == j) x -= eigs[k];
        stack(k * n + i, j) = x;
      }
  }
  return kernel(stack);
}

// ---- subspaces, always stored as lists of vectors of a fixed ambient dimension

template <class T>
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec<T>> basis;  // linearly independent
  std::size_t dim() const { return basis.size(); }
  bool empty() const { return basis.empty(); }
};

using QSubspace = Subspace<Rational>;
using GSubspace = Subspace<Gauss>;

// Canonical (reduced row echelon) basis of the span of the given vectors.
template <class T>
Subspace<T> span(const std::vector<Vec<T>>& vs, std::size_t ambient) {
  Subspace<T> s;
  s.ambient = ambient;
  if (vs.empty()) return s;
  Matrix<T> m(vs.size(), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != ambient) throw std::invalid_argument("span: dimension mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vs[i][j];
  }
  Echelon<T> e = rref(m);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) s.basis.push_back(e.r.row(k));
  return s;
}

template <class T>
std::size_t span_dim(const std::vector<Vec<T>>& vs, std::size_t ambient) {
  return span(vs, ambient).dim();
}

template <class T>
bool contains(const Subspace<T>& s, const Vec<T>& v) {
  if (is_zero_vec(v)) return true;
  std::vector<Vec<T>> all = s.basis;
  all.push_back(v);
  return span_dim(all, s.ambient) == s.dim();
}

template <class T>
bool contains(const Subspace<T>& big, const Subspace<T>& small) {
  std::vector<Vec<T>> all = big.basis;
  all.insert(all.end(), small.basis.begin(), small.basis.end());
  return span_dim(all, big.ambient) == big.dim();
}

template <class T>
bool same_subspace(const Subspace<T>& a, const Subspace<T>& b) {
  return a.dim() == b.dim() && contains(a, b);
}

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b) {
  std::vector<Vec<T>> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return span(all, a.ambient);
}

template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  Subspace<T> out;
  out.ambient = a.ambient;
  if (a.empty() || b.empty()) return out;
  // x = A s = B t  <=>  [A | -B] (s; t) = 0
  Matrix<T> m(a.ambient, a.dim() + b.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < a.ambient; ++i) m(i, j) = a.basis[j][i];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < a.ambient; ++i) m(i, a.dim() + j) = -b.basis[j][i];
  std::vector<Vec<T>> vs;
  for (const auto& k : kernel(m)) {
    Vec<T> x(a.ambient, T(0));
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(k[j])) x = add(x, a.basis[j], k[j]);
    vs.push_back(x);
  }
  return span(vs, a.ambient);
}

// Image of a subspace under a linear map.
template <class T>
Subspace<T> image(const Matrix<T>& m, const Subspace<T>& s) {
  std::vector<Vec<T>> vs;
  for (const auto& b : s.basis) vs.push_back(m * b);
  return span(vs, m.rows());
}

template <class T>
Subspace<T> whole_space(std::size_t n) {
  std::vector<Vec<T>> vs;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<T> e(n, T(0));
    e[i] = T(1);
    vs.push_back(e);
  }
  return Subspace<T>{n, vs};
}

// Kernel of m restricted to the subspace s (returned in ambient coordinates).
template <class T>
Subspace<T> kernel_on(const Matrix<T>& m, const Subspace<T>& s) {
  Subspace<T> out;
  out.ambient = s.ambient;
  if (s.empty()) return out;
  Matrix<T> ms = m * Matrix<T>::from_cols(s.basis, s.ambient);
  std::vector<Vec<T>> vs;
  for (const auto& k : kernel(ms)) {
    Vec<T> x(s.ambient, T(0));
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!is_zero(k[j])) x = add(x, s.basis[j], k[j]);
    vs.push_back(x);
  }
  return span(vs, s.ambient);
}

// Orthogonal complement of s inside t, relative to a symmetric bilinear gram.
QSubspace orth_complement_in(const QSubspace& s, const QSubspace& t, const QMatrix& gram);

}  // namespace lieq
