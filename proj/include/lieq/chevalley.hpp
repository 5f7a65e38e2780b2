// Chevalley basis, structure constants, Killing form and the compact real form.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lieq/rootsystem.hpp"

namespace lieq {

// Sparse linear combination of basis elements.
template <class T>
using Sparse = std::vector<std::pair<int, T>>;

// Basis order of the Chevalley basis: X_r for r = rd.roots[k] at index k,
// then the coroots h_i = tau_{alpha_i} at index |roots| + i.
struct ChevalleyData {
  RootDatum rd;
  int nroots = 0;
  int dim = 0;
  std::vector<long> n_table;  // nroots x nroots, 0 when the sum is not a root
  std::vector<int> sum_index;  // nroots x nroots, index of r+s or -1
  std::vector<std::pair<int, int>> extraspecial;  // per non-simple positive root: (r, s) indices
  QMatrix killing_gram;  // B on the Chevalley basis

  bool is_root_index(int k) const { return k < nroots; }
  int h_index(int i) const { return nroots + i; }
  int neg(int k) const { return k < nroots / 2 ? k + nroots / 2 : k - nroots / 2; }
  long N(int a, int b) const { return n_table[a * nroots + b]; }
  int sum(int a, int b) const { return sum_index[a * nroots + b]; }
  // weight of a basis element in fundamental coordinates (zero for h_i)
  Weight weight_of(int k) const;
  // h_r = sum_i c_i h_i for a root r (integers)
  std::vector<long> coroot(const Root& r) const;

  Sparse<long> bracket_basis(int a, int b) const;
  QVec bracket(const QVec& x, const QVec& y) const;
  GVec bracket(const GVec& x, const GVec& y) const;
};

// Structure constants via extraspecial pairs: the extraspecial pair of each
// non-simple positive root gets N = +(p+1); everything else follows.
// Verifies |N_{r,s}| = p+1 and the sign identities; throws CheckFailure.
ChevalleyData build_chevalley(const RootDatum& rd);

// Matrix of ad e_k on the Chevalley basis (integer entries).
QMatrix adjoint_matrix(const ChevalleyData& cd, int k);
QMatrix adjoint_matrix(const ChevalleyData& cd, const QVec& x);

// B(x, y) = trace(ad x ad y) on Chevalley coordinates.
Rational killing_form(const ChevalleyData& cd, const QVec& x, const QVec& y);
Gauss killing_form(const ChevalleyData& cd, const GVec& x, const GVec& y);

// Killing dual H_r of a root: B(H, H_r) = r(H), in h_i coordinates.
QVec killing_dual(const ChevalleyData& cd, const Root& r);
QVec killing_dual_weight(const ChevalleyData& cd, const Weight& w);

// Jacobi identity on every basis triple; returns the number of failures.
long count_jacobi_failures(const ChevalleyData& cd);

// Killing-form identities: B(g_a, g_b) = 0 unless a + b = 0, B(H, H_a) = a(H),
// tau_a = 2 H_a / B(H_a, H_a), [X_a, X_-a] = B(X_a, X_-a) H_a.
void verify_killing_identities(const ChevalleyData& cd);

// phi = -Id on the Cartan subalgebra, X_r -> -X_{-r}.
QMatrix order_two_automorphism(const ChevalleyData& cd);
void verify_automorphism(const ChevalleyData& cd, const QMatrix& phi);

// Compact basis order: tt_i = i h_i (i < n), then A_r, B_r interleaved per
// positive root: A at n + 2k, B at n + 2k + 1.
struct CompactBasis {
  int n = 0;
  int npos = 0;
  int dim = 0;  // also the dimension of the Chevalley basis
  std::vector<std::vector<Sparse<Rational>>> table;  // [a][b] -> [e_a, e_b]
  QMatrix neg_killing;  // -B0 Gram; the Cartan block is not diagonal for rank >= 2

  int tt(int i) const { return i; }
  int A(int k) const { return n + 2 * k; }
  int B(int k) const { return n + 2 * k + 1; }
  // basis element -> Gaussian Chevalley coordinates
  GVec to_chevalley(int a) const;
  GVec to_chevalley(const QVec& x) const;
  // Chevalley coordinates -> compact coordinates; throws CheckFailure if not in g0
  QVec from_chevalley(const GVec& z) const;
  QVec bracket(const QVec& x, const QVec& y) const;
  QMatrix ad(int a) const;
  QMatrix ad(const QVec& x) const;
};

// Builds the compact basis and verifies integrality, orthogonality under -B0
// and the relations [iH, A_r] = r(H) B_r, [iH, B_r] = -r(H) A_r,
// [A_r, B_r] = -2 B(X_r, J0 X_r) (i H_r).
CompactBasis build_compact_basis(const ChevalleyData& cd);
long count_jacobi_failures(const CompactBasis& cb);

// B(X_r, J0 X_r) for every positive root r (J0 X_r = -X_{-r}).
std::vector<Rational> xb_j0xb_values(const ChevalleyData& cd);

}  // namespace lieq
