// Concrete complex G-modules, their real forms and Weyl operators.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lieq/chevalley.hpp"

namespace lieq {

enum class ModuleKind { Adjoint, Natural, Complexified };

std::string kind_name(ModuleKind k);

struct ComplexModule {
  ChevalleyData cd;
  ModuleKind kind = ModuleKind::Adjoint;
  int dim = 0;
  std::vector<GMatrix> action;  // one matrix per Chevalley basis element
  std::map<Weight, GSubspace> weight_spaces;  // includes the zero weight when present
  GSubspace zero_space;

  const RootDatum& datum() const { return cd.rd; }
  GMatrix act(const GVec& x) const;  // x in Chevalley coordinates
  // empty subspace when mu is not a weight
  GSubspace weight_space(const Weight& mu) const;
  bool has_weight(const Weight& mu) const;
  std::set<Weight> weights() const;  // every weight with nonzero multiplicity
  std::set<Weight> nonzero_weights() const;
};

// Adjoint for every root datum; natural for simple A, B, C, D (DomainError otherwise).
ComplexModule build_module(const RootDatum& rd, ModuleKind kind);
ComplexModule build_module(const ChevalleyData& cd, ModuleKind kind);

// action([x, y]) = [action x, action y] for x in {e_i, f_i, h_i} and every basis y;
// this suffices since the generators generate.
void verify_homomorphism(const ComplexModule& m);

// Splits the module into joint eigenspaces of the h_i; fills weight_spaces and
// zero_space and checks the dimensions add up and W-invariance of multiplicities.
void decompose_weights(ComplexModule& m);

struct ZFormReport {
  bool integral_generators = true;  // all matrices Gaussian-integral
  bool ok = true;
  std::map<int, int> max_power;  // root index -> largest k with X^k != 0
  std::vector<std::pair<int, int>> violations;  // (root index, k)
};

// (1/k!) X_a^k Gaussian-integral for every root a and every k.
ZFormReport zform_check(const ComplexModule& m);

// Copy with every root generator scaled by s (breaks the homomorphism; for controls).
ComplexModule with_scaled_root_generators(const ComplexModule& m, const Rational& s);

// Real G0-module U with complexification vc.
//  - realified: U = V as a real space of dimension 2 dim V, coordinates (Re, Im);
//  - adjoint:   U = G0 in the compact basis.
// vc is C^dim U with G acting complex-linearly; J is entrywise conjugation.
struct RealModule {
  CompactBasis cb;
  bool adjoint_real = false;
  ComplexModule source;  // the module that was realified (the adjoint module when adjoint_real)
  ComplexModule vc;      // complexification of U
  int dim = 0;
  std::vector<QMatrix> action0;  // one matrix per compact basis element
  std::map<Weight, QSubspace> u_weight_spaces;  // keyed by lambda in the positive half, plus 0
  QSubspace u_zero;
  QMatrix inner_gram;
  // orthogonal summands in coordinate order: (dim, adjoint); the Gram is -B0 on
  // adjoint blocks and the identity elsewhere
  std::vector<std::pair<int, bool>> blocks;

  const ChevalleyData& cd() const { return vc.cd; }
  QMatrix act0(const QVec& z) const;  // z in compact coordinates
  GVec conjugation(const GVec& v) const;
  // U_lam for any weight (U_lam = U_-lam); empty when lam is not a weight
  QSubspace u_weight(const Weight& lam) const;
  std::vector<Weight> positive_weights() const;  // Lambda^+ in key order
  QMatrix A(int k) const { return action0[cb.A(k)]; }
  QMatrix B(int k) const { return action0[cb.B(k)]; }
};

RealModule realify(const ComplexModule& m);
// dim copies of the trivial module
RealModule trivial_module(const ChevalleyData& cd, int dim);
// orthogonal direct sum, coordinates of a first
RealModule direct_sum(const RealModule& a, const RealModule& b);

// Block-diagonal Gram: identity on realified blocks, -B0 on adjoint ones; throws
// CheckFailure if any action0 matrix is not skew relative to it.
QMatrix invariant_inner_product(const RealModule& u);
bool is_invariant_gram(const RealModule& u, const QMatrix& gram);

struct WeylOperator {
  std::vector<Root> word;
  GMatrix matrix;  // T = T_{a_1} T_{a_2} ... on the module
  // sigma = s_{a_1} s_{a_2} ...
  Weight apply(const RootDatum& rd, const Weight& mu) const;
  Root apply_root(const RootDatum& rd, const Root& r) const;
};

// T_a = exp(X_a) exp(-X_-a) exp(X_a). Verifies T h_j T^-1 = h_{sigma alpha_j},
// T(V_mu) = V_{sigma mu} and T(V_0) = V_0.
WeylOperator weyl_operator(const ComplexModule& m, const std::vector<Root>& word);
// Same on the complexification of U; additionally verifies T(U) = U (T real).
WeylOperator weyl_operator(const RealModule& u, const std::vector<Root>& word);

// Common kernel of A_beta and B_beta on U_lam, with the kernel identities checked.
QSubspace ab_kernel(const RealModule& u, const Root& beta, const Weight& lam);

struct NonsingularData {
  long j = 0, k = 0;  // lam - j beta ... lam + k beta
  GSubspace v_lam_beta;  // in vc
  QSubspace u_lam_beta;
};

// V_{lam,beta} = X_-beta^k V_{lam+k beta} = X_beta^j V_{lam-j beta} and its real
// part U_{lam,beta}; DomainError unless lam + beta or lam - beta is a weight.
NonsingularData nonsingular_subspace(const RealModule& u, const Root& beta, const Weight& lam);

struct PropertyReport : CheckReport {
  std::set<std::pair<Root, Weight>> failing_pairs;  // (beta, lam) with a failed check
};

// Property suite on a real module and its complexification:
// weight-raising equivalence, Hermitian adjoints, B* orthogonality,
// G0_beta(U_lam) in U_{lam+beta} + U_{lam-beta} and equal to the real part of
// X_beta(V_lam + V_-lam), and the nonzero-image / proper-kernel / weight equivalences.
PropertyReport verify_module_properties(const RealModule& u);

}  // namespace lieq
