// The metric 2-step nilpotent algebra N0 = U + G0 built from a real module U.
#pragma once

#include <string>
#include <vector>

#include "lieq/repmod.hpp"

namespace lieq {

// Coordinates on N0: the U coordinates of the module first, then the compact
// basis of G0. G0 carries -B0.
struct MetricNilpotent {
  RealModule u;
  int du = 0, dg = 0, dim = 0;
  // [x, y] has G0 component a equal to x^T forms[a] y for x, y in U
  std::vector<QMatrix> forms;
  QMatrix g0_gram;
  QMatrix inner_gram;  // block-diagonal, U first

  const CompactBasis& g0() const { return u.cb; }
  const ChevalleyData& cd() const { return u.cd(); }
  QVec bracket_u(const QVec& x, const QVec& y) const;  // U x U -> G0 coordinates
  QVec bracket(const QVec& x, const QVec& y) const;    // N0 x N0 -> N0
  QVec bracket_basis(int i, int j) const;              // [e_i, e_j] for U basis indices
  QVec embed_u(const QVec& x) const;
  QVec embed_g0(const QVec& z) const;
};

// Solves <[u,u'], Z> = <Z(u), u'> against the -B0 Gram of G0 and verifies
// orthogonality, the defining identity, antisymmetry, 2-step nilpotency,
// Jacobi and [N0, N0] = G0. Throws CheckFailure.
MetricNilpotent build_nilalg(const RealModule& u);

// Common kernel of the G0 action on U, in U coordinates.
QSubspace module_kernel(const RealModule& u);

// {x : [x, N0] = 0}; verifies it equals G0 + Ker(G0) and that it equals G0
// exactly when Ker(G0) = 0.
QSubspace center(const MetricNilpotent& n);

struct RealWeightVector {
  Weight lam;
  QVec coords;  // on tt_1 .. tt_n
};

// <H, H~_lam> = -i lam(H) on h0 solved over Q; checks H~_lam = i H_lam.
RealWeightVector real_weight_vector(const ChevalleyData& cd, const CompactBasis& cb, const Weight& lam);
RealWeightVector real_weight_vector(const MetricNilpotent& n, const Weight& lam);
// H~_lam in compact coordinates
QVec g0_coords(const CompactBasis& cb, const RealWeightVector& h);

// G0_lam = span{A_b, B_b} when lam = +-b is a root (as a weight), else 0; G0 coordinates.
QSubspace g0_root_space(const MetricNilpotent& n, const Weight& lam);

// Span of [x, y] over bases of the two U subspaces, in G0 coordinates.
QSubspace bracket_span(const MetricNilpotent& n, const QSubspace& a, const QSubspace& b);
// {y in s : [x, y] = 0} and {[x, y] : y in s}
QSubspace bracket_kernel_in(const MetricNilpotent& n, const QVec& x, const QSubspace& s);
QSubspace bracket_image_of(const MetricNilpotent& n, const QVec& x, const QSubspace& s);

// [U_0, U_lam] = G0_lam, [U_mu, U_lam] = G0_{mu+lam} + G0_{mu-lam} for mu != +-lam,
// [U_0, U_0] = 0, [U_lam, U_lam] = R H~_lam when 2 lam is not a root or lam is a root.
CheckReport verify_bracket_relations(const MetricNilpotent& n);

// Image of ad u in G0 coordinates, computed directly and as the -B0 complement of
// the stabilizer of u; throws CheckFailure if the two differ.
QSubspace ad_range(const MetricNilpotent& n, const QVec& u);

struct WeightRange {
  QSubspace image;      // ad u_lam (U)
  QSubspace predicted;  // R H~_lam + G0_lam + sum over alpha with V_{lam-alpha} != 0 of G0_alpha
  bool generic = false;  // nonvanishing conditions on the V_lam component
  bool equal = false;
  bool sharp() const { return !generic || equal; }  // equality whenever generic
};

// True when 2 lam = alpha and 2 lam = alpha + beta (alpha != beta) have no root solutions.
bool root_equation_free(const RootDatum& rd, const Weight& lam);

// Containment is always checked (CheckFailure otherwise); equality is reported
// through the flags. DomainError if lam is not a nonzero weight, u_lam is not
// in U_lam, or lam fails the root-equation condition.
WeightRange ad_range_weight(const MetricNilpotent& n, const Weight& lam, const QVec& u_lam);

// V_lam component of a vector of U_lam inside the complexification.
GVec weight_component(const RealModule& u, const Weight& lam, const QVec& x);

// phi with T Z T^-1 = phi(Z) on U, as a matrix on G0 coordinates; throws CheckFailure
// if some conjugate leaves the image of G0.
QMatrix induced_g0_map(const RealModule& u, const QMatrix& t);

// Derivations t(X) for the compact basis, zeta_sigma for simple reflections and a
// longer word, T(g) for every single positive-root Weyl operator.
CheckReport verify_aut_der(const MetricNilpotent& n);

struct InterplayReport : CheckReport {
  long skipped = 0;  // samples u_0 in Ker A_beta
};

// Zero-weight / root-weight interplay for every positive root beta that is a weight.
// DomainError when U_0 = 0 or no positive root is a weight.
InterplayReport verify_zero_weight_interplay(const MetricNilpotent& n);

}  // namespace lieq
