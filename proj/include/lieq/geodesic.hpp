// Rational structure on N0 and totally geodesic subalgebras built from weights.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lieq/nilalg.hpp"

namespace lieq {

// Subspace of N0. A basis vector is basis[k] + sqrt(radicand) * surd[k]; surd is
// empty for every subspace built here and only used for irrational controls.
struct Subalgebra {
  std::vector<QVec> basis;  // N0 coordinates
  std::vector<QVec> surd;
  long radicand = 0;
  QSubspace u_part;  // intersection with U, N0 coordinates
  QSubspace g_part;  // intersection with G0, N0 coordinates
  std::size_t dim() const { return basis.size(); }
};

Subalgebra make_subalgebra(const MetricNilpotent& n, const std::vector<QVec>& vectors);

// Basis L0 = (module basis) + (compact basis); N0 coordinates are L0 coordinates.
struct RationalStructure {
  int du = 0, dg = 0;
  bool compact_integral = false;  // structure constants of the compact basis
  bool module_integral = false;   // compact basis acts by integer matrices on the module basis
  bool bracket_integral = false;  // [module basis, module basis] has integer coordinates
  Rational bracket_denominator = 1;  // lcm of those denominators
  QVec h0;  // rational element of h0 separating the weights (tt coordinates)
  std::map<Weight, QSubspace> weight_bases;  // Lambda^+ and 0; kernels of H0^2 + lam(H0)^2 over Q
  std::vector<QVec> orthogonal_u_basis;  // Gram-Schmidt of the module basis, U coordinates
  CheckReport checks;
};

// Throws CheckFailure when a structure constant or Gram entry leaves Q, or the
// compact basis constants are not integral.
RationalStructure chevalley_rational_structure(const MetricNilpotent& n);

bool is_closed(const MetricNilpotent& n, const Subalgebra& s);
// Split into U and G0 parts, [U*, U*] in G0*, Z(U*) in U* for Z in G0*.
// DomainError if s is not closed under the bracket or has a surd part.
bool is_totally_geodesic(const MetricNilpotent& n, const Subalgebra& s);
// {x in s : [x, s] = 0}
QSubspace subalgebra_center(const MetricNilpotent& n, const Subalgebra& s);
// True iff s has a basis in Q-span(L0) and rs passed its own checks.
bool rationality_check(const Subalgebra& s, const RationalStructure& rs);

struct GeodesicResult {
  Subalgebra sub;
  QSubspace center;
  bool totally_geodesic = false;
  bool rational = false;
  bool lambda_admissible = false;  // reported only; the construction needs 2 lam not a root
  CheckReport checks;
};

// U_lam + R H~_lam. DomainError if 2 lam is a root or U_lam = 0.
GeodesicResult build_weight_subalgebra(const MetricNilpotent& n, const RationalStructure& rs, const Weight& lam);

// span{u, H~_lam(u), H~_lam}. DomainError if 2 lam is a root, u = 0 or u is not in U_lam.
GeodesicResult build_heisenberg(const MetricNilpotent& n, const RationalStructure& rs, const Weight& lam,
                                const QVec& u);

struct QuaternionResult : GeodesicResult {
  std::vector<long> string;  // k with lam + k beta a weight
  QVec h_lam, tt_beta;       // compact coordinates
  Rational c;                // -beta(H_lam) / 2
  QVec xi;                   // H~_lam + c tt_beta, central in G_{lam,beta}
  QSubspace g_part;          // span{A_beta, B_beta, H~_lam, tt_beta}, compact coordinates
};

// U'_{lam,beta} + span{A_beta, B_beta, H~_lam, tt_beta} for a positive root beta.
// DomainError if 2 lam + p beta is a root for some p (the offending p is named),
// lam and beta are dependent, or no lam + k beta is a weight.
QuaternionResult build_quaternion_subalgebra(const MetricNilpotent& n, const RationalStructure& rs,
                                             const Weight& lam, const Root& beta);

}  // namespace lieq
