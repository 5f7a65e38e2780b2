// Root systems of types A-G and their direct sums.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/exactq.hpp"

namespace lieq {

using IVec = std::vector<long>;
using Root = IVec;    // coordinates on the simple roots
using Weight = IVec;  // coordinates on the fundamental weights

struct SimpleType {
  char family = 'A';
  int rank = 1;
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// Throws DomainError on an unsupported family/rank.
void validate_type(const SimpleType& t);

struct RootDatum {
  std::vector<SimpleType> factors;
  std::vector<int> offset;  // first simple index of each factor
  int n = 0;
  std::vector<std::vector<long>> cartan;  // C[i][j] = <alpha_i, alpha_j>
  QMatrix inverse_cartan;
  std::vector<long> d;  // (alpha_i, alpha_i) / 2, short roots have d = 1
  std::vector<Root> positive;  // by height, then lexicographically descending
  std::vector<Root> roots;     // positive roots, then their negatives in the same order
  std::vector<Root> beta_max;  // per factor, embedded in the full coordinates
  std::vector<Root> beta_min;
  std::map<Root, int> index;  // root -> position in `roots`

  bool is_simple() const { return factors.size() == 1; }
  std::string name() const;
  bool is_root(const Root& r) const { return index.count(r) > 0; }
  int root_index(const Root& r) const;
  int factor_of(int simple_index) const;

  // (a, b) for a, b in simple-root coordinates
  Rational inner(const Root& a, const Root& b) const;
  long sq_len_half(const Root& a) const;  // (a, a) / 2
  Weight root_to_weight(const Root& a) const;  // a^T C
  // weight -> simple-root coordinates (rational in general)
  QVec weight_to_root_coords(const Weight& w) const;
  // exact inverse of root_to_weight when the result is integral
  bool weight_is_root_lattice(const Weight& w) const;
  Root weight_to_root(const Weight& w) const;
  long height(const Root& a) const;
  Weight fundamental(int i) const;
  Root simple(int i) const;
};

RootDatum build_root_system(const std::vector<SimpleType>& types);
RootDatum build_root_system(const SimpleType& t);

// <lam, alpha> = lam(tau_alpha). Throws DomainError if alpha is not a root.
long pairing(const RootDatum& rd, const Weight& lam, const Root& alpha);
long pairing_roots(const RootDatum& rd, const Root& beta, const Root& alpha);

Weight reflect(const RootDatum& rd, const Root& alpha, const Weight& lam);
Root reflect_root(const RootDatum& rd, const Root& alpha, const Root& beta);
Weight simple_reflect(const RootDatum& rd, int j, const Weight& lam);
Root simple_reflect_root(const RootDatum& rd, int j, const Root& beta);

std::set<Weight> weyl_orbit(const RootDatum& rd, const Weight& lam);
bool is_dominant(const Weight& lam);

// Dominant element of the orbit of lam, and the simple reflections that reach it:
// applying word[0], then word[1], ... to lam yields the dominant weight.
std::pair<Weight, std::vector<int>> dominant_representative(const RootDatum& rd,
                                                            const Weight& lam);
Weight apply_word(const RootDatum& rd, const std::vector<int>& word, const Weight& lam);
Root apply_word_root(const RootDatum& rd, const std::vector<int>& word, const Root& beta);

struct StringLengths {
  long j = 0;  // steps down: lam - j beta
  long k = 0;  // steps up: lam + k beta
};

// Largest j, k with lam - j beta and lam + k beta in weights; verifies that the
// string is unbroken and that <lam, beta> = j - k.
StringLengths root_string(const RootDatum& rd, const Weight& lam, const Root& beta,
                          const std::set<Weight>& weights);

// Fundamental-weight coordinates of lam on factor i.
Weight factor_projection(const RootDatum& rd, int i, const Weight& lam);
Weight embed_factor(const RootDatum& rd, int i, const Weight& part);

// Lambda^+ selection: first nonzero coordinate positive.
bool in_positive_half(const Weight& lam);

IVec negate(IVec v);
IVec add_vec(const IVec& a, const IVec& b, long s = 1);
bool is_zero_ivec(const IVec& v);
std::string ivec_str(const IVec& v);

}  // namespace lieq
