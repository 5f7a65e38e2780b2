// Admissible abstract weights: mu with 2 mu + p alpha never a root.
#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieq/rootsystem.hpp"

namespace lieq {

struct Witness {
  long p = 0;
  Root alpha;
  Root result;  // 2 mu + p alpha, a root
};

struct AdmissibilityVerdict {
  bool admissible = true;
  std::optional<Witness> witness;
};

// Roots in fundamental coordinates with a hash lookup and coroot pairings.
struct IVecHash {
  std::size_t operator()(const IVec& v) const;
};

class RootTable {
 public:
  explicit RootTable(const RootDatum& rd);
  const RootDatum& datum() const { return *rd_; }
  std::size_t size() const { return weights_.size(); }
  const Weight& weight(std::size_t k) const { return weights_[k]; }
  long pair(const Weight& mu, std::size_t k) const;  // <mu, alpha_k>
  // index of the root with these fundamental coordinates, or -1
  int find(const Weight& w) const;

 private:
  const RootDatum* rd_;
  std::vector<Weight> weights_;
  std::vector<std::vector<long>> coroot_;  // integer coefficients on the fundamental coordinates
  std::unordered_map<Weight, int, IVecHash> lookup_;
};

// Scans alpha in root order and p ascending over
// ceil((-3 - 2<mu,alpha>)/2) <= p <= floor((3 - 2<mu,alpha>)/2).
AdmissibilityVerdict is_admissible(const RootDatum& rd, const Weight& mu);
AdmissibilityVerdict is_admissible(const RootTable& t, const Weight& mu);
std::vector<Witness> all_witnesses(const RootTable& t, const Weight& mu);

// A parametric family from the published lists; `at(k)` gives the weight.
struct Family {
  std::string label;
  std::string source;  // "odd", "even" or "half" (2 mu a root)
  std::function<Weight(long)> at;
  bool parametric = true;
};

// Families for a simple type; DomainError for B2 (use C2) and semisimple data.
std::vector<Family> published_families(const RootDatum& rd);

struct ClassificationEntry {
  Weight dominant_mu;
  long p = 0;  // 2 mu = p alpha + beta
  Root alpha, beta;
  std::set<std::string> parities;  // over every witness in the window
  std::string family;  // first matching label, empty if none
  long k = 0;
  bool matched = false;
};

// Dominant mu with coordinates <= coeff_bound that are inadmissible, generated
// from mu = (beta - p alpha) / 2 over root pairs; each entry carries a verified
// witness and is matched against the families at |k| <= kmax.
std::vector<ClassificationEntry> enumerate_inadmissible(const RootDatum& rd, long coeff_bound, long kmax = 3);

struct FamilyComparison {
  std::set<Weight> enumerated;  // enumerate_inadmissible
  std::set<Weight> oracle;      // is_admissible over the whole box
  std::set<Weight> families;    // instantiated families, dominant, inside the box
  std::set<Weight> missing;     // inadmissible but in no family
  std::set<Weight> extra;       // family member that is admissible
  bool oracle_equal() const { return enumerated == oracle; }
  bool families_equal() const { return missing.empty() && extra.empty(); }
};

FamilyComparison compare_with_families(const RootDatum& rd, long coeff_bound, long kmax = 3);

struct FilterReport {
  bool passes = true;  // sum_i q_i C^{ij} <= (beta_max)_j for all j
  std::vector<int> failing_columns;
  std::vector<std::pair<int, int>> failing_terms;  // (i, j) with q_i C^{ij} > (beta_max)_j
  bool rider_ok = true;  // equality q_i C^{ij} = (beta_max)_j forces mu = q_i w_i
};

FilterReport filter_beta_max_bound(const RootDatum& rd, const Weight& mu);

// Nonzero dominant mu with 2 mu in the root lattice and 2 mu <= 2 beta_max.
std::vector<Weight> dominant_candidates(const RootDatum& rd);

struct TwoOmegaReport {
  std::vector<std::pair<Root, Root>> pairs;  // unordered, first <= second
  bool one_movable = true;   // each pair has a member W_i-conjugate to beta_max or beta_min
  bool both_movable = true;  // both members are
  bool partners_positive = true;  // 2 w_i - beta_max / beta_min is positive when a root
  std::vector<std::pair<Root, Root>> unmovable;  // pairs with a member that cannot be moved
};

// All root pairs with alpha + beta = 2 w_i (i zero-based); W_i is generated by
// the simple reflections other than i.
TwoOmegaReport decompose_two_omega(const RootDatum& rd, int i);

// The only alpha, beta with alpha + beta = 2 beta_max is beta_max twice (per factor).
bool double_highest_root_rigidity(const RootDatum& rd);

enum class Parity { Odd, Even, Half };
std::string parity_name(Parity p);

struct SemisimpleReport {
  bool found = false;  // false when no witness of this parity exists
  int which_case = 0;  // 1: alpha, beta in one factor; 2: two factors
  int factor_alpha = -1, factor_beta = -1;
  long p = 0;
  Root alpha, beta;  // 2 mu = p alpha + beta
  CheckReport conclusions;
};

// Finds the first witness of the given parity and checks the structural
// conclusions for products; DomainError for simple data.
SemisimpleReport semisimple_analysis(const RootDatum& rd, const Weight& mu, Parity parity);
// Same for a given equation 2 mu = p alpha + beta (verified first).
SemisimpleReport semisimple_analysis(const RootDatum& rd, const Weight& mu, long p, const Root& alpha,
                                     const Root& beta);

}  // namespace lieq
