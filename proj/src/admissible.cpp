#include "lieq/admissible.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lieq {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

void require_rank(const RootDatum& rd, const Weight& mu) {
  if (static_cast<int>(mu.size()) != rd.n)
    throw DomainError("weight " + ivec_str(mu) + " has rank " + std::to_string(mu.size()) + ", expected " +
                      std::to_string(rd.n));
}

void require_simple(const RootDatum& rd, const std::string& what) {
  if (!rd.is_simple()) throw DomainError(what + " needs a simple type, got " + rd.name());
}

Weight twice(const Weight& mu) { return add_vec(mu, mu); }

bool in_box(const Weight& w, long bound) {
  return std::all_of(w.begin(), w.end(), [&](long c) { return c >= 0 && c <= bound; });
}

// calls f on every weight of [0, bound]^n
template <class F>
void for_box(int n, long bound, F&& f) {
  Weight w(n, 0);
  for (;;) {
    f(w);
    int i = 0;
    while (i < n && w[i] == bound) w[i++] = 0;
    if (i == n) return;
    ++w[i];
  }
}

std::string parity_of(long p) {
  if (p == 0) return "half";
  return (p % 2 != 0) ? "odd" : "even";
}

Weight omega(int n, int i, long c = 1) {
  Weight w(n, 0);
  w[i] = c;
  return w;
}

// W_i-orbit of a root under the simple reflections other than i
std::set<Root> stabilizer_orbit(const RootDatum& rd, int i, const Root& r) {
  std::set<Root> seen{r};
  std::deque<Root> todo{r};
  while (!todo.empty()) {
    Root x = todo.front();
    todo.pop_front();
    for (int j = 0; j < rd.n; ++j) {
      if (j == i) continue;
      Root y = simple_reflect_root(rd, j, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

bool is_positive_root(const RootDatum& rd, const Root& r) {
  return rd.is_root(r) && rd.root_index(r) < static_cast<int>(rd.positive.size());
}

}  // namespace

std::size_t IVecHash::operator()(const IVec& v) const {
  std::size_t h = v.size();
  for (long x : v) h ^= std::hash<long>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---- the scan

RootTable::RootTable(const RootDatum& rd) : rd_(&rd) {
  for (std::size_t k = 0; k < rd.roots.size(); ++k) {
    const Root& a = rd.roots[k];
    weights_.push_back(rd.root_to_weight(a));
    lookup_.emplace(weights_.back(), static_cast<int>(k));
    const long s = rd.sq_len_half(a);
    std::vector<long> c(rd.n);
    for (int j = 0; j < rd.n; ++j) {
      require(a[j] * rd.d[j] % s == 0, "coroot not integral for " + ivec_str(a));
      c[j] = a[j] * rd.d[j] / s;
    }
    coroot_.push_back(std::move(c));
  }
}

long RootTable::pair(const Weight& mu, std::size_t k) const {
  long s = 0;
  for (std::size_t j = 0; j < mu.size(); ++j) s += mu[j] * coroot_[k][j];
  return s;
}

int RootTable::find(const Weight& w) const {
  auto it = lookup_.find(w);
  return it == lookup_.end() ? -1 : it->second;
}

namespace {

// f(witness) returns true to stop
template <class F>
void scan(const RootTable& t, const Weight& mu, F&& f) {
  const RootDatum& rd = t.datum();
  require_rank(rd, mu);
  const Weight m2 = twice(mu);
  Weight w(m2.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const long m = t.pair(mu, k);
    const Weight& a = t.weight(k);
    for (long p = ceil_div(-3 - 2 * m, 2); p <= floor_div(3 - 2 * m, 2); ++p) {
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = m2[j] + p * a[j];
      const int r = t.find(w);
      if (r < 0) continue;
      if (f(Witness{p, rd.roots[k], rd.roots[r]})) return;
    }
  }
}

}  // namespace

AdmissibilityVerdict is_admissible(const RootTable& t, const Weight& mu) {
  AdmissibilityVerdict v;
  scan(t, mu, [&](Witness w) {
    v.admissible = false;
    v.witness = std::move(w);
    return true;
  });
  return v;
}

AdmissibilityVerdict is_admissible(const RootDatum& rd, const Weight& mu) {
  return is_admissible(RootTable(rd), mu);
}

std::vector<Witness> all_witnesses(const RootTable& t, const Weight& mu) {
  std::vector<Witness> out;
  scan(t, mu, [&](Witness w) {
    out.push_back(std::move(w));
    return false;
  });
  return out;
}

// ---- families

std::vector<Family> published_families(const RootDatum& rd) {
  require_simple(rd, "family lists");
  const SimpleType t = rd.factors[0];
  const int n = rd.n;
  auto w = [n](int i) { return omega(n, i - 1); };
  auto alpha = [&rd](int j) { return rd.root_to_weight(rd.simple(j - 1)); };
  auto lin = [](Weight base, Weight step, long shift = 0) {
    // base + (k + shift) step
    return [base, step, shift](long k) { return add_vec(base, step, k + shift); };
  };
  const Weight zero(n, 0);
  std::vector<Family> f;
  auto odd = [&](std::string label, std::function<Weight(long)> at) { f.push_back({label, "odd", at}); };
  auto even = [&](std::string label, std::function<Weight(long)> at) { f.push_back({label, "even", at}); };
  auto half = [&](std::string label, Weight mu) {
    f.push_back({label, "half", [mu](long) { return mu; }, false});
  };

  switch (t.family) {
    case 'A': {
      const Weight bmax = rd.root_to_weight(rd.beta_max[0]);
      odd("(k+1)beta_max", lin(zero, bmax, 1));
      if (n == 3) odd("w2+k*beta_max", lin(w(2), bmax));
      if (n == 1) {
        even("2k+1", lin(w(1), omega(1, 0, 2)));
        half("1", w(1));
      }
      break;
    }
    case 'B':
      if (n < 3) throw DomainError("B2 is listed as C2");
      odd("(k+1)w2", lin(zero, w(2), 1));
      odd("(k+1)w1", lin(zero, w(1), 1));
      odd("w1+k*w2", lin(w(1), w(2)));
      if (n == 4) odd("w4+k*w2", lin(w(4), w(2)));
      if (n == 3) {
        odd("w3+k*w2", lin(w(3), w(2)));
        odd("w3+k*w1", lin(w(3), w(1)));
      }
      break;
    case 'C':
      odd("2(k+1)w1", lin(zero, omega(n, 0, 2), 1));
      odd("w1+k*w2", lin(w(1), w(2)));
      odd("(k+1)w2", lin(zero, w(2), 1));
      odd("w2+2k*w1", lin(w(2), omega(n, 0, 2)));
      even("w1+k*a1", lin(w(1), alpha(1)));
      even("w1+k*a2", lin(w(1), alpha(2)));
      if (n >= 3) even("w1+k*a" + std::to_string(n), lin(w(1), alpha(n)));
      even("(2k+1)w1", lin(w(1), omega(n, 0, 2)));
      half("w1", w(1));
      break;
    case 'D':
      odd("(k+1)w2", lin(zero, w(2), 1));
      odd("w1+k*w2", lin(w(1), w(2)));
      if (n == 4) {
        odd("w3+k*w2", lin(w(3), w(2)));
        odd("w4+k*w2", lin(w(4), w(2)));
      }
      break;
    case 'E': {
      const int j = n == 6 ? 2 : n == 7 ? 1 : 8;
      odd("(k+1)w" + std::to_string(j), lin(zero, w(j), 1));
      break;
    }
    case 'F':
      odd("(k+1)w1", lin(zero, w(1), 1));
      odd("(k+1)w4", lin(zero, w(4), 1));
      odd("w4+k*w1", lin(w(4), w(1)));
      break;
    case 'G':
      odd("(k+1)w2", lin(zero, w(2), 1));
      odd("(k+1)w1", lin(zero, w(1), 1));
      odd("w1+k*w2", lin(w(1), w(2)));
      break;
    default:
      throw DomainError("no family list for " + t.name());
  }
  return f;
}

namespace {

// dominant weight in the box -> first (label, k) producing it
std::map<Weight, std::pair<std::string, long>> family_members(const RootDatum& rd, long bound, long kmax) {
  std::map<Weight, std::pair<std::string, long>> out;
  for (const auto& fam : published_families(rd))
    for (long k = -kmax; k <= kmax; ++k) {
      const Weight d = dominant_representative(rd, fam.at(k)).first;
      if (in_box(d, bound)) out.emplace(d, std::make_pair(fam.label, k));
      if (!fam.parametric) break;
    }
  return out;
}

}  // namespace

std::vector<ClassificationEntry> enumerate_inadmissible(const RootDatum& rd, long coeff_bound, long kmax) {
  require_simple(rd, "enumerate_inadmissible");
  if (coeff_bound < 0) throw DomainError("negative coefficient bound");
  const RootTable t(rd);

  // mu = (beta - p alpha) / 2 for every root pair; p is cut to the box coordinate-wise
  std::set<Weight> found;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const Weight& wa = t.weight(a);
    for (std::size_t b = 0; b < t.size(); ++b) {
      const Weight& wb = t.weight(b);
      long lo = -(1L << 40), hi = 1L << 40;
      bool ok = true;
      for (int j = 0; j < rd.n && ok; ++j) {
        // 0 <= wb_j - p wa_j <= 2 bound
        if (wa[j] == 0) {
          ok = wb[j] >= 0 && wb[j] <= 2 * coeff_bound;
        } else if (wa[j] > 0) {
          lo = std::max(lo, ceil_div(wb[j] - 2 * coeff_bound, wa[j]));
          hi = std::min(hi, floor_div(wb[j], wa[j]));
        } else {
          lo = std::max(lo, ceil_div(wb[j], wa[j]));
          hi = std::min(hi, floor_div(wb[j] - 2 * coeff_bound, wa[j]));
        }
      }
      if (!ok) continue;
      for (long p = lo; p <= hi; ++p) {
        Weight m2 = add_vec(wb, wa, -p);
        if (std::any_of(m2.begin(), m2.end(), [](long c) { return c % 2 != 0; })) continue;
        for (auto& c : m2) c /= 2;
        found.insert(m2);
      }
    }
  }

  const auto members = family_members(rd, coeff_bound, kmax);
  std::vector<ClassificationEntry> out;
  for (const auto& mu : found) {
    ClassificationEntry e;
    e.dominant_mu = mu;
    const auto ws = all_witnesses(t, mu);
    require(!ws.empty(), "generated weight " + ivec_str(mu) + " has no witness in the window");
    const Witness& w = ws.front();
    e.p = -w.p;
    e.alpha = w.alpha;
    e.beta = w.result;
    require(twice(mu) == add_vec(rd.root_to_weight(e.beta), rd.root_to_weight(e.alpha), e.p),
            "2 mu != p alpha + beta at " + ivec_str(mu));
    for (const auto& x : ws) e.parities.insert(parity_of(x.p));
    auto it = members.find(mu);
    if (it != members.end()) {
      e.matched = true;
      e.family = it->second.first;
      e.k = it->second.second;
    }
    out.push_back(std::move(e));
  }
  return out;
}

FamilyComparison compare_with_families(const RootDatum& rd, long coeff_bound, long kmax) {
  FamilyComparison c;
  for (const auto& e : enumerate_inadmissible(rd, coeff_bound, kmax)) c.enumerated.insert(e.dominant_mu);
  const RootTable t(rd);
  for_box(rd.n, coeff_bound, [&](const Weight& mu) {
    if (!is_admissible(t, mu).admissible) c.oracle.insert(mu);
  });
  for (const auto& [mu, lk] : family_members(rd, coeff_bound, kmax)) c.families.insert(mu);
  std::set_difference(c.oracle.begin(), c.oracle.end(), c.families.begin(), c.families.end(),
                      std::inserter(c.missing, c.missing.end()));
  std::set_difference(c.families.begin(), c.families.end(), c.oracle.begin(), c.oracle.end(),
                      std::inserter(c.extra, c.extra.end()));
  return c;
}

// ---- bounds below the highest root

FilterReport filter_beta_max_bound(const RootDatum& rd, const Weight& mu) {
  require_simple(rd, "filter_beta_max_bound");
  require_rank(rd, mu);
  if (!is_dominant(mu)) throw DomainError("weight is not dominant: " + ivec_str(mu));
  const Root& bmax = rd.beta_max[0];
  FilterReport r;
  std::vector<std::pair<int, int>> equal_terms;
  for (int j = 0; j < rd.n; ++j) {
    Rational col = 0;
    for (int i = 0; i < rd.n; ++i) {
      const Rational term = Rational(mu[i]) * rd.inverse_cartan(i, j);
      col += term;
      if (term > bmax[j]) r.failing_terms.push_back({i, j});
      if (mu[i] != 0 && term == bmax[j]) equal_terms.push_back({i, j});
    }
    if (col > bmax[j]) r.failing_columns.push_back(j);
  }
  r.passes = r.failing_columns.empty();
  // the rider is a consequence of the column bound, so it is only checked when that holds
  if (r.passes)
    for (const auto& [i, j] : equal_terms) {
      (void)j;
      if (mu != omega(rd.n, i, mu[i])) r.rider_ok = false;
    }
  return r;
}

std::vector<Weight> dominant_candidates(const RootDatum& rd) {
  require_simple(rd, "dominant_candidates");
  const Root& bmax = rd.beta_max[0];
  Weight cap(rd.n);
  for (int i = 0; i < rd.n; ++i) {
    Rational m = -1;
    for (int j = 0; j < rd.n; ++j) {
      const Rational q = Rational(bmax[j]) / rd.inverse_cartan(i, j);
      if (m < 0 || q < m) m = q;
    }
    const mpz_class f = m.get_num() / m.get_den();
    cap[i] = f.get_si();
  }
  std::vector<Weight> out;
  Weight w(rd.n, 0);
  for (;;) {
    if (!is_zero_ivec(w)) {
      const Weight w2 = twice(w);
      if (rd.weight_is_root_lattice(w2)) {
        const QVec rc = rd.weight_to_root_coords(w);
        bool below = true;
        for (int j = 0; j < rd.n; ++j) below = below && rc[j] <= bmax[j];
        if (below) out.push_back(w);
      }
    }
    int i = 0;
    while (i < rd.n && w[i] == cap[i]) w[i++] = 0;
    if (i == rd.n) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwoOmegaReport decompose_two_omega(const RootDatum& rd, int i) {
  require_simple(rd, "decompose_two_omega");
  if (i < 0 || i >= rd.n) throw DomainError("fundamental weight index out of range");
  const Weight target = omega(rd.n, i, 2);
  const RootTable t(rd);
  TwoOmegaReport r;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const int b = t.find(add_vec(target, t.weight(a), -1));
    if (b < 0 || b < static_cast<int>(a)) continue;
    Root x = rd.roots[a], y = rd.roots[b];
    if (y < x) std::swap(x, y);
    r.pairs.push_back({x, y});
  }
  std::sort(r.pairs.begin(), r.pairs.end());
  if (r.pairs.empty()) return r;

  const Root& bmax = rd.beta_max[0];
  const Root& bmin = rd.beta_min[0];
  const Root two_omega_root = rd.weight_to_root(target);
  auto partner_positive = [&](const Root& top) { return is_positive_root(rd, add_vec(two_omega_root, top, -1)); };
  // some w in W_i takes x to beta_max or beta_min with the partner landing in the positive roots
  auto movable = [&](const Root& x) {
    const std::set<Root> orb = stabilizer_orbit(rd, i, x);
    return (orb.count(bmax) && partner_positive(bmax)) || (orb.count(bmin) && partner_positive(bmin));
  };
  for (const auto& [x, y] : r.pairs) {
    const bool mx = movable(x), my = movable(y);
    if (!mx && !my) r.one_movable = false;
    if (!mx || !my) {
      r.both_movable = false;
      r.unmovable.push_back({x, y});
    }
    for (const Root* top : {&bmax, &bmin})
      for (const Root* other : {&x, &y})
        if (*other == *top) r.partners_positive = r.partners_positive && partner_positive(*top);
  }
  return r;
}

bool double_highest_root_rigidity(const RootDatum& rd) {
  for (const Root& bm : rd.beta_max) {
    const Root target = add_vec(bm, bm);
    for (const Root& a : rd.roots) {
      const Root b = add_vec(target, a, -1);
      if (rd.is_root(b) && (a != bm || b != bm)) return false;
    }
  }
  return true;
}

// ---- products

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Half: return "half";
  }
  return "?";
}

namespace {

int factor_of_root(const RootDatum& rd, const Root& r) {
  int f = -1;
  for (int j = 0; j < rd.n; ++j)
    if (r[j] != 0) {
      const int g = rd.factor_of(j);
      if (f >= 0 && g != f) return -1;
      f = g;
    }
  return f;
}

bool is_c_type(const SimpleType& t) { return t.family == 'C' && t.rank >= 2; }
bool is_a1(const SimpleType& t) { return t.family == 'A' && t.rank == 1; }

Weight fundamental_local(const SimpleType& t, int i) { return omega(t.rank, i); }

// w in the factor Weyl group with w(r) = target, as a word of local simple reflections
std::optional<std::vector<int>> word_to(const RootDatum& local, const Root& r, const Root& target) {
  std::map<Root, std::vector<int>> seen{{r, {}}};
  std::deque<Root> todo{r};
  while (!todo.empty()) {
    Root x = todo.front();
    todo.pop_front();
    if (x == target) return seen[x];
    for (int j = 0; j < local.n; ++j) {
      Root y = simple_reflect_root(local, j, x);
      if (seen.count(y)) continue;
      auto w = seen[x];
      w.push_back(j);
      seen.emplace(y, std::move(w));
      todo.push_back(y);
    }
  }
  return std::nullopt;
}

Root root_part(const RootDatum& rd, int f, const Root& r) {
  const int n = rd.factors[f].rank;
  return Root(r.begin() + rd.offset[f], r.begin() + rd.offset[f] + n);
}

}  // namespace

SemisimpleReport semisimple_analysis(const RootDatum& rd, const Weight& mu, long p, const Root& alpha,
                                     const Root& beta) {
  if (rd.is_simple()) throw DomainError("semisimple_analysis needs at least two simple factors");
  require_rank(rd, mu);
  if (!rd.is_root(alpha) || !rd.is_root(beta)) throw DomainError("alpha and beta must be roots");
  if (twice(mu) != add_vec(rd.root_to_weight(beta), rd.root_to_weight(alpha), p))
    throw DomainError("2 mu != p alpha + beta for mu " + ivec_str(mu));

  SemisimpleReport r;
  r.found = true;
  r.p = p;
  r.alpha = alpha;
  r.beta = beta;
  CheckReport& c = r.conclusions;
  const int nf = static_cast<int>(rd.factors.size());
  r.factor_beta = factor_of_root(rd, beta);
  r.factor_alpha = p == 0 ? -1 : factor_of_root(rd, alpha);
  const int fi = r.factor_alpha, fj = r.factor_beta;
  auto proj = [&](int f) { return factor_projection(rd, f, mu); };
  const std::string at = " at mu " + ivec_str(mu) + ", p " + std::to_string(p);

  if (p == 0) {
    // 2 mu is a root: mu lives in one factor of type A1 (mu = +-1) or Cn (conjugate to w1)
    r.which_case = 1;
    for (int f = 0; f < nf; ++f)
      if (f != fj) c.check(is_zero_ivec(proj(f)), "mu has a component off the factor of beta" + at);
    const SimpleType& t = rd.factors[fj];
    const Weight m = proj(fj);
    if (is_a1(t))
      c.check(m == Weight{1} || m == Weight{-1}, "A1 component is not +-1" + at);
    else if (is_c_type(t))
      c.check(dominant_representative(build_root_system(t), m).first == fundamental_local(t, 0),
              "Cn component is not conjugate to w1" + at);
    else
      c.check(false, "factor of 2 mu is " + t.name() + ", not A1 or Cn" + at);
    return r;
  }

  if (fi == fj) {
    r.which_case = 1;
    for (int f = 0; f < nf; ++f)
      if (f != fi) c.check(is_zero_ivec(proj(f)), "mu has a component off the factor of alpha, beta" + at);
    const RootDatum local = build_root_system(rd.factors[fi]);
    c.check(!is_admissible(local, proj(fi)).admissible, "factor component is admissible in its simple factor" + at);
    return r;
  }

  r.which_case = 2;
  for (int f = 0; f < nf; ++f)
    if (f != fi && f != fj) c.check(is_zero_ivec(proj(f)), "mu has a component off the two factors" + at);

  const SimpleType& ti = rd.factors[fi];
  const SimpleType& tj = rd.factors[fj];
  const RootDatum li = build_root_system(ti);
  const Weight mi = proj(fi), mj = proj(fj);
  const Root ai = root_part(rd, fi, alpha);

  if (p % 2 != 0) {
    // p = 2k + 1
    const long k = floor_div(p - 1, 2);
    c.check(is_c_type(ti), "factor of alpha is " + ti.name() + ", not Cn" + at);
    if (is_c_type(ti)) {
      auto word = word_to(li, ai, li.beta_max[0]);
      c.check(word.has_value(), "alpha is not conjugate to beta_max" + at);
      if (word)
        c.check(apply_word(li, *word, mi) == omega(ti.rank, 0, p),
                "w(p_i(mu)) != (2k+1) w1 for the w with w(alpha) = beta_max" + at);
    }
    if (is_a1(tj))
      c.check(mj == Weight{2 * k + 1} || mj == Weight{2 * k - 1}, "A1 component is not 2k+1 or 2k-1" + at);
    else if (is_c_type(tj))
      c.check(dominant_representative(build_root_system(tj), mj).first == fundamental_local(tj, 0),
              "Cn component of beta's factor is not conjugate to w1" + at);
    else
      c.check(false, "factor of beta is " + tj.name() + ", not A1 or Cn" + at);
  } else {
    // p = 2k, k != 0
    const long k = p / 2;
    c.check(mi == add_vec(Weight(ti.rank, 0), li.root_to_weight(ai), k), "p_i(mu) != k alpha" + at);
    if (is_a1(tj))
      c.check(mj == Weight{1} || mj == Weight{-1}, "A1 component is not +-1" + at);
    else if (is_c_type(tj))
      c.check(dominant_representative(build_root_system(tj), mj).first == fundamental_local(tj, 0),
              "Cn component of beta's factor is not conjugate to w1" + at);
    else
      c.check(false, "factor of beta is " + tj.name() + ", not A1 or Cn" + at);
  }
  return r;
}

SemisimpleReport semisimple_analysis(const RootDatum& rd, const Weight& mu, Parity parity) {
  if (rd.is_simple()) throw DomainError("semisimple_analysis needs at least two simple factors");
  const RootTable t(rd);
  for (const auto& w : all_witnesses(t, mu)) {
    const long p = -w.p;
    if (parity_of(p) != parity_name(parity)) continue;
    return semisimple_analysis(rd, mu, p, w.alpha, w.result);
  }
  return SemisimpleReport{};
}

}  // namespace lieq
