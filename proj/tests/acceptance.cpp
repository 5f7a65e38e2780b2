// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lieq/admissible.hpp"
#include "lieq/geodesic.hpp"

using namespace lieq;

namespace {

RootDatum rs(char f, int n) { return build_root_system(SimpleType{f, n}); }

std::vector<SimpleType> types_up_to_rank_8() {
  std::vector<SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

Weight fw(int n, std::vector<std::pair<int, long>> terms) {
  Weight w(n, 0);
  for (auto [i, c] : terms) w[i - 1] += c;
  return w;
}

struct Criterion {
  std::vector<std::string> notes;
  bool pass = true;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void note(const std::string& s) {
    if (std::find(notes.begin(), notes.end(), s) == notes.end()) notes.push_back(s);
  }
};

std::string first(const CheckReport& r) { return r.failures.empty() ? "" : r.failures.front(); }

std::string str(const IVec& v) { return ivec_str(v); }

// ---- 1: highest roots against the published table

struct HighRoots {
  Root max_root, min_root;
  Weight max_w, min_w;
};

// Table entries; A1 and B2 lie outside the table's stated ranges.
std::optional<HighRoots> published_high_roots(const SimpleType& t) {
  const int n = t.rank;
  auto ones = [&](int from, int to, long c) {
    Root r(n, 0);
    for (int i = from; i <= to; ++i) r[i - 1] = c;
    return r;
  };
  switch (t.family) {
    case 'A': {
      if (n < 2) return std::nullopt;
      const Root r = ones(1, n, 1);
      const Weight w = fw(n, {{1, 1}, {n, 1}});
      return HighRoots{r, r, w, w};
    }
    case 'B': {
      if (n < 3) return std::nullopt;
      Root hi = ones(2, n, 2);
      hi[0] = 1;
      return HighRoots{hi, ones(1, n, 1), fw(n, {{2, 1}}), fw(n, {{1, 1}})};
    }
    case 'C': {
      Root hi = ones(1, n - 1, 2), lo = ones(2, n - 1, 2);
      hi[n - 1] = 1;
      lo[0] = 1;
      lo[n - 1] = 1;
      return HighRoots{hi, lo, fw(n, {{1, 2}}), fw(n, {{2, 1}})};
    }
    case 'D': {
      Root r = ones(2, n - 2, 2);
      r[0] = r[n - 2] = r[n - 1] = 1;
      return HighRoots{r, r, fw(n, {{2, 1}}), fw(n, {{2, 1}})};
    }
    case 'E': {
      if (n == 6) return HighRoots{{1, 2, 2, 3, 2, 1}, {1, 2, 2, 3, 2, 1}, fw(6, {{2, 1}}), fw(6, {{2, 1}})};
      if (n == 7)
        return HighRoots{{2, 2, 3, 4, 3, 2, 1}, {2, 2, 3, 4, 3, 2, 1}, fw(7, {{1, 1}}), fw(7, {{1, 1}})};
      return HighRoots{{2, 3, 4, 6, 5, 4, 3, 2}, {2, 3, 4, 6, 5, 4, 3, 2}, fw(8, {{8, 1}}), fw(8, {{8, 1}})};
    }
    case 'F':
      return HighRoots{{2, 3, 4, 2}, {1, 2, 3, 2}, fw(4, {{1, 1}}), fw(4, {{4, 1}})};
    case 'G':
      return HighRoots{{3, 2}, {2, 1}, fw(2, {{2, 1}}), fw(2, {{1, 1}})};
  }
  return std::nullopt;
}

Criterion highest_roots() {
  Criterion c;
  for (const auto& t : types_up_to_rank_8()) {
    const RootDatum rd = rs(t.family, t.rank);
    const Root& hi = rd.beta_max[0];
    const Root& lo = rd.beta_min[0];
    if (auto p = published_high_roots(t)) {
      c.expect(hi == p->max_root && rd.root_to_weight(hi) == p->max_w, t.name() + ": beta_max " + str(hi));
      c.expect(lo == p->min_root && rd.root_to_weight(lo) == p->min_w, t.name() + ": beta_min " + str(lo));
      continue;
    }
    // outside the table: the dominant roots, the long one of maximal height
    std::vector<Root> dom;
    for (const auto& r : rd.positive)
      if (is_dominant(rd.root_to_weight(r))) dom.push_back(r);
    c.expect(!dom.empty() && dom.size() <= 2, t.name() + ": " + std::to_string(dom.size()) + " dominant roots");
    c.expect(std::find(dom.begin(), dom.end(), hi) != dom.end() &&
                 std::find(dom.begin(), dom.end(), lo) != dom.end(),
             t.name() + ": highest roots are not dominant");
    for (const auto& r : rd.positive) c.expect(rd.height(r) <= rd.height(hi), t.name() + ": beta_max not highest");
    c.note(t.name() + " (outside the table): beta_max " + str(hi) + ", beta_min " + str(lo));
  }
  return c;
}

// ---- 2: positive root counts

Criterion root_counts() {
  Criterion c;
  for (const auto& t : types_up_to_rank_8()) {
    const long n = t.rank;
    long expect = 0;
    switch (t.family) {
      case 'A': expect = n * (n + 1) / 2; break;
      case 'B':
      case 'C': expect = n * n; break;
      case 'D': expect = n * (n - 1); break;
      case 'E': expect = n == 6 ? 36 : n == 7 ? 63 : 120; break;
      case 'F': expect = 24; break;
      case 'G': expect = 6; break;
    }
    const RootDatum rd = rs(t.family, t.rank);
    c.expect(static_cast<long>(rd.positive.size()) == expect,
             t.name() + ": " + std::to_string(rd.positive.size()) + " positive roots, expected " + std::to_string(expect));
  }
  return c;
}

// ---- 3: integrality and Jacobi

Criterion chevalley_integrality() {
  Criterion c;
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    const std::string name = std::string(1, f) + std::to_string(n);
    try {
      const ChevalleyData cd = build_chevalley(rs(f, n));
      const CompactBasis cb = build_compact_basis(cd);
      c.expect(count_jacobi_failures(cd) == 0, name + ": Jacobi fails on the Chevalley basis");
      c.expect(count_jacobi_failures(cb) == 0, name + ": Jacobi fails on the compact basis");
      bool integral = true;
      for (const auto& row : cb.table)
        for (const auto& entry : row)
          for (const auto& [k, x] : entry) integral = integral && x.get_den() == 1;
      c.expect(integral, name + ": compact structure constants not integral");
      // Chevalley constants are stored as integers; also check the bracket table against N
      for (int a = 0; a < cd.nroots; ++a)
        for (int b = 0; b < cd.nroots; ++b)
          if (cd.sum(a, b) >= 0) c.expect(cd.N(a, b) != 0, name + ": N_{r,s} = 0 with r + s a root");
    } catch (const CheckFailure& e) {
      c.fail(name + ": " + e.what());
    }
  }
  return c;
}

// ---- 4: inadmissible weights against the published families

Criterion classification() {
  Criterion c;
  const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 3}, {'B', 4},
                                                {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6},
                                                {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (auto [f, n] : types) {
    const RootDatum rd = rs(f, n);
    const FamilyComparison cmp = compare_with_families(rd, 3, 3);
    const std::string name = rd.name();
    c.expect(cmp.oracle_equal(), name + ": enumeration differs from the per-weight oracle");
    std::string miss, extra;
    for (const auto& w : cmp.missing) miss += " " + str(w);
    for (const auto& w : cmp.extra) extra += " " + str(w);
    c.expect(cmp.missing.empty(), name + ": inadmissible but in no family:" + miss);
    c.expect(cmp.extra.empty(), name + ": family member is admissible:" + extra);
  }
  return c;
}

// ---- 5: candidate lists, 2 w_i decompositions, rigidity

std::vector<Weight> published_candidates(const SimpleType& t) {
  const int n = t.rank;
  std::vector<Weight> out;
  switch (t.family) {
    case 'A':
      out.push_back(fw(n, {{1, 1}, {n, 1}}));
      if (n == 3) out.push_back(fw(n, {{2, 1}}));
      break;
    case 'B':
      out = {fw(n, {{2, 1}}), fw(n, {{1, 1}})};
      if (n == 3 || n == 4) out.push_back(fw(n, {{n, 1}}));
      break;
    case 'C':
      out = {fw(n, {{1, 1}}), fw(n, {{1, 2}}), fw(n, {{2, 1}})};
      break;
    case 'D':
      out = {fw(n, {{1, 1}}), fw(n, {{2, 1}})};
      if (n == 4) {
        out.push_back(fw(n, {{3, 1}}));
        out.push_back(fw(n, {{4, 1}}));
      }
      break;
    case 'E':
      out.push_back(fw(n, {{n == 6 ? 2 : n == 7 ? 1 : 8, 1}}));
      break;
    case 'F':
      out = {fw(4, {{1, 1}}), fw(4, {{4, 1}})};
      break;
    case 'G':
      out = {fw(2, {{2, 1}}), fw(2, {{1, 1}})};
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Decomposition {
  int i;  // 1-based fundamental weight
  std::string a, b;  // "max", "min" or simple-root coordinates
  Root other;
};

// 2 w_i = alpha + beta witnesses listed for each type.
std::vector<Decomposition> published_decompositions(const SimpleType& t) {
  const int n = t.rank;
  auto root = [&](std::vector<std::pair<int, long>> terms) {
    Root r(n, 0);
    for (auto [i, c] : terms) r[i - 1] = c;
    return r;
  };
  std::vector<Decomposition> out;
  switch (t.family) {
    case 'A':
      if (n == 3) out.push_back({2, "max", "", root({{2, 1}})});
      break;
    case 'B':
      out.push_back({2, "max", "max", {}});
      out.push_back({1, "min", "min", {}});
      out.push_back({1, "max", "", root({{1, 1}})});
      if (n == 4) out.push_back({4, "max", "", root({{3, 1}, {4, 2}})});
      if (n == 3) {
        out.push_back({3, "max", "", root({{3, 1}})});
        out.push_back({3, "min", "", root({{2, 1}, {3, 2}})});
      }
      break;
    case 'C': {
      out.push_back({1, "min", "", root({{1, 1}})});
      out.push_back({2, "min", "min", {}});
      Root r(n, 2);
      r[0] = 0;
      r[n - 1] = 1;
      out.push_back({2, "max", "", r});
      break;
    }
    case 'D':
      out.push_back({1, "max", "", root({{1, 1}})});
      out.push_back({2, "max", "max", {}});
      if (n == 4) {
        out.push_back({3, "max", "", root({{3, 1}})});
        out.push_back({4, "max", "", root({{4, 1}})});
      }
      break;
    case 'E':
      out.push_back({n == 6 ? 2 : n == 7 ? 1 : 8, "max", "max", {}});
      break;
    case 'F':
      out.push_back({1, "max", "max", {}});
      out.push_back({4, "min", "min", {}});
      out.push_back({4, "max", "", root({{2, 1}, {3, 2}, {4, 2}})});
      break;
    case 'G':
      out.push_back({2, "max", "max", {}});
      out.push_back({1, "min", "min", {}});
      out.push_back({1, "max", "", root({{1, 1}})});
      break;
  }
  return out;
}

Criterion candidates_and_decompositions() {
  Criterion c;
  for (const auto& t : types_up_to_rank_8()) {
    if ((t.family == 'A' && t.rank < 2) || (t.family == 'B' && t.rank < 3)) continue;  // not in the lists
    const RootDatum rd = rs(t.family, t.rank);
    const std::vector<Weight> got = dominant_candidates(rd), want = published_candidates(t);
    if (got != want) {
      std::string g;
      for (const auto& w : got) g += " " + str(w);
      c.fail(t.name() + ": candidates" + g);
    }
    for (const auto& d : published_decompositions(t)) {
      auto pick = [&](const std::string& s) { return s == "max" ? rd.beta_max[0] : s == "min" ? rd.beta_min[0] : Root{}; };
      Root a = pick(d.a), b = d.b.empty() ? d.other : pick(d.b);
      c.expect(add_vec(rd.root_to_weight(a), rd.root_to_weight(b)) == fw(rd.n, {{d.i, 2}}),
               t.name() + ": listed witness does not sum to 2 w" + std::to_string(d.i));
      if (b < a) std::swap(a, b);
      const TwoOmegaReport r = decompose_two_omega(rd, d.i - 1);
      c.expect(std::find(r.pairs.begin(), r.pairs.end(), std::make_pair(a, b)) != r.pairs.end(),
               t.name() + ": 2 w" + std::to_string(d.i) + " = " + str(a) + " + " + str(b) + " not found");
      c.expect(r.one_movable && r.partners_positive, t.name() + ": orbit statement fails at w" + std::to_string(d.i));
      if (!r.both_movable) c.note(t.name() + ": at w" + std::to_string(d.i) + " only one member of some pair moves to the top");
    }
    c.expect(double_highest_root_rigidity(rd), t.name() + ": 2 beta_max has another decomposition");
  }
  return c;
}

// ---- 6: Weyl operators

Criterion weyl_operators() {
  Criterion c;
  const std::vector<std::pair<SimpleType, ModuleKind>> mods{
      {{'A', 1}, ModuleKind::Natural}, {{'A', 2}, ModuleKind::Adjoint}, {{'C', 2}, ModuleKind::Natural}};
  for (const auto& [t, kind] : mods) {
    const std::string name = t.name() + " " + kind_name(kind);
    try {
      const RootDatum rd = rs(t.family, t.rank);
      const ComplexModule m = build_module(rd, kind);
      const RealModule u = realify(m);
      std::vector<Root> longer;
      for (int k = 0; k < 2 * rd.n; ++k) longer.push_back(rd.simple(k % rd.n));
      for (const auto& r : rd.positive) {
        weyl_operator(m, {r});
        weyl_operator(u, {r});
      }
      weyl_operator(m, longer);
      weyl_operator(u, longer);
      const CheckReport aut = verify_aut_der(build_nilalg(u));
      c.expect(aut.ok(), name + ": " + first(aut));
    } catch (const CheckFailure& e) {
      c.fail(name + ": " + e.what());
    }
  }
  const GMatrix t = weyl_operator(build_module(rs('A', 1), ModuleKind::Natural), {{1}}).matrix;
  GMatrix expect(2, 2);
  expect(0, 1) = 1;
  expect(1, 0) = -1;
  c.expect(t == expect, "A1 natural: T_alpha != [[0,1],[-1,0]]");
  return c;
}

// ---- 7: bracket propositions

Criterion bracket_propositions() {
  Criterion c;
  const std::vector<std::pair<SimpleType, ModuleKind>> mods{{{'A', 2}, ModuleKind::Adjoint},
                                                            {{'B', 3}, ModuleKind::Natural}};
  for (const auto& [t, kind] : mods) {
    const std::string name = t.name() + " " + kind_name(kind);
    const RootDatum rd = rs(t.family, t.rank);
    const MetricNilpotent n = build_nilalg(realify(build_module(rd, kind)));
    auto guard = [&](const std::string& what, const std::function<void()>& fn) {
      try {
        fn();
      } catch (const CheckFailure& e) {
        c.fail(name + ": " + what + ": " + e.what());
      } catch (const DomainError& e) {
        c.fail(name + ": " + what + ": " + e.what());
      }
    };
    guard("bracket relations", [&] {
      const CheckReport r = verify_bracket_relations(n);
      c.expect(r.ok(), name + ": " + first(r));
    });
    guard("ad range", [&] {
      QVec sum(n.du, Rational(0));
      for (int i = 0; i < n.du; ++i) {
        QVec e(n.du, Rational(0));
        e[i] = 1;
        ad_range(n, e);
        sum[i] = i + 1;
      }
      ad_range(n, sum);
    });
    long tested = 0;
    for (const auto& lam : n.u.positive_weights()) {
      if (!root_equation_free(rd, lam)) continue;
      guard("ad range of a weight vector", [&] {
        QVec x(n.du, Rational(0));
        long k = 1;
        for (const auto& b : n.u.u_weight(lam).basis) x = add(x, b, Rational(k++));
        const WeightRange w = ad_range_weight(n, lam, x);
        ++tested;
        c.expect(w.generic, name + ": weight vector at " + str(lam) + " is not generic");
        c.expect(w.equal, name + ": ad u_lam(U) has dim " + std::to_string(w.image.dim()) + ", predicted " +
                              std::to_string(w.predicted.dim()) + " at lam " + str(lam));
      });
    }
    c.note(name + ": " + std::to_string(tested) + " weights satisfy the root-equation condition");
    guard("module properties", [&] {
      const PropertyReport p = verify_module_properties(n.u);
      std::string pairs;
      for (const auto& [b, l] : p.failing_pairs) pairs += " (beta " + str(b) + ", lam " + str(l) + ")";
      c.expect(p.ok(), name + ": " + std::to_string(p.failures.size()) + " property failures at" + pairs);
    });
    guard("zero-weight interplay", [&] {
      const InterplayReport r = verify_zero_weight_interplay(n);
      c.expect(r.ok(), name + ": " + first(r));
    });
    for (const auto& lam : n.u.positive_weights())
      for (const auto& beta : rd.positive) {
        const bool plus = n.u.vc.has_weight(add_vec(lam, rd.root_to_weight(beta)));
        const bool minus = n.u.vc.has_weight(add_vec(lam, rd.root_to_weight(beta), -1));
        if (!plus && !minus) continue;
        guard("nonsingular subspace (beta " + str(beta) + ", lam " + str(lam) + ")", [&] {
          nonsingular_subspace(n.u, beta, lam);
          ab_kernel(n.u, beta, lam);
        });
      }
  }
  return c;
}

// ---- 8: geodesic constructions

Criterion geodesic_constructions() {
  Criterion c;
  const MetricNilpotent n = build_nilalg(realify(build_module(rs('B', 3), ModuleKind::Natural)));
  const RationalStructure q = chevalley_rational_structure(n);
  c.expect(q.checks.ok(), "rational structure: " + first(q.checks));
  const Weight e1{1, 0, 0};
  const Root e2_minus_e3{0, 1, 0};
  const GeodesicResult w = build_weight_subalgebra(n, q, e1);
  const GeodesicResult h = build_heisenberg(n, q, e1, q.weight_bases.at(e1).basis[0]);
  const QuaternionResult k = build_quaternion_subalgebra(n, q, e1, e2_minus_e3);
  const std::vector<std::pair<std::string, const GeodesicResult*>> all{{"U_lam + R H_lam", &w},
                                                                       {"Heisenberg", &h},
                                                                       {"quaternion", &k}};
  const std::vector<std::size_t> centers{1, 1, 4};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& [name, r] = all[i];
    c.expect(r->totally_geodesic, name + ": not totally geodesic");
    c.expect(r->rational, name + ": no rationality certificate");
    c.expect(r->center.dim() == centers[i], name + ": center dim " + std::to_string(r->center.dim()));
    c.expect(r->checks.ok(), name + ": " + first(r->checks));
  }
  c.note("dims " + std::to_string(w.sub.dim()) + "/" + std::to_string(h.sub.dim()) + "/" + std::to_string(k.sub.dim()));
  return c;
}

// ---- 9: Z-forms

Criterion zforms() {
  Criterion c;
  c.expect(zform_check(build_module(rs('A', 2), ModuleKind::Adjoint)).ok, "A2 adjoint fails");
  long count = 0;
  for (const auto& t : types_up_to_rank_8()) {
    if (t.family > 'D') continue;
    const ZFormReport r = zform_check(build_module(rs(t.family, t.rank), ModuleKind::Natural));
    c.expect(r.ok, t.name() + " natural fails");
    ++count;
  }
  const ComplexModule adj = build_module(rs('A', 2), ModuleKind::Adjoint);
  c.expect(!zform_check(with_scaled_root_generators(adj, frac(1, 2))).ok, "rescaled control passes");
  c.note(std::to_string(count) + " natural modules");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double budget_s;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries{
      {1, "highest long and short roots", 10, highest_roots},
      {2, "positive root counts", 10, root_counts},
      {3, "Chevalley integrality and Jacobi", 60, chevalley_integrality},
      {4, "inadmissible weights vs published families", 300, classification},
      {5, "candidates, 2w_i decompositions, rigidity", 120, candidates_and_decompositions},
      {6, "Weyl operator identities", 30, weyl_operators},
      {7, "bracket propositions", 300, bracket_propositions},
      {8, "geodesic constructions", 60, geodesic_constructions},
      {9, "Z-form checks", 30, zforms},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > e.budget_s) c.fail("runtime " + std::to_string(s) + " s over budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (c.pass ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.title << " (" << s << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    failed += !c.pass;
  }
  std::cout << (9 - failed) << "/9 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
