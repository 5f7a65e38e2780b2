#include "lieq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "lieq/admissible.hpp"
#include "lieq/geodesic.hpp"

namespace lieq {

using Json = nlohmann::ordered_json;

// ---- parsing

std::vector<SimpleType> parse_type_spec(const std::string& s) {
  std::vector<SimpleType> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw ParseError("empty type spec", i);
  while (true) {
    skip_ws();
    if (i == s.size()) throw ParseError("expected a family letter A-G at position " + std::to_string(i), i);
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (f < 'A' || f > 'G')
      throw ParseError("expected a family letter A-G at position " + std::to_string(i) + ", got '" + s[i] + "'", i);
    ++i;
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected a rank at position " + std::to_string(i), i);
    if (i - start > 4) throw InvalidRank("rank too large at position " + std::to_string(start));
    const SimpleType t{f, std::stoi(s.substr(start, i - start))};
    try {
      validate_type(t);
    } catch (const DomainError& e) {
      throw InvalidRank(e.what());
    }
    out.push_back(t);
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != 'x' && s[i] != 'X')
      throw ParseError("expected 'x' between factors at position " + std::to_string(i), i);
    ++i;
  }
  return out;
}

IVec parse_ivec(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  IVec v;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stol(item, &used));
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'", 0);
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ParseError("not an integer: '" + item + "'", 0);
  }
  if (v.empty()) throw ParseError("empty vector", 0);
  return v;
}

namespace {

// ---- serialization

Json ivec_json(const IVec& v) { return Json(v); }
std::string q_str(const Rational& q) { return to_string(q); }

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(q_str(x));
  return a;
}

Json basis_json(const std::vector<QVec>& b) {
  Json a = Json::array();
  for (const auto& v : b) a.push_back(qvec_json(v));
  return a;
}

Json report_json(const CheckReport& r) { return Json{{"checks", r.checks}, {"failures", r.failures}}; }

std::string flat(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!scalar(x) && !(x.is_array() && flat_array(x) && !x.empty() && scalar(x[0]))) return false;
  return true;
}

std::string inline_str(const Json& j) {
  if (scalar(j)) return scalar_str(j);
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_str(j[i]);
  return s + ")";
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v) || flat_array(v)) {
        os << pad << k << ": " << inline_str(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (scalar(v) || flat_array(v)) {
        os << pad << "- " << inline_str(v) << "\n";
      } else {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_str(j) << "\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// A verb's result: the document, an optional table for csv, and the exit status.
struct Output {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int status = 0;
};

void emit(const Output& o, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << o.doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::vector<std::string> header = o.header;
    std::vector<std::vector<std::string>> rows = o.rows;
    if (header.empty()) {
      header = {"key", "value"};
      for (const auto& [k, v] : o.doc.items())
        if (scalar(v) || flat_array(v)) rows.push_back({k, inline_str(v)});
    }
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << "\n";
    }
  } else {
    render_text(o.doc, os, 0);
  }
}

Json header(const std::string& verb, const RootDatum& rd) {
  return Json{{"schema", "lieq." + verb + "/1"}, {"type", rd.name()}};
}

ModuleKind parse_rep(const std::string& rep) {
  std::string r;
  for (char c : rep) r += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (r == "adjoint") return ModuleKind::Adjoint;
  if (r == "natural") return ModuleKind::Natural;
  throw DomainError("unknown representation '" + rep + "' (adjoint or natural)");
}

// ---- verbs

Output do_rootsys(const RootDatum& rd) {
  Output o;
  o.doc = header("rootsys", rd);
  o.doc["rank"] = rd.n;
  o.doc["cartan"] = rd.cartan;
  o.doc["symmetrizer"] = rd.d;
  o.doc["positive_roots"] = rd.positive.size();
  Json factors = Json::array();
  for (std::size_t f = 0; f < rd.factors.size(); ++f) {
    const Root& hi = rd.beta_max[f];
    const Root& lo = rd.beta_min[f];
    factors.push_back(Json{{"type", rd.factors[f].name()},
                           {"beta_max", {{"root", ivec_json(hi)}, {"weight", ivec_json(rd.root_to_weight(hi))}}},
                           {"beta_min", {{"root", ivec_json(lo)}, {"weight", ivec_json(rd.root_to_weight(lo))}}}});
  }
  o.doc["factors"] = factors;
  Json roots = Json::array();
  o.header = {"index", "root", "weight", "height", "half_square_length"};
  for (std::size_t k = 0; k < rd.positive.size(); ++k) {
    const Root& r = rd.positive[k];
    roots.push_back(Json{{"root", ivec_json(r)},
                         {"weight", ivec_json(rd.root_to_weight(r))},
                         {"height", rd.height(r)},
                         {"half_square_length", rd.sq_len_half(r)}});
    o.rows.push_back({std::to_string(k), flat(r), flat(rd.root_to_weight(r)), std::to_string(rd.height(r)),
                      std::to_string(rd.sq_len_half(r))});
  }
  o.doc["roots"] = roots;
  return o;
}

// Named check runner: CheckFailure is a failed check, DomainError a skip.
struct Suite {
  std::string name;
  Json checks = Json::array();
  std::vector<std::vector<std::string>>* rows;
  long failed = 0, skipped = 0;

  void add(const std::string& check, const std::string& status, const std::string& detail) {
    checks.push_back(Json{{"check", check}, {"status", status}, {"detail", detail}});
    rows->push_back({name, check, status, detail});
    if (status == "fail") ++failed;
    if (status == "skip") ++skipped;
  }
  void report(const std::string& check, const CheckReport& r) {
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.ok()) detail += "; first failure: " + r.failures[0] + " (" + std::to_string(r.failures.size()) + " total)";
    add(check, r.ok() ? "pass" : "fail", detail);
  }
  void run(const std::string& check, const std::function<std::string()>& fn) {
    try {
      const std::string d = fn();
      add(check, "pass", d);
    } catch (const CheckFailure& e) {
      add(check, "fail", e.what());
    } catch (const DomainError& e) {
      add(check, "skip", e.what());
    }
  }
  void run_report(const std::string& check, const std::function<CheckReport()>& fn) {
    try {
      report(check, fn());
    } catch (const CheckFailure& e) {
      add(check, "fail", e.what());
    } catch (const DomainError& e) {
      add(check, "skip", e.what());
    }
  }
  Json json() const {
    return Json{{"suite", name}, {"failed", failed}, {"skipped", skipped}, {"checks", checks}};
  }
};

CheckReport compact_integrality(const CompactBasis& cb) {
  CheckReport r;
  for (int a = 0; a < cb.dim; ++a)
    for (int b = 0; b < cb.dim; ++b)
      for (const auto& [k, x] : cb.table[a][b])
        r.check(x.get_den() == 1, "non-integral constant [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  return r;
}

Output do_chevalley(const RootDatum& rd) {
  Output o;
  o.doc = header("chevalley", rd);
  const ChevalleyData cd = build_chevalley(rd);
  const CompactBasis cb = build_compact_basis(cd);
  o.doc["dim"] = cd.dim;
  Json ex = Json::array();
  for (std::size_t x = 0; x < cd.extraspecial.size(); ++x) {
    const auto [r, s] = cd.extraspecial[x];
    if (r < 0) continue;
    ex.push_back(Json{{"root", ivec_json(rd.roots[x])},
                      {"pair", Json::array({ivec_json(rd.roots[r]), ivec_json(rd.roots[s])})},
                      {"N", cd.N(r, s)}});
  }
  o.doc["extraspecial"] = ex;
  const long jc = count_jacobi_failures(cd), jk = count_jacobi_failures(cb);
  const CheckReport integ = compact_integrality(cb);
  o.doc["jacobi_failures"] = jc;
  o.doc["compact_jacobi_failures"] = jk;
  o.doc["compact_integral"] = integ.ok();
  Json xb = Json::array();
  for (const auto& v : xb_j0xb_values(cd)) xb.push_back(q_str(v));
  o.doc["B(X_r,J0 X_r)"] = xb;
  o.status = (jc == 0 && jk == 0 && integ.ok()) ? 0 : 1;
  return o;
}

Output do_module(const RootDatum& rd, ModuleKind kind) {
  Output o;
  o.doc = header("module", rd);
  const ComplexModule m = build_module(rd, kind);
  const RealModule u = realify(m);
  o.doc["rep"] = kind_name(kind);
  o.doc["complex_dim"] = m.dim;
  o.doc["real_dim"] = u.dim;
  Json ws = Json::array();
  o.header = {"weight", "multiplicity"};
  for (const auto& [w, s] : m.weight_spaces) {
    ws.push_back(Json{{"weight", ivec_json(w)}, {"multiplicity", s.dim()}});
    o.rows.push_back({flat(w), std::to_string(s.dim())});
  }
  o.doc["weights"] = ws;
  Json real = Json::array();
  if (!u.u_zero.empty()) real.push_back(Json{{"weight", ivec_json(Weight(rd.n, 0))}, {"dim", u.u_zero.dim()}});
  for (const auto& lam : u.positive_weights())
    real.push_back(Json{{"weight", ivec_json(lam)}, {"dim", u.u_weight(lam).dim()}});
  o.doc["real_weight_spaces"] = real;
  const ZFormReport z = zform_check(m);
  o.doc["zform_ok"] = z.ok;
  o.status = z.ok ? 0 : 1;
  return o;
}

Output do_nilalg(const RootDatum& rd, ModuleKind kind) {
  Output o;
  o.doc = header("nilalg", rd);
  const MetricNilpotent n = build_nilalg(realify(build_module(rd, kind)));
  o.doc["rep"] = kind_name(kind);
  o.doc["dim_U"] = n.du;
  o.doc["dim_G0"] = n.dg;
  o.doc["dim"] = n.dim;
  o.doc["center_dim"] = center(n).dim();
  o.doc["module_kernel_dim"] = module_kernel(n.u).dim();
  const CheckReport r = verify_bracket_relations(n);
  o.doc["bracket_relations"] = report_json(r);
  o.status = r.ok() ? 0 : 1;
  return o;
}

std::string parity_list(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : "|") + x;
  return out;
}

Output do_classify(const RootDatum& rd, long bound, long kmax) {
  if (bound < 0 || kmax < 0) throw DomainError("bound and kmax must be nonnegative");
  Output o;
  o.doc = header("classify", rd);
  o.doc["bound"] = bound;
  o.doc["kmax"] = kmax;
  const auto entries = enumerate_inadmissible(rd, bound, kmax);
  const FamilyComparison cmp = compare_with_families(rd, bound, kmax);
  o.header = {"mu", "p", "alpha", "beta", "parities", "family", "k", "matched"};
  Json es = Json::array();
  std::set<std::string> labels;
  for (const auto& e : entries) {
    es.push_back(Json{{"mu", ivec_json(e.dominant_mu)},
                      {"p", e.p},
                      {"alpha", ivec_json(e.alpha)},
                      {"beta", ivec_json(e.beta)},
                      {"parities", parity_list(e.parities)},
                      {"family", e.family},
                      {"k", e.k},
                      {"matched", e.matched}});
    o.rows.push_back({flat(e.dominant_mu), std::to_string(e.p), flat(e.alpha), flat(e.beta), parity_list(e.parities),
                      e.family, std::to_string(e.k), e.matched ? "true" : "false"});
    if (e.matched) labels.insert(e.family);
  }
  o.doc["families"] = labels;
  o.doc["entries"] = es;
  Json miss = Json::array(), extra = Json::array();
  for (const auto& w : cmp.missing) miss.push_back(ivec_json(w));
  for (const auto& w : cmp.extra) extra.push_back(ivec_json(w));
  o.doc["oracle_equal"] = cmp.oracle_equal();
  o.doc["families_equal"] = cmp.families_equal();
  o.doc["missing"] = miss;
  o.doc["extra"] = extra;
  o.status = cmp.oracle_equal() && cmp.families_equal() ? 0 : 1;
  return o;
}

void suite_chevalley(Suite& s, const RootDatum& rd) {
  const ChevalleyData cd = build_chevalley(rd);
  s.run("chevalley_jacobi", [&] {
    const long f = count_jacobi_failures(cd);
    require(f == 0, std::to_string(f) + " Jacobi failures");
    return std::string("all basis triples");
  });
  s.run("killing_identities", [&] {
    verify_killing_identities(cd);
    return std::string();
  });
  s.run("order_two_automorphism", [&] {
    verify_automorphism(cd, order_two_automorphism(cd));
    return std::string();
  });
  std::optional<CompactBasis> cb;
  s.run("compact_basis_relations", [&] {
    cb = build_compact_basis(cd);
    return std::string();
  });
  if (!cb) return;
  s.run_report("compact_integrality", [&] { return compact_integrality(*cb); });
  s.run("compact_jacobi", [&] {
    const long f = count_jacobi_failures(*cb);
    require(f == 0, std::to_string(f) + " Jacobi failures");
    return std::string("all basis triples");
  });
}

void suite_bracket(Suite& s, const MetricNilpotent& n) {
  s.run_report("bracket_relations", [&] { return verify_bracket_relations(n); });
  s.run("center", [&] { return "dim " + std::to_string(center(n).dim()); });
  s.run("ad_range_basis", [&] {
    QVec all(n.du, Rational(0));
    for (int i = 0; i < n.du; ++i) {
      QVec e(n.du, Rational(0));
      e[i] = 1;
      ad_range(n, e);
      all[i] = i + 1;
    }
    ad_range(n, all);
    return std::to_string(n.du + 1) + " vectors";
  });
  const RootDatum& rd = n.cd().rd;
  for (const auto& lam : n.u.positive_weights()) {
    if (!root_equation_free(rd, lam)) continue;
    s.run("ad_range_weight " + flat(lam), [&] {
      long generic = 0;
      for (const auto& x : n.u.u_weight(lam).basis) {
        const WeightRange w = ad_range_weight(n, lam, x);
        require(w.sharp(), "generic u_lam with image dim " + std::to_string(w.image.dim()) + " < predicted " +
                               std::to_string(w.predicted.dim()));
        generic += w.generic;
      }
      return std::to_string(generic) + " generic vectors";
    });
  }
}

void suite_weyl(Suite& s, const ComplexModule& m, const MetricNilpotent& n) {
  const RootDatum& rd = m.datum();
  std::vector<Root> longer;
  for (int k = 0; k < 2 * rd.n; ++k) longer.push_back(rd.simple(k % rd.n));
  s.run("weyl_operators_complex", [&] {
    for (const auto& r : rd.positive) weyl_operator(m, {r});
    weyl_operator(m, longer);
    return std::to_string(rd.positive.size() + 1) + " words";
  });
  s.run("weyl_operators_real", [&] {
    for (const auto& r : rd.positive) weyl_operator(n.u, {r});
    weyl_operator(n.u, longer);
    return std::to_string(rd.positive.size() + 1) + " words";
  });
  s.run_report("automorphisms_and_derivations", [&] { return verify_aut_der(n); });
}

void suite_zform(Suite& s, const ComplexModule& m) {
  s.run("zform", [&] {
    const ZFormReport z = zform_check(m);
    require(z.ok, std::to_string(z.violations.size()) + " non-integral divided powers");
    return std::string();
  });
  s.run("zform_rescaled_control", [&] {
    const ZFormReport z = zform_check(with_scaled_root_generators(m, frac(1, 2)));
    require(!z.ok, "rescaled generators still pass");
    return std::string("rejected");
  });
}

void suite_geodesic(Suite& s, const MetricNilpotent& n) {
  std::optional<RationalStructure> rs;
  s.run("rational_structure", [&] {
    rs = chevalley_rational_structure(n);
    require(rs->checks.ok(), rs->checks.ok() ? "" : rs->checks.failures[0]);
    return "h0 " + inline_str(qvec_json(rs->h0));
  });
  if (!rs) return;
  const RootDatum& rd = n.cd().rd;
  for (const auto& lam : n.u.positive_weights()) {
    s.run_report("weight_subalgebra " + flat(lam), [&] { return build_weight_subalgebra(n, *rs, lam).checks; });
    s.run_report("heisenberg " + flat(lam), [&] {
      const auto it = rs->weight_bases.find(lam);
      if (it == rs->weight_bases.end() || it->second.empty()) throw DomainError("U_lam = 0");
      return build_heisenberg(n, *rs, lam, it->second.basis[0]).checks;
    });
    for (int k = 0; k < n.g0().npos; ++k)
      s.run_report("quaternion " + flat(lam) + " / " + flat(rd.roots[k]),
                   [&] { return build_quaternion_subalgebra(n, *rs, lam, rd.roots[k]).checks; });
  }
}

void suite_module(Suite& s, const MetricNilpotent& n) {
  s.run_report("module_properties", [&] { return static_cast<CheckReport>(verify_module_properties(n.u)); });
  s.run_report("zero_weight_interplay", [&] { return static_cast<CheckReport>(verify_zero_weight_interplay(n)); });
  const RootDatum& rd = n.cd().rd;
  s.run("nonsingular_subspaces", [&] {
    long count = 0;
    for (const auto& lam : n.u.positive_weights())
      for (const auto& beta : rd.positive) {
        if (!n.u.vc.has_weight(add_vec(lam, rd.root_to_weight(beta))) &&
            !n.u.vc.has_weight(add_vec(lam, rd.root_to_weight(beta), -1)))
          continue;
        nonsingular_subspace(n.u, beta, lam);
        ab_kernel(n.u, beta, lam);
        ++count;
      }
    return std::to_string(count) + " pairs";
  });
}

Output do_verify(const RootDatum& rd, ModuleKind kind, const std::string& suite) {
  static const std::vector<std::string> names{"chevalley", "zform", "bracket", "weyl", "geodesic", "module"};
  if (suite != "all" && (suite == "module" || std::find(names.begin(), names.end(), suite) == names.end()))
    throw DomainError("unknown suite '" + suite + "'");
  Output o;
  o.doc = header("verify", rd);
  o.doc["rep"] = kind_name(kind);
  o.doc["suite"] = suite;
  o.header = {"suite", "check", "status", "detail"};
  const ComplexModule m = build_module(rd, kind);
  std::optional<MetricNilpotent> n;
  Json suites = Json::array();
  long failed = 0;
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    Suite s{name, Json::array(), &o.rows};
    if (name == "chevalley") {
      suite_chevalley(s, rd);
    } else if (name == "zform") {
      suite_zform(s, m);
    } else {
      if (!n) s.run("build_nilalg", [&] {
        n = build_nilalg(realify(m));
        return std::string();
      });
      if (n) {
        if (name == "bracket") suite_bracket(s, *n);
        if (name == "weyl") suite_weyl(s, m, *n);
        if (name == "geodesic") suite_geodesic(s, *n);
        if (name == "module") suite_module(s, *n);
      }
    }
    failed += s.failed;
    suites.push_back(s.json());
  }
  o.doc["failed"] = failed;
  o.doc["suites"] = suites;
  o.status = failed == 0 ? 0 : 1;
  return o;
}

Json sub_json(const GeodesicResult& r) {
  return Json{{"dim", r.sub.dim()},
              {"dim_U_part", r.sub.u_part.dim()},
              {"dim_G0_part", r.sub.g_part.dim()},
              {"totally_geodesic", r.totally_geodesic},
              {"rational", r.rational},
              {"lambda_admissible", r.lambda_admissible},
              {"verification", report_json(r.checks)},
              {"basis", basis_json(r.sub.basis)},
              {"center", basis_json(r.center.basis)}};
}

Output do_geodesic(const RootDatum& rd, ModuleKind kind, const std::string& wspec, const std::string& rspec) {
  Output o;
  o.doc = header("geodesic", rd);
  o.doc["rep"] = kind_name(kind);
  const MetricNilpotent n = build_nilalg(realify(build_module(rd, kind)));
  const RationalStructure rs = chevalley_rational_structure(n);
  Json cert{{"h0", qvec_json(rs.h0)},
            {"compact_integral", rs.compact_integral},
            {"module_integral", rs.module_integral},
            {"bracket_denominator", q_str(rs.bracket_denominator)},
            {"verification", report_json(rs.checks)}};
  Json wb = Json::array();
  for (const auto& [w, b] : rs.weight_bases) wb.push_back(Json{{"weight", ivec_json(w)}, {"basis", basis_json(b.basis)}});
  cert["weight_bases"] = wb;
  o.doc["rational_structure"] = cert;
  bool ok = rs.checks.ok();

  std::vector<Weight> lams;
  if (wspec.empty()) {
    if (!rspec.empty()) throw DomainError("--root needs --weight");
    lams = n.u.positive_weights();
  } else {
    lams.push_back(parse_ivec(wspec));
    if (static_cast<int>(lams[0].size()) != rd.n) throw DomainError("weight has the wrong length");
  }
  Json subs = Json::array();
  o.header = {"kind", "weight", "root", "dim", "center_dim", "totally_geodesic", "rational", "checks_ok"};
  auto add = [&](const std::string& kind_label, const Weight& lam, const std::string& root, Json j,
                 const GeodesicResult& r) {
    Json head{{"kind", kind_label}, {"weight", ivec_json(lam)}};
    head.update(j);
    subs.push_back(head);
    o.rows.push_back({kind_label, flat(lam), root, std::to_string(r.sub.dim()), std::to_string(r.center.dim()),
                      r.totally_geodesic ? "true" : "false", r.rational ? "true" : "false",
                      r.checks.ok() ? "true" : "false"});
    ok = ok && r.checks.ok();
  };
  for (const auto& lam : lams) {
    if (!rspec.empty()) {
      const Root beta = parse_ivec(rspec);
      if (static_cast<int>(beta.size()) != rd.n) throw DomainError("root has the wrong length");
      const QuaternionResult q = build_quaternion_subalgebra(n, rs, lam, beta);
      Json j{{"root", ivec_json(beta)},
             {"string", q.string},
             {"c", q_str(q.c)},
             {"H_lambda", qvec_json(q.h_lam)},
             {"tt_beta", qvec_json(q.tt_beta)},
             {"xi", qvec_json(q.xi)}};
      j.update(sub_json(q));
      add("quaternion", lam, flat(beta), j, q);
      continue;
    }
    try {
      const GeodesicResult w = build_weight_subalgebra(n, rs, lam);
      add("weight", lam, "", sub_json(w), w);
      const QVec& u = rs.weight_bases.count(lam) ? rs.weight_bases.at(lam).basis[0]
                                                 : rs.weight_bases.at(negate(lam)).basis[0];
      const GeodesicResult h = build_heisenberg(n, rs, lam, u);
      add("heisenberg", lam, "", sub_json(h), h);
    } catch (const DomainError& e) {
      if (!wspec.empty()) throw;
      subs.push_back(Json{{"kind", "skipped"}, {"weight", ivec_json(lam)}, {"reason", e.what()}});
    }
  }
  o.doc["subalgebras"] = subs;
  o.status = ok ? 0 : 1;
  return o;
}

void error_line(std::ostream& err, const std::string& code, const std::string& what) {
  err << "error[" << code << "]: " << what << "\n";
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> formats{"json", "csv", "text"};
  try {
    if (std::find(formats.begin(), formats.end(), cmd.format) == formats.end())
      throw DomainError("unknown format '" + cmd.format + "' (json, csv or text)");
    const RootDatum rd = build_root_system(parse_type_spec(cmd.type_spec));
    Output o;
    if (cmd.verb == "rootsys")
      o = do_rootsys(rd);
    else if (cmd.verb == "chevalley")
      o = do_chevalley(rd);
    else if (cmd.verb == "module")
      o = do_module(rd, parse_rep(cmd.rep));
    else if (cmd.verb == "nilalg")
      o = do_nilalg(rd, parse_rep(cmd.rep));
    else if (cmd.verb == "classify")
      o = do_classify(rd, cmd.bound, cmd.kmax);
    else if (cmd.verb == "verify")
      o = do_verify(rd, parse_rep(cmd.rep), cmd.suite);
    else if (cmd.verb == "geodesic")
      o = do_geodesic(rd, parse_rep(cmd.rep), cmd.weight, cmd.root);
    else
      throw DomainError("unknown verb '" + cmd.verb + "'");
    if (cmd.out.empty()) {
      emit(o, cmd.format, out);
    } else {
      std::ofstream f(cmd.out);
      if (!f) {
        error_line(err, "io", "cannot open " + cmd.out);
        return static_cast<int>(ExitCode::Usage);
      }
      emit(o, cmd.format, f);
    }
    return o.status;
  } catch (const ParseError& e) {
    error_line(err, "parse", e.what());
  } catch (const InvalidRank& e) {
    error_line(err, "invalid-rank", e.what());
  } catch (const DomainError& e) {
    error_line(err, "domain", e.what());
  } catch (const CheckFailure& e) {
    error_line(err, "check", e.what());
    return static_cast<int>(ExitCode::CheckFailed);
  }
  return static_cast<int>(ExitCode::Usage);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root systems, Chevalley bases and 2-step nilpotent metric Lie algebras"};
  app.require_subcommand(1);
  Command cmd;
  bool json = false;
  struct VerbSpec {
    const char* name;
    const char* help;
  };
  const std::vector<VerbSpec> verbs{{"rootsys", "root datum, highest roots, positive roots"},
                                    {"chevalley", "Chevalley and compact bases, integrality, Jacobi"},
                                    {"module", "adjoint or natural module, weights, Z-form"},
                                    {"nilalg", "the nilpotent algebra U + G0 and its bracket relations"},
                                    {"classify", "inadmissible dominant weights against the published families"},
                                    {"verify", "verification suites"},
                                    {"geodesic", "rational totally geodesic subalgebras"}};
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--type", cmd.type_spec, "type spec, e.g. B3 or C2xA1")->required();
    sub->add_option("--format", cmd.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--json", json, "same as --format json");
    sub->add_option("--out", cmd.out, "write to a file");
    const std::string name = v.name;
    if (name == "module" || name == "nilalg" || name == "verify" || name == "geodesic")
      sub->add_option("--rep", cmd.rep, "adjoint or natural");
    if (name == "classify") {
      sub->add_option("--bound", cmd.bound, "per-coordinate bound");
      sub->add_option("--kmax", cmd.kmax, "family parameter window |k| <= kmax");
    }
    if (name == "verify")
      sub->add_option("--suite", cmd.suite)
          ->check(CLI::IsMember({"all", "bracket", "weyl", "chevalley", "geodesic", "zform"}));
    if (name == "geodesic") {
      sub->add_option("--weight", cmd.weight, "fundamental coordinates, e.g. 1,0,0");
      sub->add_option("--root", cmd.root, "positive root in simple-root coordinates");
    }
    sub->callback([&cmd, name] { cmd.verb = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    error_line(err, "usage", e.what());
    return static_cast<int>(ExitCode::Usage);
  }
  if (json) cmd.format = "json";
  return run(cmd, out, err);
}

}  // namespace lieq
