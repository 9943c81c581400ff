#include <algorithm>
#include <chrono>
#include <regex>
#include <sstream>

#include "csamot/csa.hpp"
#include "csamot/error.hpp"
#include "csamot/geometry.hpp"
#include "csamot/gl_motive.hpp"
#include "csamot/hyperplane_section.hpp"
#include "csamot/schubert.hpp"
#include "csamot/slice_ss.hpp"
#include "csamot_cli/cli.hpp"

namespace csamot::cli {

using csamot::to_json;
using csamot::to_string;

namespace {

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

Json to_json_rat(const Rational& v) { return v.get_str(); }

Json to_json_rat(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Rational parse_rational(const std::string& text) {
  static const std::regex shape(R"(\s*([+-]?\d+)(/\d+)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  Rational v(m[1].str() + m[2].str());
  if (v.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  v.canonicalize();
  return v;
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t expected) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.size() != expected)
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  return out;
}

// Labels in a combination must all sit in one codimension of X.
XClass parse_xclass(const std::string& text) {
  const LabelMap terms = parse_combination(text);
  if (terms.empty()) throw Error(ErrorKind::ParseError, "empty class '" + text + "'");
  const int codim = x_codim_of_label(terms.begin()->first);
  for (const auto& [lambda, c] : terms)
    if (x_codim_of_label(lambda) != codim)
      throw Error(ErrorKind::CodimMismatch, "labels of different codimension in '" + text + "'");
  return XClass::from_terms(codim, terms);
}

std::vector<XClass> middle_labels() {
  return {XClass::label(parse_partition("(3,1)")), XClass::label(parse_partition("(2,2)")),
          XClass::label(parse_partition("(2,1,1)"))};
}

Json pattern_checks_json(const std::vector<PatternCheck>& checks, bool& all) {
  Json out = Json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return out;
}

}  // namespace

Report cmd_schubert_mul(const std::string& lhs, const std::string& rhs, bool x_ring) {
  Report r{.command = "schubert mul", .inputs = {{"lhs", lhs}, {"rhs", rhs}, {"x_ring", x_ring}}};
  const Partition l = parse_partition(lhs), m = parse_partition(rhs);
  if (x_ring) {
    // Products on X are supported against the unit and the hyperplane class.
    XClass x = XClass::label(l);
    if (m.size() > 1)
      throw Error(ErrorKind::InvalidArgument, "on X the right factor must be () or the hyperplane class (1)");
    if (m.size() == 1) x = hyperplane_mul(x);
    r.payload = {{"ring", "X"}, {"product", x.to_string()}, {"class", to_json(x)}};
  } else {
    const auto p = schur_product(GrChowClass::schubert(kGr36, l), GrChowClass::schubert(kGr36, m));
    r.payload = {{"ring", "Gr(3,6)"}, {"product", p.to_string()}, {"class", to_json(p)}};
  }
  r.status = Status::Info;
  return r;
}

Report cmd_xring_mul_h(const std::string& cls) {
  Report r{.command = "xring mul-h", .inputs = {{"class", cls}}};
  const XClass x = parse_xclass(cls);
  const XClass hx = hyperplane_mul(x);
  r.payload = {{"input", to_json(x)}, {"product", hx.to_string()}, {"class", to_json(hx)}};
  r.status = Status::Info;
  return r;
}

Report cmd_gram() {
  Report r{.command = "gram"};
  const IntMatrix expected{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const IntMatrix g = gram_matrix(middle_labels());
  const Integer det = det_exact(g);
  r.payload = {{"labels", {"(3,1)", "(2,2)", "(2,1,1)"}}, {"matrix", to_json(g)}, {"det", to_json(det)}};
  r.status = pass_if(g == expected && det == -2);
  if (r.status == Status::Fail) r.payload["counterexample"] = {{"expected", to_json(expected)}, {"expected_det", -2}};
  return r;
}

Report cmd_alphas() {
  Report r{.command = "alphas"};
  Json alphas = Json::array();
  for (int i = 1; i <= 5; ++i) alphas.push_back(to_json(alpha(i)));
  Json checks = Json::array();
  bool ok = true;
  for (int i = 1; i <= 4; ++i) {
    const auto c = verify_alpha_recursion(i);
    ok = ok && c.holds;
    Json entry = {{"i", i}, {"modulus", 3}, {"holds", c.holds}};
    if (!c.holds) entry["residual"] = to_json(c.residual);
    checks.push_back(std::move(entry));
  }
  r.payload = {{"alphas", alphas}, {"recursion", checks}};
  r.status = pass_if(ok);
  if (!ok) r.payload["residual"] = "see recursion entries";
  return r;
}

Report cmd_bases() {
  Report r{.command = "bases"};
  Json lists = Json::array();
  bool ok = true;
  for (int codim : {1, 2, 3, 5, 6, 7}) {
    const auto classes = alpha_components_in_codim(codim);
    const IntMatrix coeffs = label_coefficients(classes, codim);
    const auto snf = smith_normal_form(coeffs);
    const bool unimodular = basis_certificate(classes, codim);
    Json cls = Json::array();
    for (const auto& c : classes) cls.push_back(c.to_string());
    Json diag = Json::array();
    for (const auto& d : snf.diagonal) diag.push_back(to_json(d));
    lists.push_back({{"codim", codim}, {"classes", cls}, {"smith_diagonal", diag}, {"unimodular", unimodular}});
    if (!unimodular && ok) r.payload["counterexample"] = {{"codim", codim}, {"smith_diagonal", diag}};
    ok = ok && unimodular;
  }
  r.payload["lists"] = lists;
  r.status = pass_if(ok);
  return r;
}

Report cmd_tateiso(const std::vector<std::int64_t>& inverted) {
  const std::set<std::int64_t> primes(inverted.begin(), inverted.end());
  Report r{.command = "tateiso", .inputs = {{"invert", Json(std::vector<std::int64_t>(primes.begin(), primes.end()))}}};
  for (auto p : primes)
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "--invert expects primes, got " + std::to_string(p));
  const auto classes = alpha_collection();
  const IntMatrix m = tate_iso_matrix(classes);
  const Integer det = det_exact(m);
  const bool iso = tate_iso_check(classes, primes);
  r.payload = {{"classes", classes.size()}, {"det", to_json(det)}, {"isomorphism", iso}};
  r.status = pass_if(iso);
  if (!iso) r.payload["counterexample"] = {{"det_not_a_unit", to_json(det)}};
  return r;
}

Report cmd_chern_twist() {
  Report r{.command = "chern-twist"};
  const auto c = verify_c3_twist_identity();
  r.payload = {{"residual", c.residual.to_string()}, {"holds", c.holds}};
  r.status = pass_if(c.holds && c.residual == pow(Poly::variable("h"), 3));
  return r;
}

Report cmd_glmotive(int n) {
  Report r{.command = "glmotive", .inputs = {{"n", n}}};
  const TatePattern p = gl_pattern(n);
  r.payload = {{"pattern", to_json(p)}, {"rendered", p.to_string()}, {"rank", p.total()}};
  bool ok = true;
  std::vector<int> degrees;
  if (is_prime(n)) {
    degrees.push_back(n);
    Json slices = Json::object();
    for (const auto& [q, s] : motive_m_slices(n)) slices[std::to_string(q)] = to_json(s);
    r.payload["slices"] = slices;
  }
  r.payload["checks"] = pattern_checks_json(pattern_checks(degrees), ok);
  r.status = pass_if(ok);
  if (!ok) r.payload["counterexample"] = "see failed checks";
  return r;
}

Report cmd_d2(int n, int q) {
  Report r{.command = "d2", .inputs = {{"n", n}, {"q", q}}};
  const D2Matrix d = d2_matrix(n, q);
  const auto closed = d2_coefficients_closed_form(n, q);
  const auto chern = d2_coefficients_from_chern(n, q);
  r.payload = {{"matrix", to_json(d)}, {"routes_agree", closed == chern}};
  r.status = pass_if(closed == chern);
  if (closed != chern) r.payload["counterexample"] = {{"closed_form", closed}, {"chern", chern}};
  return r;
}

Report cmd_ss(int n, int weight) {
  Report r{.command = "ss", .inputs = {{"n", n}, {"weight", weight}}};
  const E2Page page = build_e2(n, weight);
  Json e2 = Json::array();
  for (const auto& [pos, cell] : page.cells)
    if (!cell.is_zero()) e2.push_back({{"p", pos.first}, {"q", pos.second}, {"group", cell.total().to_string()}});
  Json diffs = Json::array();
  for (const auto& d : page.differentials)
    diffs.push_back({{"source", {d.source.first, d.source.second}},
                     {"target", {d.target.first, d.target.second}},
                     {"coefficient", d.coefficient}});
  const auto table = assemble(apply_d2(page));
  // The answer must not depend on the unit c.
  Json mismatch;
  for (int c = 1; c < n && mismatch.is_null(); ++c)
    if (small_weight_table(n, weight, Integer(c)) != table) mismatch = {{"c", c}};
  r.payload = {{"e2", e2}, {"d2", diffs}, {"table", to_json(table)}, {"assumptions", strings(page.assumptions)}};
  r.status = pass_if(mismatch.is_null());
  if (!mismatch.is_null()) r.payload["counterexample"] = mismatch;
  return r;
}

Report cmd_quadric() {
  Report r{.command = "quadric"};
  const auto q = verify_quadric_identity();
  Json prod = Json::array();
  for (const auto& p : q.product_residual) prod.push_back(p.to_string());
  r.payload = {{"residual", q.residual.to_string()},
               {"product_residual", prod},
               {"samples", q.samples},
               {"sample_failures", q.sample_failures}};
  r.status = pass_if(q.holds());
  return r;
}

Report cmd_plucker(const std::string& a, const std::string& b, const std::string& alpha1, const std::string& alpha2) {
  Report r{.command = "plucker", .inputs = {{"a", a}, {"b", b}, {"alpha1", alpha1}, {"alpha2", alpha2}}};
  const QuatAlgebra<Rational> alg(parse_rational(a), parse_rational(b));
  const auto c1 = parse_rationals(alpha1, 4), c2 = parse_rationals(alpha2, 4);
  const QuatElement<Rational> x1{alg, c1[0], c1[1], c1[2], c1[3]};
  const QuatElement<Rational> x2{alg, c2[0], c2[1], c2[2], c2[3]};
  const auto pt = plucker_embed(x1, x2);
  const Rational residual = quadric_residual(alg, pt);
  const auto prod = quat_mul(x1, conjugate(x2));
  const std::vector<Rational> prod_coords{prod.x, prod.y, prod.z, prod.w};
  Json raw = Json::array(), u = Json::array(), pc = Json::array();
  for (const auto& v : pt.raw()) raw.push_back(to_json_rat(v));
  for (const auto& v : pt.u()) u.push_back(to_json_rat(v));
  for (const auto& v : prod_coords) pc.push_back(to_json_rat(v));
  r.payload = {{"raw", raw}, {"u", u}, {"alpha1_conj_alpha2", pc}, {"residual", to_json_rat(residual)}};
  r.status = pass_if(residual == 0 && pt.u() == prod_coords);
  return r;
}

Report cmd_charts(int degree) {
  Report r{.command = "charts", .inputs = {{"degree", degree}}};
  Json entries = Json::array();
  Json unclassified = Json::array();
  std::map<std::string, int> counts;
  for (const auto& e : sweep_charts(degree)) {
    Json entry = {{"chart", e.chart.to_string()}, {"equation", e.equation.to_string()}};
    if (e.classification) {
      const std::string kind = to_string(e.classification->kind, degree);
      entry["kind"] = kind;
      if (e.classification->kind == ChartKind::Graph) entry["pivot"] = e.classification->pivot_variable;
      ++counts[kind];
    } else {
      entry["kind"] = "Unclassified";
      ++counts["Unclassified"];
      unclassified.push_back(e.chart.to_string());
    }
    entries.push_back(std::move(entry));
  }
  r.payload = {{"charts", entries}, {"counts", counts}};
  r.status = pass_if(unclassified.empty());
  if (!unclassified.empty()) r.payload["counterexample"] = unclassified;
  return r;
}

Report cmd_ideals(int n, int q, int k) {
  Report r{.command = "ideals", .inputs = {{"n", n}, {"q", q}, {"k", k}}};
  const SplitAlgebra alg(n, q);
  if (k < 0 || k > n) throw Error(ErrorKind::RangeError, "k must lie in 0..n");
  const auto ideals = enumerate_right_ideals(alg, k);
  const Integer expected = point_count(k, n, q);
  r.payload = {{"count", ideals.count}, {"gaussian_binomial", to_json(expected)}};
  bool ok = Integer(static_cast<unsigned long>(ideals.count)) == expected;

  // Exhaustive pair check of the two independence tests when the algebra is tiny.
  std::size_t elements = 1;
  for (int i = 0; i < n * n && elements <= 81; ++i) elements *= static_cast<std::size_t>(q);
  if (elements <= 81) {
    std::vector<SplitElement> all;
    for (std::size_t code = 0; code < elements; ++code) {
      SplitElement e = SplitElement::zero(alg);
      std::size_t rest = code;
      for (int i = 0; i < n * n; ++i) {
        e.matrix(static_cast<std::size_t>(i / n), static_cast<std::size_t>(i % n)) = static_cast<long>(rest % q);
        rest /= static_cast<std::size_t>(q);
      }
      all.push_back(std::move(e));
    }
    std::size_t pairs = 0, agree = 0;
    Json disagreement;
    for (const auto& u : all)
      for (const auto& v : all) {
        const std::vector<SplitElement> t{u, v};
        const bool same = independent(t) == independent_via_left_ideal(t);
        ++pairs;
        agree += same;
        if (!same && disagreement.is_null()) disagreement = {{"u", u.matrix.entries()}, {"v", v.matrix.entries()}};
      }
    r.payload["independence_pairs"] = pairs;
    r.payload["independence_agree"] = agree;
    if (!disagreement.is_null()) r.payload["counterexample"] = disagreement;
    ok = ok && agree == pairs;
  }
  if (!ok && !r.payload.contains("counterexample"))
    r.payload["counterexample"] = {{"count", ideals.count}, {"expected", to_json(expected)}};
  r.status = pass_if(ok);
  return r;
}

Report cmd_witt(const std::string& form) {
  Report r{.command = "witt", .inputs = {{"form", form}}};
  const QuadraticForm f = parse_quadratic_form(form);
  const auto w = witt_split(f);
  r.payload = {{"form", f.to_string()},
               {"hyperbolic_planes", w.hyperbolic_planes},
               {"residual", w.residual.to_string()},
               {"transform", to_json_rat(w.transform)},
               {"search_exhausted", w.search_exhausted},
               {"verified", w.verified}};
  r.status = pass_if(w.verified);
  if (!w.verified) r.payload["counterexample"] = "transform does not carry the form to planes + residual";
  return r;
}

std::vector<Report> cmd_verify_all() {
  std::vector<Report> out;
  // Each report is charged the time elapsed since the previous one was added.
  auto last = std::chrono::steady_clock::now();
  const auto add = [&](Report r) {
    const auto now = std::chrono::steady_clock::now();
    r.duration_ms = std::chrono::duration<double, std::milli>(now - last).count();
    last = now;
    out.push_back(std::move(r));
  };

  {
    Report r{.command = "pieri"};
    const auto lhs = pieri(GrChowClass::schubert(kGr36, parse_partition("(2,1,1)")));
    const auto rhs = GrChowClass::from_terms(kGr36, parse_combination("(2,2,1) + (3,1,1)"));
    const auto box = GrChowClass::schubert(kGr36, parse_partition("(1)"));
    Json mismatches = Json::array();
    for (const auto& lambda : box_partitions(kGr36)) {
      const auto c = GrChowClass::schubert(kGr36, lambda);
      if (!(pieri(c) == schur_product(box, c))) mismatches.push_back(lambda.to_string());
    }
    r.payload = {{"box_times_(2,1,1)", lhs.to_string()}, {"schur_oracle_labels", box_partitions(kGr36).size()}};
    r.status = pass_if(lhs == rhs && mismatches.empty());
    if (r.status == Status::Fail) r.payload["counterexample"] = mismatches;
    add(r);
  }
  {
    Report r = cmd_schubert_mul("(2,2)", "(1)", true);
    const bool ok = r.payload["product"] == "(3,3) + 2(3,2,1) + (2,2,2)";
    r.status = pass_if(ok);
    if (!ok) r.payload["counterexample"] = r.payload["product"];
    add(r);
  }
  add(cmd_gram());
  {
    Report z = cmd_tateiso({});
    Report half = cmd_tateiso({2});
    // Over Z the map is not an isomorphism; over Z[1/2] it is.
    z.command = "tateiso (expect failure over Z)";
    const bool fails_over_z = z.status == Status::Fail;
    z.status = pass_if(fails_over_z);
    if (fails_over_z)
      z.payload.erase("counterexample");
    else
      z.payload["counterexample"] = "unexpectedly invertible over Z";
    add(z);
    add(half);
  }
  add(cmd_alphas());
  add(cmd_bases());
  add(cmd_chern_twist());
  add(cmd_quadric());
  add(cmd_charts(3));
  add(cmd_charts(2));
  for (int n : {2, 3, 5}) add(cmd_glmotive(n));
  {
    Report r{.command = "d2 (all n <= 5)"};
    Json bad = Json::array();
    std::size_t count = 0;
    for (int n = 1; n <= 5; ++n)
      for (int q = 1; q <= n * (n + 1) / 2; ++q) {
        ++count;
        if (d2_coefficients_closed_form(n, q) != d2_coefficients_from_chern(n, q)) bad.push_back({n, q});
      }
    r.payload = {{"matrices", count}};
    r.status = pass_if(bad.empty());
    if (!bad.empty()) r.payload["counterexample"] = bad;
    add(r);
  }
  for (int w = 1; w <= 3; ++w) add(cmd_ss(3, w));
  add(cmd_ideals(2, 2, 1));
  add(cmd_ideals(3, 2, 1));
  add(cmd_ideals(3, 2, 2));
  add(cmd_witt("1,-2,-3,6,-1"));
  return out;
}

}  // namespace csamot::cli
