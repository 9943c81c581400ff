#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "csamot/error.hpp"
#include "csamot_cli/cli.hpp"

namespace csamot::cli {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Info:
      return "info";
  }
  return "?";
}

Json to_json(const Report& r) {
  return Json{{"command", r.command},
              {"inputs", r.inputs},
              {"status", to_string(r.status)},
              {"payload", r.payload},
              {"duration_ms", r.duration_ms}};
}

void print_text(const Report& r, std::ostream& out) {
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(1) << r.duration_ms;
  out << "[" << to_string(r.status) << "] " << r.command;
  if (!r.inputs.empty()) out << " " << r.inputs.dump();
  out << "  (" << ms.str() << " ms)\n";
  for (const auto& [key, value] : r.payload.items())
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

namespace {

template <class F>
auto timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  return std::pair{std::move(result), elapsed.count()};
}

template <class T>
CLI::Option* required(CLI::App* app, const std::string& name, T& target, const std::string& help) {
  return app->add_option(name, target, help)->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for motives of norm-one groups of central simple algebras", "csamot"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a single JSON document");

  std::function<std::vector<Report>()> action;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember({"all"}));
  verify->callback([&] { action = [] { return cmd_verify_all(); }; });

  auto* schubert = app.add_subcommand("schubert", "Schubert calculus in Gr(3,6) and on X");
  schubert->require_subcommand(1);
  auto* smul = schubert->add_subcommand("mul", "product of two Schubert labels");
  std::string lhs, rhs;
  bool x_ring = false;
  smul->add_option("lhs", lhs, "partition such as (2,2)")->required();
  smul->add_option("rhs", rhs, "partition such as (1)")->required();
  smul->add_flag("--x-ring", x_ring, "multiply on the hyperplane section X");
  smul->callback([&] { action = [&] { return std::vector{cmd_schubert_mul(lhs, rhs, x_ring)}; }; });

  auto* xring = app.add_subcommand("xring", "the Chow ring of X");
  xring->require_subcommand(1);
  auto* mulh = xring->add_subcommand("mul-h", "multiply a class by the hyperplane class");
  std::string cls;
  mulh->add_option("class", cls, "combination such as \"(3,1) + (2,2)\"")->required();
  mulh->callback([&] { action = [&] { return std::vector{cmd_xring_mul_h(cls)}; }; });

  app.add_subcommand("gram", "Gram matrix of the middle Schubert classes")->callback([&] {
    action = [] { return std::vector{cmd_gram()}; };
  });
  app.add_subcommand("alphas", "rational cycles and their recursion mod 3")->callback([&] {
    action = [] { return std::vector{cmd_alphas()}; };
  });
  app.add_subcommand("bases", "unimodularity of the rational-cycle bases")->callback([&] {
    action = [] { return std::vector{cmd_bases()}; };
  });

  auto* tateiso = app.add_subcommand("tateiso", "Tate isomorphism check");
  std::vector<std::int64_t> inverted;
  tateiso->add_option("--invert", inverted, "prime to invert (repeatable)");
  tateiso->callback([&] { action = [&] { return std::vector{cmd_tateiso(inverted)}; }; });

  auto* glm = app.add_subcommand("glmotive", "Tate pattern of M(GL_n)");
  int gl_n = 0;
  required(glm, "--n", gl_n, "n >= 1")->check(CLI::Range(1, 30));
  glm->callback([&] { action = [&] { return std::vector{cmd_glmotive(gl_n)}; }; });

  auto* d2 = app.add_subcommand("d2", "the d2 differential matrix");
  int d2_n = 0, d2_q = 0;
  required(d2, "--n", d2_n, "prime n");
  required(d2, "--q", d2_q, "1 <= q <= n(n+1)/2");
  d2->callback([&] { action = [&] { return std::vector{cmd_d2(d2_n, d2_q)}; }; });

  auto* ss = app.add_subcommand("ss", "motivic cohomology table from the slice spectral sequence");
  int ss_n = 0, ss_w = 0;
  required(ss, "--n", ss_n, "prime n");
  required(ss, "--weight", ss_w, "weight 1..3");
  ss->callback([&] { action = [&] { return std::vector{cmd_ss(ss_n, ss_w)}; }; });

  app.add_subcommand("quadric", "norm/quadric identity")->callback([&] {
    action = [] { return std::vector{cmd_quadric()}; };
  });

  auto* plucker = app.add_subcommand("plucker", "Plucker coordinates of a pair of quaternions");
  std::string qa, qb, alpha1 = "1,1,0,0", alpha2 = "0,0,1,1";
  required(plucker, "--a", qa, "nonzero rational");
  required(plucker, "--b", qb, "nonzero rational");
  plucker->add_option("--alpha1", alpha1, "x,y,z,w")->capture_default_str();
  plucker->add_option("--alpha2", alpha2, "x,y,z,w")->capture_default_str();
  plucker->callback([&] { action = [&] { return std::vector{cmd_plucker(qa, qb, alpha1, alpha2)}; }; });

  auto* charts = app.add_subcommand("charts", "classify the affine charts of the compactification");
  int degree = 0;
  required(charts, "--degree", degree, "2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));
  charts->callback([&] { action = [&] { return std::vector{cmd_charts(degree)}; }; });

  auto* ideals = app.add_subcommand("ideals", "right ideals of M_n(F_q)");
  int id_n = 0, id_q = 0, id_k = 0;
  required(ideals, "--n", id_n, "degree")->check(CLI::Range(1, 4));
  required(ideals, "--q", id_q, "prime")->check(CLI::Range(2, 7));
  required(ideals, "--k", id_k, "0 <= k <= n");
  ideals->callback([&] { action = [&] { return std::vector{cmd_ideals(id_n, id_q, id_k)}; }; });

  auto* witt = app.add_subcommand("witt", "Witt decomposition of a diagonal rational form");
  std::string form;
  required(witt, "--form", form, "c1,c2,...");
  witt->callback([&] { action = [&] { return std::vector{cmd_witt(form)}; }; });

  const auto usage_error = [&](const std::string& message) {
    if (json)
      out << Json{{"error", message}, {"exit_code", kExitUsage}}.dump(2) << "\n";
    else
      err << "csamot: " << message << "\n";
    return kExitUsage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  std::vector<Report> reports;
  try {
    auto [result, ms] = timed(action);
    reports = std::move(result);
    // Suites time each part themselves.
    if (reports.size() == 1) reports.front().duration_ms = ms;
  } catch (const csamot::Error& e) {
    return usage_error(e.what());
  }

  bool failed = false;
  for (const auto& r : reports) failed = failed || r.status == Status::Fail;

  if (json) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << "\n";
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(to_json(r));
      out << Json{{"command", "verify all"}, {"status", failed ? "fail" : "pass"}, {"reports", all}}.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) print_text(r, out);
    if (reports.size() > 1) {
      std::size_t passed = 0;
      for (const auto& r : reports) passed += r.status != Status::Fail;
      out << passed << "/" << reports.size() << " checks passed\n";
    }
  }
  return failed ? kExitFailed : kExitOk;
}

}  // namespace csamot::cli
