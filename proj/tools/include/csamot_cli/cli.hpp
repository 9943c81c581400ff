#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "csamot/json_io.hpp"

namespace csamot::cli {

enum class Status { Pass, Fail, Info };

std::string_view to_string(Status s);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Status status = Status::Info;
  Json payload = Json::object();  // a failing report carries "residual" or "counterexample"
  double duration_ms = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Individual commands; each returns one report, `verify all` returns many.
Report cmd_schubert_mul(const std::string& lhs, const std::string& rhs, bool x_ring);
Report cmd_xring_mul_h(const std::string& cls);
Report cmd_gram();
Report cmd_alphas();
Report cmd_bases();
Report cmd_tateiso(const std::vector<std::int64_t>& inverted);
Report cmd_chern_twist();
Report cmd_glmotive(int n);
Report cmd_d2(int n, int q);
Report cmd_ss(int n, int weight);
Report cmd_quadric();
Report cmd_plucker(const std::string& a, const std::string& b, const std::string& alpha1, const std::string& alpha2);
Report cmd_charts(int degree);
Report cmd_ideals(int n, int q, int k);
Report cmd_witt(const std::string& form);
std::vector<Report> cmd_verify_all();

Json to_json(const Report& r);
void print_text(const Report& r, std::ostream& out);

}  // namespace csamot::cli
