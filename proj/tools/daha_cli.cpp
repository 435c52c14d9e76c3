#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "daha/daha.h"

namespace {

int report_error(int status) {
  std::cerr << "error (" << daha_status_name(status) << "): " << daha_last_error() << "\n";
  return 2;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  daha_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the trigonometric DAHA, Coulomb Z-algebras and symbolic powers"};
  app.require_subcommand(1);

  daha_config cfg;
  daha_config_default(&cfg);
  std::string suite = "all";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "run a check suite and write a JSON report");
  std::vector<std::string> names;
  for (size_t i = 0; i < daha_suite_count(); ++i) names.push_back(daha_suite_name(i));
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--rank,-n", cfg.n, "largest rank to check");
  verify->add_option("--dmax", cfg.d_max, "degree cap");
  verify->add_option("--ydeg", cfg.ydeg, "y-degree cap for windows");
  verify->add_option("--xradius", cfg.x_radius, "coweight and x-window radius");
  verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--budget-ms", cfg.budget_ms, "per-suite time budget, 0 for none");
  bool timing = false;
  verify->add_flag("--timing", timing, "record wall time in the report");
  verify->add_option("--out,-o", out_path, "report path (stdout when omitted)");
  verify->footer("suites: all, " + [&] {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());

  int dims_n = 2, dims_d = 1, iso = 0;
  std::string window = "0,1,1";
  std::string roots = "A";
  auto* dims = app.add_subcommand("dims", "graded slice of a symbolic power in a window");
  dims->add_option("--rank,-n", dims_n, "rank (ignored for rank-2 root data names)");
  dims->add_option("--d", dims_d, "symbolic power");
  dims->add_option("--window", window, "xlo,xhi,ydeg");
  dims->add_option("--isotypic", iso, "project to the sign^k isotypic part")->check(CLI::Range(0, 1));
  dims->add_option("--roots", roots, "A, SL2, PGL2, C2 or G2");

  std::string expr;
  int eval_n = 2;
  auto* eval = app.add_subcommand("eval", "evaluate a word in the generators as an operator");
  eval->add_option("--expr,-e", expr, "word, e.g. \"s1 y2 pi\"")->required();
  eval->add_option("--rank,-n", eval_n, "rank");

  CLI11_PARSE(app, argc, argv);

  if (*verify) {
    cfg.suite = suite.c_str();
    cfg.record_timing = timing ? 1 : 0;
    daha_report* report = nullptr;
    int st = daha_run_suite(&cfg, &report);
    if (st != DAHA_OK) return report_error(st);
    char* text = nullptr;
    st = daha_report_serialize(report, &text);
    if (st != DAHA_OK) {
      daha_report_free(report);
      return report_error(st);
    }
    std::string json = take(text);
    if (out_path.empty()) {
      std::cout << json << "\n";
    } else {
      std::ofstream f(out_path);
      f << json << "\n";
    }
    size_t failed = 0, skipped = 0;
    for (size_t i = 0; i < daha_report_size(report); ++i) {
      const char* label = nullptr;
      const char* witness = nullptr;
      int status = 0;
      daha_report_entry(report, i, &label, &status, &witness);
      if (status == 1) {
        ++failed;
        std::cerr << "FAIL " << label << "\n     " << witness << "\n";
      } else if (status == 2) {
        ++skipped;
      }
    }
    int pass = 0;
    daha_report_all_pass(report, &pass);
    std::cerr << daha_report_size(report) << " checks, " << failed << " failed, " << skipped
              << " skipped\n";
    daha_report_free(report);
    return pass ? 0 : 1;
  }

  if (*dims) {
    int xlo = 0, xhi = 0, ydeg = 0;
    if (std::sscanf(window.c_str(), "%d,%d,%d", &xlo, &xhi, &ydeg) != 3) {
      std::cerr << "error: --window expects xlo,xhi,ydeg\n";
      return 2;
    }
    daha_slice* slice = nullptr;
    int st = daha_graded_dimension(roots.c_str(), dims_n, dims_d, iso, dims->count("--isotypic") > 0,
                                   xlo, xhi, ydeg, &slice);
    if (st != DAHA_OK) return report_error(st);
    char* text = nullptr;
    st = daha_slice_to_json(slice, &text);
    daha_slice_free(slice);
    if (st != DAHA_OK) return report_error(st);
    std::cout << take(text) << "\n";
    return 0;
  }

  char* text = nullptr;
  int st = daha_eval_word(expr.c_str(), eval_n, &text);
  if (st != DAHA_OK) return report_error(st);
  std::cout << take(text) << "\n";
  return 0;
}
