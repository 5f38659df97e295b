// rrmbox CLI: variational eigenvalue tables for a particle in a box and its
// rank-D projected Hamiltonians. Talks to the library through the C API only.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rrmbox.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  unsigned precision = 64;
  unsigned digits = 10;
  std::string format = "table";
  std::string output = "-";
};

int usage_error(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  return kExitUsage;
}

int run_error(rrm_status status) {
  std::cerr << "error: " << rrm_status_name(status);
  const char* detail = rrm_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  return kExitFailure;
}

int emit(const Options& opt, const char* text) {
  if (opt.output == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << opt.output << "'\n";
    return kExitFailure;
  }
  out << text;
  return out.good() ? kExitOk : kExitFailure;
}

class ContextHandle {
 public:
  rrm_status init(unsigned precision) { return rrm_context_new(precision, &ctx_); }
  ~ContextHandle() { rrm_context_free(ctx_); }
  rrm_context* get() const { return ctx_; }

 private:
  rrm_context* ctx_ = nullptr;
};

int run_table(const Options& opt, rrm_model* model, unsigned n_min, unsigned n_max,
              unsigned levels) {
  ContextHandle ctx;
  if (rrm_status s = ctx.init(opt.precision); s != RRM_OK) {
    rrm_model_free(model);
    return run_error(s);
  }
  rrm_table* table = nullptr;
  rrm_status s = rrm_table_build(ctx.get(), model, n_min, n_max, levels, &table);
  rrm_model_free(model);
  if (s != RRM_OK) return run_error(s);

  char* text = nullptr;
  s = rrm_table_render(table, opt.format.c_str(), opt.digits, &text);
  rrm_table_free(table);
  if (s != RRM_OK) return run_error(s);
  const int code = emit(opt, text);
  rrm_string_free(text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rayleigh-Ritz eigenvalue tables for a particle in a box\n"
               "and its projected Hamiltonians, at configurable precision."};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--precision", opt.precision, "working precision in decimal digits (>= 30)")
      ->capture_default_str();
  app.add_option("--digits", opt.digits, "displayed significant digits")->capture_default_str();
  app.add_option("--format", opt.format, "output format: table, csv or json")
      ->capture_default_str();
  app.add_option("--output", opt.output, "output path, - for standard output")
      ->capture_default_str();

  auto* standard = app.add_subcommand("standard", "kinetic Hamiltonian -1/2 d2/dx2 table");
  unsigned std_n_min = 4, std_n_max = 20, std_levels = 4;
  standard->add_option("--n-min", std_n_min, "smallest basis size")->capture_default_str();
  standard->add_option("--n-max", std_n_max, "largest basis size")->capture_default_str();
  standard->add_option("--levels", std_levels, "levels per row")->capture_default_str();

  auto* projected = app.add_subcommand("projected", "rank-D projector with weights E_k");
  unsigned prj_d = 1;
  unsigned prj_n_min = 0, prj_n_max = 0, prj_levels = 0;  // 0 = per-D default
  projected->add_option("--d", prj_d, "projection rank D")->capture_default_str();
  projected->add_option("--n-min", prj_n_min, "smallest basis size (default: D's table)");
  projected->add_option("--n-max", prj_n_max, "largest basis size (default: D's table)");
  projected->add_option("--levels", prj_levels, "levels per row (default D)");

  auto* weighted = app.add_subcommand("weighted", "rank-D projector with chosen weights");
  std::vector<std::string> alphas{"1", "2", "3"};
  unsigned wgt_n_min = 4, wgt_n_max = 14, wgt_levels = 0;
  weighted->add_option("--alphas", alphas, "weights as decimal strings")
      ->delimiter(',')
      ->capture_default_str();
  weighted->add_option("--n-min", wgt_n_min, "smallest basis size")->capture_default_str();
  weighted->add_option("--n-max", wgt_n_max, "largest basis size")->capture_default_str();
  weighted->add_option("--levels", wgt_levels, "levels per row (default: one per weight)");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");

  auto* demo = app.add_subcommand("demo-cs", "Cauchy-Schwarz bound demonstration");
  unsigned cs_n = 1, cs_d = 3;
  unsigned cs_n_min = 0, cs_n_max = 13;
  demo->add_option("--n", cs_n, "target level (1 <= n <= D)")->capture_default_str();
  demo->add_option("--d", cs_d, "projection rank D")->capture_default_str();
  demo->add_option("--n-min", cs_n_min, "smallest basis size (default D)");
  demo->add_option("--n-max", cs_n_max, "largest basis size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (opt.precision < 30)
    return usage_error("--precision must be at least 30 decimal digits");
  if (opt.digits == 0) return usage_error("--digits must be at least 1");
  if (opt.format != "table" && opt.format != "csv" && opt.format != "json")
    return usage_error("--format must be table, csv or json");

  if (standard->parsed()) {
    if (std_n_min == 0 || std_n_min > std_n_max) return usage_error("need 1 <= n-min <= n-max");
    if (std_levels == 0 || std_levels > std_n_min)
      return usage_error("standard table needs 1 <= levels <= n-min");
    rrm_model* model = nullptr;
    if (rrm_status s = rrm_model_standard(&model); s != RRM_OK) return run_error(s);
    return run_table(opt, model, std_n_min, std_n_max, std_levels);
  }

  if (projected->parsed()) {
    if (prj_d == 0) return usage_error("--d must be at least 1");
    if (prj_n_min == 0) {
      static constexpr unsigned kMins[] = {1, 2, 3};
      prj_n_min = prj_d <= 3 ? kMins[prj_d - 1] : prj_d;
    }
    if (prj_n_max == 0) {
      static constexpr unsigned kMaxs[] = {6, 10, 13};
      prj_n_max = prj_d <= 3 ? kMaxs[prj_d - 1] : prj_d + 10;
    }
    if (prj_levels == 0) prj_levels = prj_d;
    if (prj_n_min > prj_n_max) return usage_error("need n-min <= n-max");
    rrm_model* model = nullptr;
    if (rrm_status s = rrm_model_projected(prj_d, &model); s != RRM_OK) return run_error(s);
    return run_table(opt, model, prj_n_min, prj_n_max, prj_levels);
  }

  if (weighted->parsed()) {
    if (alphas.empty()) return usage_error("--alphas needs at least one weight");
    if (wgt_levels == 0) wgt_levels = static_cast<unsigned>(alphas.size());
    if (wgt_n_min == 0 || wgt_n_min > wgt_n_max) return usage_error("need 1 <= n-min <= n-max");
    std::vector<const char*> raw;
    raw.reserve(alphas.size());
    for (const auto& a : alphas) raw.push_back(a.c_str());
    rrm_model* model = nullptr;
    if (rrm_status s =
            rrm_model_weighted(raw.data(), static_cast<unsigned>(raw.size()), &model);
        s != RRM_OK) {
      if (s == RRM_ERR_INVALID_ARGUMENT) return usage_error(rrm_last_error());
      return run_error(s);
    }
    return run_table(opt, model, wgt_n_min, wgt_n_max, wgt_levels);
  }

  if (verify->parsed()) {
    ContextHandle ctx;
    if (rrm_status s = ctx.init(opt.precision); s != RRM_OK) return run_error(s);
    unsigned passed = 0, failed = 0;
    char* report = nullptr;
    if (rrm_status s = rrm_verify(ctx.get(), &passed, &failed, &report); s != RRM_OK)
      return run_error(s);
    const int code = emit(opt, report);
    rrm_string_free(report);
    if (code != kExitOk) return code;
    return failed == 0 ? kExitOk : kExitFailure;
  }

  if (demo->parsed()) {
    if (cs_d == 0 || cs_n == 0 || cs_n > cs_d)
      return usage_error("demo-cs needs 1 <= n <= d");
    if (cs_n_min == 0) cs_n_min = cs_d;
    if (cs_n_min < cs_d) return usage_error("demo-cs needs n-min >= d");
    if (cs_n_min > cs_n_max) return usage_error("need n-min <= n-max");
    ContextHandle ctx;
    if (rrm_status s = ctx.init(opt.precision); s != RRM_OK) return run_error(s);
    int all_below = 0;
    char* text = nullptr;
    if (rrm_status s = rrm_cs_demo(ctx.get(), cs_n, cs_d, cs_n_min, cs_n_max,
                                   opt.format.c_str(), opt.digits, &all_below, &text);
        s != RRM_OK)
      return run_error(s);
    const int code = emit(opt, text);
    rrm_string_free(text);
    if (code != kExitOk) return code;
    return all_below ? kExitOk : kExitFailure;
  }

  return usage_error("no command given");
}
