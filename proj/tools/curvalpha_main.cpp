// curvalpha command-line front end. Links only the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "curvalpha/curvalpha.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_usage = 2;
constexpr int exit_degenerate = 3;

struct ContextDeleter {
  void operator()(cva_context* c) const { cva_context_destroy(c); }
};
using Context = std::unique_ptr<cva_context, ContextDeleter>;

class Failure {
 public:
  explicit Failure(cva_status s) : status(s), message(cva_last_error()) {}
  cva_status status;
  std::string message;
};

void check(cva_status s) {
  if (s != CVA_OK) throw Failure(s);
}

int exit_code(cva_status s) {
  switch (s) {
    case CVA_ERR_DEGENERATE_PLANE: return exit_degenerate;
    case CVA_ERR_INTERNAL: return exit_invariant;
    default: return exit_usage;
  }
}

cva_wave_vector vector_arg(const std::string& text) {
  cva_wave_vector v{};
  check(cva_parse_wave_vector(text.c_str(), &v));
  return v;
}

std::vector<cva_wave_vector> eps_arg(const std::string& text) {
  std::vector<cva_wave_vector> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(vector_arg(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

Context make_context(const std::string& area, int digits) {
  cva_context* raw = nullptr;
  check(cva_context_create(&raw));
  Context ctx(raw);
  check(cva_context_set_area(ctx.get(), area.c_str()));
  check(cva_context_set_digits(ctx.get(), digits));
  return ctx;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return exit_ok;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return exit_usage;
  }
  out << text;
  return out ? exit_ok : exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sectional curvature of area-preserving torus diffeomorphisms under the H^1 (Euler-alpha) metric"};
  app.require_subcommand(1);

  std::string k_text, l_text, alpha = "0", area = "1", out_path;
  bool exact = false;
  int digits = 12;

  auto* curvature = app.add_subcommand("curvature", "Curvature in the plane (cos(k,x), cos(l,x))");
  curvature->add_option("--k", k_text, "wave vector a,b")->required();
  curvature->add_option("--l", l_text, "wave vector c,d")->required();
  curvature->add_option("--alpha", alpha, "alpha as a rational or decimal");
  curvature->add_option("--area", area, "torus area S");
  curvature->add_option("--digits", digits, "significant digits");
  curvature->add_flag("--exact", exact, "print exact rationals");

  std::string alpha_min = "0", alpha_max = "1";
  int steps = 200;
  auto* sweep = app.add_subcommand("sweep", "CSV of the curvature over an alpha grid");
  sweep->add_option("--k", k_text, "wave vector a,b")->required();
  sweep->add_option("--l", l_text, "wave vector c,d")->required();
  sweep->add_option("--alpha-min", alpha_min, "first alpha");
  sweep->add_option("--alpha-max", alpha_max, "last alpha");
  sweep->add_option("--steps", steps, "number of grid points (>= 2)");
  sweep->add_option("--area", area, "torus area S");
  sweep->add_option("--digits", digits, "significant digits");
  sweep->add_option("--out", out_path, "write CSV here instead of stdout");

  std::string cap = "1";
  auto* alpha0 = app.add_subcommand("alpha0", "JSON report of the positivity threshold alpha0");
  alpha0->add_option("--k", k_text, "wave vector a,b")->required();
  alpha0->add_option("--l", l_text, "wave vector c,d")->required();
  alpha0->add_option("--cap", cap, "alpha cap for below_cap");
  alpha0->add_option("--digits", digits, "significant digits");

  std::int64_t kmax = 0;
  std::int64_t kmin = 0;
  std::string eps_text, format = "jsonl";
  auto* scan = app.add_subcommand("scan", "alpha0 over a lattice of wave vectors");
  scan->add_option("--kmax", kmax, "bound on k components")->required();
  auto* kmin_opt = scan->add_option("--kmin", kmin, "lower bound on k components (default -kmax)");
  scan->add_option("--eps", eps_text, "eps list, e.g. \"1,0;0,1;1,1\"")->required();
  scan->add_option("--cap", cap, "alpha cap");
  scan->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_option("--digits", digits, "significant digits");
  scan->add_option("--out", out_path, "write records here instead of stdout");

  std::uint64_t seed = 1;
  int cases = 200, bound = 12;
  std::string divisor = "2";
  auto* verify = app.add_subcommand("verify", "Run the randomized invariant suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--cases", cases, "cases per check");
  verify->add_option("--component-bound", bound, "bound on random wave-vector components");
  verify->add_option("--connection-divisor", divisor, "connection divisor (negative control when != 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*curvature) {
      Context ctx = make_context(area, digits);
      cva_curvature* h = nullptr;
      check(cva_curvature_compute(ctx.get(), vector_arg(k_text), vector_arg(l_text), alpha.c_str(), &h));
      int e = exact ? 1 : 0;
      std::cout << "k: " << k_text << "\n"
                << "l: " << l_text << "\n"
                << "alpha: " << alpha << "\n"
                << "beta: " << cva_curvature_beta(h, e) << "\n"
                << "curvature_raw: " << cva_curvature_raw(h, e) << "\n"
                << "curvature_normalized: " << cva_curvature_normalized(h, e) << "\n"
                << "curvature_closed_form: " << cva_curvature_closed(h, e) << "\n"
                << "bracket_sign: " << cva_curvature_bracket_sign(h) << "\n";
      cva_curvature_destroy(h);
      return exit_ok;
    }
    if (*sweep) {
      Context ctx = make_context(area, digits);
      cva_sweep* h = nullptr;
      check(cva_sweep_compute(ctx.get(), vector_arg(k_text), vector_arg(l_text), alpha_min.c_str(),
                              alpha_max.c_str(), steps, &h));
      std::string csv = cva_sweep_csv(h);
      cva_sweep_destroy(h);
      return emit(csv, out_path);
    }
    if (*alpha0) {
      Context ctx = make_context(area, digits);
      cva_alpha0* h = nullptr;
      check(cva_alpha0_compute(ctx.get(), vector_arg(k_text), vector_arg(l_text), cap.c_str(), &h));
      std::cout << cva_alpha0_json(h) << "\n";
      cva_alpha0_destroy(h);
      return exit_ok;
    }
    if (*scan) {
      Context ctx = make_context(area, digits);
      std::vector<cva_wave_vector> eps = eps_arg(eps_text);
      std::int64_t lo = kmin_opt->count() > 0 ? kmin : -kmax;
      cva_scan* h = nullptr;
      check(cva_scan_compute(ctx.get(), lo, kmax, eps.data(), eps.size(), cap.c_str(), &h));
      std::string body = format == "csv" ? cva_scan_csv(h) : cva_scan_jsonl(h);
      std::string summary = cva_scan_summary_json(h);
      cva_scan_destroy(h);
      int rc = emit(body, out_path);
      if (format == "csv") std::cerr << summary << "\n";
      return rc;
    }
    if (*verify) {
      cva_verify* h = nullptr;
      check(cva_verify_run(seed, cases, bound, divisor.c_str(), &h));
      std::cout << cva_verify_report(h);
      bool ok = cva_verify_passed(h) != 0;
      cva_verify_destroy(h);
      return ok ? exit_ok : exit_invariant;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  }
  return exit_usage;
}
