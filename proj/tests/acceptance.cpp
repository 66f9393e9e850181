// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: curvalpha_acceptance <path-to-curvalpha-cli>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curvalpha/alpha.hpp"
#include "curvalpha/error.hpp"
#include "curvalpha/survey.hpp"
#include "curvalpha/verify.hpp"
#include "oracle/sparse_algebra.hpp"

using namespace curvalpha;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "\n    failed: " << what;
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0) {
    std::ostringstream lim;
    lim << "runtime " << secs << " s < " << limit_s << " s";
    out.require(secs < limit_s, lim.str());
  }
  if (!out.ok) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", secs);
  std::cout << (out.ok ? "PASS " : "FAIL ") << id << " " << title << " [" << t << " s]" << out.detail.str()
            << std::endl;
}

std::string show(WaveVector v) { return "(" + std::to_string(v.k1) + "," + std::to_string(v.k2) + ")"; }

struct Rng {
  std::mt19937_64 gen;
  std::uniform_int_distribution<std::int64_t> comp{-12, 12};
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  WaveVector nonzero() {
    for (;;) {
      WaveVector v{comp(gen), comp(gen)};
      if (!v.is_zero()) return v;
    }
  }
  Beta beta() {
    static const Scalar grid[] = {Scalar(0), Scalar(1, 4), Scalar(1), Scalar(9, 4)};
    return Beta(grid[std::uniform_int_distribution<int>(0, 3)(gen)]);
  }
  std::pair<WaveVector, WaveVector> plane() {
    for (;;) {
      WaveVector k = nonzero(), l = nonzero();
      if (k != l && k != -l) return {k, l};
    }
  }
};

const CheckResult* find_check(const VerifyReport& r, const std::string& name) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

void expect_checks(Outcome& out, const VerifyReport& r, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const CheckResult* c = find_check(r, n);
    if (c == nullptr) {
      out.require(false, std::string("missing check ") + n);
      continue;
    }
    out.detail << "\n    " << n << ": " << c->cases << " cases, " << c->failures << " failures";
    out.require(c->cases >= 200 && c->passed(), std::string(n) + (c->passed() ? " (too few cases)" : ": " + c->first_failure));
  }
}

std::string run_capture(const std::string& cmd, int& rc) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    rc = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  rc = pclose(p);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "curvalpha";
  const TorusGeometry unit;

  criterion("C1", "algebraic identities exact", 10, [&](Outcome& out) {
    VerifyOptions opt;
    opt.cases = 200;
    VerifyReport r = run_verify(opt);
    expect_checks(out, r, {"commutator antisymmetry", "Jacobi identity", "B-adjoint identity",
                           "torsion-free connection", "metric compatibility"});
    // Cross-check the closed-form coefficients against the adjoint/Koszul oracle.
    Rng rng(101);
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
      WaveVector k = rng.nonzero(), l = rng.nonzero();
      Beta b = rng.beta();
      oracle::SparseAlgebra alg(b.value(), Scalar(1));
      auto bkl = alg.b_form(oracle::basis(k), oracle::basis(l));
      auto dkl = alg.connection(oracle::basis(k), oracle::basis(l));
      Scalar ob = bkl.count(k + l) ? bkl[k + l] : Scalar(0);
      Scalar od = dkl.count(k + l) ? dkl[k + l] : Scalar(0);
      if (ob != b_coeff(k, l, b) || od != conn_coeff(k, l, b)) ++mismatches;
    }
    out.detail << "\n    oracle coefficient mismatches: " << mismatches << " / 200";
    out.require(mismatches == 0, "coefficients disagree with the oracle");
  });

  criterion("C2", "curvature symmetries exact", 30, [&](Outcome& out) {
    VerifyOptions opt;
    opt.cases = 200;
    VerifyReport r = run_verify(opt);
    expect_checks(out, r, {"curvature first-slot antisymmetry", "curvature pair symmetry", "first Bianchi identity"});
    Rng rng(202);
    int mismatches = 0, n = 0;
    while (n < 200) {
      WaveVector k = rng.nonzero(), l = rng.nonzero(), m = rng.nonzero();
      WaveVector q = -(k + l + m);
      if (q.is_zero()) continue;
      ++n;
      Beta b = rng.beta();
      oracle::SparseAlgebra alg(b.value(), Scalar(1));
      if (alg.r_coeff(k, l, m, q) != r_coeff(k, l, m, b, unit)) ++mismatches;
    }
    out.detail << "\n    oracle R mismatches: " << mismatches << " / " << n;
    out.require(mismatches == 0, "curvature coefficients disagree with the oracle");
  });

  criterion("C3", "L2 limit matches Arnold up to one constant", 0, [&](Outcome& out) {
    Rng rng(303);
    const Beta zero;
    std::optional<Scalar> kappa;
    int pairs = 0, ratio_bad = 0, positive = 0;
    while (pairs < 150) {
      auto [k, l] = rng.plane();
      if (sgn(cross(k, l)) == 0) continue;
      ++pairs;
      Scalar r = sectional_cos_cos_normalized(k, l, zero, unit).normalized / arnold_cos_cos(k, l, unit);
      if (!kappa) kappa = r;
      if (r != *kappa) ++ratio_bad;
      if (sgn(sectional_cos_cos_closed(k, l, zero, unit)) > 0) ++positive;
    }
    out.detail << "\n    pairs " << pairs << ", kappa = " << to_exact_string(*kappa);
    out.require(ratio_bad == 0, std::to_string(ratio_bad) + " pairs with a different ratio");
    out.require(positive == 0, std::to_string(positive) + " pairs with positive curvature at beta=0");
  });

  criterion("C4", "raw and closed-form routes differ by one constant", 0, [&](Outcome& out) {
    Rng rng(404);
    std::optional<Scalar> ratio;
    int triples = 0, bad = 0;
    while (triples < 150) {
      auto [k, l] = rng.plane();
      if (sgn(cross(k, l)) == 0) continue;
      Beta b = rng.beta();
      ++triples;
      Scalar r = sectional_cos_cos_raw(k, l, b, unit) / sectional_cos_cos_closed(k, l, b, unit);
      if (!ratio) ratio = r;
      if (r != *ratio) ++bad;
    }
    VerifyOptions opt;
    opt.cases = 20;
    VerifyReport rep = run_verify(opt);
    out.detail << "\n    triples " << triples << ", raw/closed = " << to_exact_string(*ratio)
               << ", verify reports " << (rep.route_ratio ? to_exact_string(*rep.route_ratio) : "none");
    out.require(bad == 0, std::to_string(bad) + " triples with a different ratio");
    out.require(rep.route_ratio && *rep.route_ratio == *ratio, "verify report does not print the same constant");
  });

  criterion("C5", "alpha sweep for k=(9,11), l=(11,12)", 5, [&](Outcome& out) {
    SweepSpec spec;
    spec.k = {9, 11};
    spec.l = {11, 12};
    spec.steps = 200;
    auto rows = run_sweep(spec);
    const SweepRow& first = rows.front();
    auto min_it = std::min_element(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
      return a.curvature_normalized < b.curvature_normalized;
    });
    CubicPoly p = curvature_poly(spec.k, spec.l);
    std::vector<Scalar> coeffs(p.b.begin(), p.b.end());
    int roots = count_roots_in(coeffs, Scalar(0), Scalar(1));
    out.detail << "\n    K(0) = " << format_decimal(first.curvature_normalized) << ", min K = "
               << format_decimal(min_it->curvature_normalized) << " at alpha = " << format_decimal(min_it->alpha)
               << ", K(1) = " << format_decimal(rows.back().curvature_normalized)
               << ", roots in beta (0,1]: " << roots;
    out.require(sgn(first.curvature_normalized) < 0, "curvature not negative at alpha=0");
    out.require(min_it->curvature_normalized < first.curvature_normalized, "no initial decrease");
    out.require(sgn(p.eval(Scalar(0))) < 0 && sgn(p.eval(Scalar(1))) > 0 && roots == 1,
                "not exactly one certified sign change");
    out.require(sgn(rows.back().curvature_normalized) > 0, "curvature not positive at alpha=1");
  });

  // Shared by C6 and C7.
  ScanSpec scan;
  scan.kmin = 1;
  scan.kmax = 20;
  scan.eps = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<ScanRecord> records;

  criterion("C6", "alpha0 exists in (0,1) across the k in [1,20]^2 scan", 120, [&](Outcome& out) {
    records = run_scan(scan);
    int total = 0, ok = 0, band = 0, band_ok = 0;
    std::vector<std::string> band_exceptions;
    for (const ScanRecord& r : records) {
      if (sgn(r.k_dot_eps) == 0) continue;
      ++total;
      bool good = r.exists && r.below_cap;
      ok += good;
      if (norm2(r.k) >= 25) {
        ++band;
        band_ok += good;
        if (!good) band_exceptions.push_back("k=" + show(r.k) + " eps=" + show(r.eps) + " (" + to_string(r.status) + ")");
      }
    }
    double frac = 100.0 * ok / total;
    out.detail << "\n    overall " << ok << "/" << total << " (" << frac << "%), |k|>=5 band " << band_ok << "/"
               << band;
    for (const std::string& e : band_exceptions) out.detail << "\n    exception " << e;
    out.require(ok * 100 >= 95 * total, "fewer than 95% of cases have alpha0 in (0,1)");
    out.require(band_ok == band, std::to_string(band - band_ok) + " exceptions in the |k|>=5 band");
  });

  criterion("C7", "alpha0*|k| bounded for eps=(1,1)", 0, [&](Outcome& out) {
    if (records.empty()) records = run_scan(scan);
    std::optional<Scalar> lo, hi;
    int n = 0;
    for (const ScanRecord& r : records) {
      if (r.eps != WaveVector{1, 1} || !r.alpha0_times_knorm) continue;
      ++n;
      const Scalar& v = *r.alpha0_times_knorm;
      if (!lo || v < *lo) lo = v;
      if (!hi || v > *hi) hi = v;
    }
    out.require(n > 0 && lo && sgn(*lo) > 0, "no measured records");
    if (!lo || sgn(*lo) <= 0) return;
    Scalar spread = *hi / *lo;
    out.detail << "\n    " << n << " records, alpha0*|k| in [" << format_decimal(*lo) << ", " << format_decimal(*hi)
               << "], spread " << format_decimal(spread);
    out.require(spread <= 10, "spread exceeds 10");
  });

  criterion("C8", "eps-expansion structure of b0..b3", 0, [&](Outcome& out) {
    std::vector<std::pair<WaveVector, WaveVector>> pairs;
    Rng rng(808);
    while (pairs.size() < 24) {
      WaveVector k = rng.nonzero();
      WaveVector e{std::uniform_int_distribution<std::int64_t>(-3, 3)(rng.gen),
                   std::uniform_int_distribution<std::int64_t>(-3, 3)(rng.gen)};
      if (e.is_zero() || e == -2 * k) continue;
      pairs.emplace_back(k, e);
    }
    int bad = 0;
    std::ostringstream table;
    table << "\n    n  |k|^p  eps2 const  printed  match  |k|^q  dot2 const  printed  match";
    std::array<std::optional<std::pair<Scalar, Scalar>>, 4> constants;
    bool uniform = true;
    for (auto [k, e] : pairs) {
      EpsExpansion x = eps_expansion(k, e);
      WaveVector perp{-k.k2, k.k1};
      auto along_perp = low_order_coefficients(k, perp);
      Integer d = dot(k, e);
      for (int n = 0; n < 4; ++n) {
        const EpsCoefficient& c = x.coeffs[n];
        bool good = c.lower_orders_vanish && c.form_consistent;
        if (n == 3) {
          good = good && sgn(c.eps2_part) == 0 && sgn(c.dot2_part) > 0 && c.t2_coeff == c.dot2_part * Scalar(d * d);
        } else {
          good = good && sgn(c.eps2_part) < 0 && sgn(along_perp[n][2]) < 0;
        }
        if (!good) {
          ++bad;
          out.detail << "\n    bad b" << n << " for k=" << show(k) << " eps=" << show(e);
        }
        auto pc = std::make_pair(c.eps2_constant, c.dot2_constant);
        if (!constants[n]) constants[n] = pc;
        uniform = uniform && *constants[n] == pc;
      }
    }
    EpsExpansion ref = eps_expansion(pairs.front().first, pairs.front().second);
    for (const EpsCoefficient& c : ref.coeffs) {
      table << "\n    " << c.n << "  " << c.eps2_power << "  " << to_exact_string(c.eps2_constant) << "  "
            << c.printed_eps2_constant.get_str() << "  " << (c.eps2_matches ? "yes" : "no") << "  " << c.dot2_power
            << "  " << to_exact_string(c.dot2_constant) << "  " << c.printed_dot2_constant.get_str() << "  "
            << (c.dot2_matches ? "yes" : "no");
    }
    out.detail << "\n    " << pairs.size() << " (k,eps) pairs, constants uniform: " << (uniform ? "yes" : "no")
               << table.str();
    out.require(bad == 0, "structural checks failed");
    out.require(uniform, "decomposition constants vary between pairs");
  });

  criterion("C9", "CLI sweep and scan outputs are byte-identical across runs", 0, [&](Outcome& out) {
    const std::string sweep = "'" + cli + "' sweep --k 9,11 --l 11,12 --alpha-min 0 --alpha-max 1 --steps 200";
    const std::string scan_cmd = "'" + cli + "' scan --kmin 1 --kmax 8 --eps '1,0;0,1;1,1'";
    int rc1 = 0, rc2 = 0, rc3 = 0, rc4 = 0;
    std::string a = run_capture(sweep, rc1), b = run_capture(sweep, rc2);
    std::string c = run_capture("CURVALPHA_THREADS=1 " + scan_cmd, rc3);
    std::string d = run_capture("CURVALPHA_THREADS=4 " + scan_cmd, rc4);
    out.detail << "\n    sweep " << a.size() << " bytes, scan " << c.size() << " bytes";
    out.require(rc1 == 0 && rc2 == 0 && rc3 == 0 && rc4 == 0, "CLI exited with an error");
    out.require(!a.empty() && a == b, "sweep outputs differ");
    out.require(!c.empty() && c == d, "scan outputs differ");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
