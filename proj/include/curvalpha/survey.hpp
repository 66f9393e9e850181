#pragma once

// Alpha sweeps, lattice scans for the positivity threshold, and their
// CSV / JSON renderings.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvalpha/alpha.hpp"

namespace curvalpha {

WaveVector parse_wave_vector(std::string_view text);
/// "1,0;0,1;1,1" -> {(1,0), (0,1), (1,1)}. Throws Error(Parse).
std::vector<WaveVector> parse_eps_list(std::string_view text);

struct SweepRow {
  Scalar alpha;
  Scalar curvature_raw;
  Scalar curvature_normalized;
  int bracket_sign = 0;
};

struct SweepSpec {
  WaveVector k;
  WaveVector l;
  Scalar alpha_min{0};
  Scalar alpha_max{1};
  int steps = 200;
  TorusGeometry geom;
};

/// Rows at alpha_i = alpha_min + i (alpha_max - alpha_min) / (steps - 1).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header `alpha,curvature_raw,curvature_normalized,bracket_sign`, LF rows.
std::string sweep_csv(std::span<const SweepRow> rows, int digits = 12);

struct ScanRecord {
  WaveVector k;
  WaveVector eps;
  bool exists = false;
  bool below_cap = false;
  Alpha0Status status = Alpha0Status::NeverPositive;
  std::optional<Scalar> alpha0;
  std::optional<Scalar> alpha0_times_knorm;
  bool b3_positive = false;
  Integer k_dot_eps;
};

struct ScanSpec {
  std::int64_t kmin = -3;
  std::int64_t kmax = 3;
  std::vector<WaveVector> eps;
  Scalar alpha_cap{1};
  /// 0 picks CURVALPHA_THREADS, else the hardware concurrency.
  unsigned threads = 0;
  Alpha0Options options;
};

/// One record per (k, eps) with k in [kmin, kmax]^2 \ {0} and l = k + eps
/// admissible, ordered by k then eps (lexicographic), independent of threads.
std::vector<ScanRecord> run_scan(const ScanSpec& spec);

struct ScanSummary {
  std::size_t records = 0;
  std::size_t with_dot = 0;                 ///< (k,eps) != 0
  std::size_t below_cap = 0;                ///< exists and alpha0 < cap
  std::size_t below_cap_with_dot = 0;
  std::size_t measured = 0;                 ///< (k,eps) != 0 and alpha0 present
  std::optional<Scalar> min_alpha0_knorm;   ///< over the measured records
  std::optional<Scalar> max_alpha0_knorm;
  std::optional<Scalar> median_alpha0_knorm;
  std::vector<std::pair<WaveVector, WaveVector>> exceptions;  ///< (k,eps) != 0 without alpha0 < cap
};

ScanSummary summarize(std::span<const ScanRecord> records);

std::string scan_jsonl(std::span<const ScanRecord> records, const ScanSummary& summary, int digits = 12);
std::string scan_csv(std::span<const ScanRecord> records, int digits = 12);
std::string summary_json(const ScanSummary& summary, int digits = 12);

/// {exists, alpha0, beta_bracket, positive_roots, ...} as one JSON object.
std::string alpha0_json(const Alpha0Result& result, const Scalar& alpha_cap, int digits = 12);

/// Parsed CURVALPHA_THREADS, or 0 when unset or invalid.
unsigned thread_cap_from_env();

}  // namespace curvalpha
