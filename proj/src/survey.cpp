#include "curvalpha/survey.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include <json.hpp>

#include "curvalpha/error.hpp"

namespace curvalpha {

using json = nlohmann::ordered_json;

WaveVector parse_wave_vector(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw Error(ErrorCode::Parse, "expected a wave vector 'a,b', got '" + std::string(text) + "'");
  auto component = [&](std::string_view s) -> std::int64_t {
    Scalar v;
    try {
      v = parse_rational(s);
    } catch (const Error&) {
      throw Error(ErrorCode::Parse, "bad wave vector component in '" + std::string(text) + "'");
    }
    if (v.get_den() != 1 || s.find_first_of("./eE") != std::string_view::npos)
      throw Error(ErrorCode::Parse, "wave vector components must be integers: '" + std::string(text) + "'");
    if (abs(v.get_num()) > WaveVector::max_component)
      throw Error(ErrorCode::Parse, "wave vector component out of range in '" + std::string(text) + "'");
    return v.get_num().get_si();
  };
  return {component(text.substr(0, comma)), component(text.substr(comma + 1))};
}

std::vector<WaveVector> parse_eps_list(std::string_view text) {
  std::vector<WaveVector> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    out.push_back(parse_wave_vector(item));
    if (out.back().is_zero()) throw Error(ErrorCode::Parse, "eps must be nonzero");
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty eps list");
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.steps < 2) throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 steps");
  if (!(spec.alpha_min < spec.alpha_max))
    throw Error(ErrorCode::InvalidArgument, "sweep needs alpha-min < alpha-max");
  if (sgn(spec.alpha_min) < 0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  detail::require_plane(spec.k, spec.l);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(spec.steps));
  Scalar width = spec.alpha_max - spec.alpha_min;
  for (int i = 0; i < spec.steps; ++i) {
    Scalar alpha = spec.alpha_min + width * i / (spec.steps - 1);
    alpha.canonicalize();
    Beta beta = Beta::from_alpha(alpha);
    CurvatureResult c = sectional_cos_cos_normalized(spec.k, spec.l, beta, spec.geom);
    rows.push_back({alpha, c.raw, c.normalized, sgn(bracket_value(spec.k, spec.l, beta))});
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows, int digits) {
  std::string out = "alpha,curvature_raw,curvature_normalized,bracket_sign\n";
  for (const auto& r : rows) {
    out += format_decimal(r.alpha, digits);
    out += ',';
    out += format_decimal(r.curvature_raw, digits);
    out += ',';
    out += format_decimal(r.curvature_normalized, digits);
    out += ',';
    out += std::to_string(r.bracket_sign);
    out += '\n';
  }
  return out;
}

unsigned thread_cap_from_env() {
  const char* v = std::getenv("CURVALPHA_THREADS");
  if (v == nullptr) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n <= 0) return 0;
  return static_cast<unsigned>(std::min(n, 1024L));
}

namespace {

ScanRecord scan_one(WaveVector k, WaveVector eps, const ScanSpec& spec) {
  ScanRecord rec;
  rec.k = k;
  rec.eps = eps;
  rec.k_dot_eps = dot(k, eps);
  auto [below, r] = theorem2_check(k, eps, spec.alpha_cap, spec.options);
  rec.exists = r.exists;
  rec.below_cap = below;
  rec.status = r.status;
  rec.b3_positive = sgn(r.poly.b[3]) > 0;
  if (r.exists) {
    rec.alpha0 = r.alpha0;
    rec.alpha0_times_knorm = sqrt_approx(r.beta_star * Scalar(norm2(k)), spec.options.digits + 3);
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> run_scan(const ScanSpec& spec) {
  if (spec.kmin > spec.kmax) throw Error(ErrorCode::InvalidArgument, "scan needs kmin <= kmax");
  if (spec.kmax > WaveVector::max_component || spec.kmin < -WaveVector::max_component)
    throw Error(ErrorCode::InvalidArgument, "scan bound out of range");
  if (spec.eps.empty()) throw Error(ErrorCode::InvalidArgument, "scan needs at least one eps");

  std::vector<WaveVector> eps = spec.eps;
  std::sort(eps.begin(), eps.end());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());

  std::vector<std::pair<WaveVector, WaveVector>> items;
  for (std::int64_t a = spec.kmin; a <= spec.kmax; ++a) {
    for (std::int64_t b = spec.kmin; b <= spec.kmax; ++b) {
      WaveVector k{a, b};
      if (k.is_zero()) continue;
      for (WaveVector e : eps) {
        if (e.is_zero()) throw Error(ErrorCode::InvalidArgument, "eps must be nonzero");
        WaveVector l = k + e;
        if (l.is_zero() || l == -k) continue;
        items.emplace_back(k, e);
      }
    }
  }

  unsigned threads = spec.threads != 0 ? spec.threads : thread_cap_from_env();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(1, items.size())));

  std::vector<ScanRecord> out(items.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = scan_one(items[i].first, items[i].second, spec);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

ScanSummary summarize(std::span<const ScanRecord> records) {
  ScanSummary s;
  std::vector<Scalar> measured;
  for (const auto& r : records) {
    ++s.records;
    bool with_dot = sgn(r.k_dot_eps) != 0;
    if (with_dot) ++s.with_dot;
    if (r.below_cap) ++s.below_cap;
    if (with_dot && r.below_cap) ++s.below_cap_with_dot;
    if (with_dot && !r.below_cap) s.exceptions.emplace_back(r.k, r.eps);
    if (with_dot && r.alpha0_times_knorm) measured.push_back(*r.alpha0_times_knorm);
  }
  s.measured = measured.size();
  if (!measured.empty()) {
    std::sort(measured.begin(), measured.end());
    s.min_alpha0_knorm = measured.front();
    s.max_alpha0_knorm = measured.back();
    size_t n = measured.size();
    Scalar median = n % 2 == 1 ? measured[n / 2] : Scalar((measured[n / 2 - 1] + measured[n / 2]) / 2);
    median.canonicalize();
    s.median_alpha0_knorm = median;
  }
  return s;
}

namespace {

json decimal_number(const Scalar& x, int digits) {
  std::string text = format_decimal(x, digits);
  double v = 0;
  std::from_chars(text.data(), text.data() + text.size(), v);
  return v;
}

json optional_number(const std::optional<Scalar>& x, int digits) {
  return x ? decimal_number(*x, digits) : json(nullptr);
}

json vector_json(WaveVector v) { return json::array({v.k1, v.k2}); }

json record_json(const ScanRecord& r, int digits) {
  json j;
  j["k"] = vector_json(r.k);
  j["eps"] = vector_json(r.eps);
  j["alpha0"] = optional_number(r.alpha0, digits);
  j["alpha0_times_knorm"] = optional_number(r.alpha0_times_knorm, digits);
  j["b3_positive"] = r.b3_positive;
  j["k_dot_eps"] = r.k_dot_eps.get_si();
  j["exists"] = r.exists;
  j["below_cap"] = r.below_cap;
  j["reason"] = to_string(r.status);
  return j;
}

json summary_object(const ScanSummary& s, int digits) {
  json j;
  j["records"] = s.records;
  j["with_k_dot_eps"] = s.with_dot;
  j["below_cap"] = s.below_cap;
  j["below_cap_with_k_dot_eps"] = s.below_cap_with_dot;
  j["fraction_below_cap_with_k_dot_eps"] =
      s.with_dot == 0 ? json(nullptr) : json(static_cast<double>(s.below_cap_with_dot) / static_cast<double>(s.with_dot));
  j["measured"] = s.measured;
  j["min_alpha0_times_knorm"] = optional_number(s.min_alpha0_knorm, digits);
  j["max_alpha0_times_knorm"] = optional_number(s.max_alpha0_knorm, digits);
  j["median_alpha0_times_knorm"] = optional_number(s.median_alpha0_knorm, digits);
  if (s.min_alpha0_knorm && sgn(*s.min_alpha0_knorm) > 0)
    j["spread_alpha0_times_knorm"] = decimal_number(*s.max_alpha0_knorm / *s.min_alpha0_knorm, digits);
  else
    j["spread_alpha0_times_knorm"] = nullptr;
  json ex = json::array();
  for (const auto& [k, e] : s.exceptions) ex.push_back({{"k", vector_json(k)}, {"eps", vector_json(e)}});
  j["exceptions"] = ex;
  return j;
}

}  // namespace

std::string summary_json(const ScanSummary& summary, int digits) {
  return summary_object(summary, digits).dump();
}

std::string scan_jsonl(std::span<const ScanRecord> records, const ScanSummary& summary, int digits) {
  std::string out;
  for (const auto& r : records) {
    out += record_json(r, digits).dump();
    out += '\n';
  }
  out += json{{"summary", summary_object(summary, digits)}}.dump();
  out += '\n';
  return out;
}

std::string scan_csv(std::span<const ScanRecord> records, int digits) {
  std::string out = "k1,k2,eps1,eps2,alpha0,alpha0_times_knorm,b3_positive,k_dot_eps\n";
  for (const auto& r : records) {
    out += std::to_string(r.k.k1) + ',' + std::to_string(r.k.k2) + ',' + std::to_string(r.eps.k1) + ',' +
           std::to_string(r.eps.k2) + ',';
    out += r.alpha0 ? format_decimal(*r.alpha0, digits) : "";
    out += ',';
    out += r.alpha0_times_knorm ? format_decimal(*r.alpha0_times_knorm, digits) : "";
    out += ',';
    out += r.b3_positive ? "true" : "false";
    out += ',';
    out += r.k_dot_eps.get_str();
    out += '\n';
  }
  return out;
}

std::string alpha0_json(const Alpha0Result& r, const Scalar& alpha_cap, int digits) {
  json j;
  j["exists"] = r.exists;
  j["alpha0"] = r.exists ? decimal_number(r.alpha0, digits) : json(nullptr);
  j["beta_bracket"] = r.exists ? json::array({decimal_number(r.beta_lo, 17), decimal_number(r.beta_hi, 17)})
                               : json(nullptr);
  j["beta_bracket_exact"] =
      r.exists ? json::array({to_exact_string(r.beta_lo), to_exact_string(r.beta_hi)}) : json(nullptr);
  j["positive_roots"] = r.positive_roots;
  j["reason"] = to_string(r.status);
  j["below_cap"] = r.exists && r.beta_star < alpha_cap * alpha_cap;
  j["cubic"] = json::array();
  for (const auto& b : r.poly.b) j["cubic"].push_back(to_exact_string(b));
  return j.dump();
}

}  // namespace curvalpha
