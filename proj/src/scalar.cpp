#include "curvalpha/scalar.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "curvalpha/error.hpp"

namespace curvalpha {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::ZeroMode: return "zero mode";
    case ErrorCode::DegeneratePlane: return "degenerate plane";
    case ErrorCode::DegenerateMode: return "degenerate mode";
    case ErrorCode::DegenerateDirectionSet: return "degenerate direction set";
  }
  return "unknown error";
}

int sign(const Scalar& x) { return sgn(x); }
int sign(const Integer& x) { return sgn(x); }

Scalar pow10(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Scalar(p);
  Scalar r(Integer(1), p);
  r.canonicalize();
  return r;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(ErrorCode::Parse, "cannot parse rational '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) parse_fail(whole);
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) parse_fail(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) parse_fail(text);
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Scalar r(num, den);
    r.canonicalize();
    return r;
  }

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ev = parse_integer(s.substr(e + 1), text);
    if (abs(ev) > 100000) parse_fail(text);
    exponent = static_cast<int>(ev.get_si());
    s = s.substr(0, e);
  }
  std::string digits;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) parse_fail(text);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      parse_fail(text);
    }
  }
  if (digits.empty()) parse_fail(text);
  Scalar r(Integer(digits, 10));
  r *= pow10(exponent);
  r.canonicalize();
  return neg ? Scalar(-r) : r;
}

std::string to_exact_string(const Scalar& x) {
  Scalar c = x;
  c.canonicalize();
  return c.get_str(10);
}

namespace {

// floor(log10(q)) for q > 0, exact.
int floor_log10(const Scalar& q) {
  // Digit-count estimate, off by at most one in either direction.
  long est = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10));
  int e = static_cast<int>(est);
  while (pow10(e) > q) --e;
  while (pow10(e + 1) <= q) ++e;
  return e;
}

// Round-half-away-from-zero of a positive rational to an integer.
Integer round_positive(const Scalar& q) {
  Integer twice_num = 2 * q.get_num() + q.get_den();
  Integer den = 2 * q.get_den();
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), twice_num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

std::string format_decimal(const Scalar& x, int digits) {
  if (digits < 1) digits = 1;
  if (sgn(x) == 0) return "0";
  Scalar a = abs(x);
  int e = floor_log10(a);
  Integer mant = round_positive(a * pow10(digits - 1 - e));
  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  if (mant >= limit) {
    ++e;
    mant = round_positive(a * pow10(digits - 1 - e));
  }
  std::string m = mant.get_str(10);  // exactly `digits` characters

  std::string out = sgn(x) < 0 ? "-" : "";
  auto trim = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  if (e < -4 || e >= digits) {
    std::string body = m.substr(0, 1);
    if (m.size() > 1) body += "." + m.substr(1);
    body = trim(body);
    std::string exp = std::to_string(e < 0 ? -e : e);
    if (exp.size() < 2) exp = "0" + exp;
    out += body + (e < 0 ? "e-" : "e+") + exp;
  } else if (e < 0) {
    out += trim("0." + std::string(static_cast<size_t>(-e - 1), '0') + m);
  } else {
    std::string body = m.substr(0, static_cast<size_t>(e) + 1);
    std::string frac = m.substr(static_cast<size_t>(e) + 1);
    out += frac.empty() ? body : trim(body + "." + frac);
  }
  return out;
}

Scalar sqrt_approx(const Scalar& x, int digits) {
  if (sgn(x) < 0) throw Error(ErrorCode::InvalidArgument, "sqrt of negative value");
  if (sgn(x) == 0) return Scalar(0);
  // Scale so the integer square root carries at least `digits` + 2 significant digits.
  int e = floor_log10(x);
  int shift = digits + 2 - e / 2;
  Scalar scaled = x * pow10(2 * shift);
  Integer floor_scaled;
  mpz_fdiv_q(floor_scaled.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), floor_scaled.get_mpz_t());
  Scalar r = Scalar(root) * pow10(-shift);
  r.canonicalize();
  return r;
}

double to_double(const Scalar& x) { return x.get_d(); }

}  // namespace curvalpha
