#include "curvalpha/alpha.hpp"

#include <algorithm>

#include "curvalpha/error.hpp"

namespace curvalpha {

Scalar CubicPoly::eval(const Scalar& beta) const {
  Scalar r = b[3];
  for (int i = 2; i >= 0; --i) r = r * beta + b[static_cast<size_t>(i)];
  return r;
}

int CubicPoly::degree() const {
  for (int i = 3; i >= 0; --i)
    if (sgn(b[static_cast<size_t>(i)]) != 0) return i;
  return -1;
}

std::vector<Scalar> interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw Error(ErrorCode::InvalidArgument, "interpolation needs matching, nonempty samples");
  const size_t n = xs.size();
  // Newton divided differences, in place.
  std::vector<Scalar> dd(ys.begin(), ys.end());
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      Scalar h = xs[i] - xs[i - j];
      if (sgn(h) == 0) throw Error(ErrorCode::InvalidArgument, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / h;
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Scalar> coeffs(n, Scalar(0));
  coeffs[0] = dd[n - 1];
  size_t deg = 0;
  for (size_t i = n - 1; i-- > 0;) {
    // coeffs <- coeffs * (x - xs[i]) + dd[i]
    ++deg;
    for (size_t p = deg; p > 0; --p) coeffs[p] = coeffs[p - 1] - xs[i] * coeffs[p];
    coeffs[0] = -xs[i] * coeffs[0] + dd[i];
  }
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

CubicPoly bracket_poly(const RationalVector& k, const RationalVector& l) {
  std::array<Scalar, 4> xs{Scalar(0), Scalar(1), Scalar(2), Scalar(3)};
  std::array<Scalar, 4> ys;
  for (size_t i = 0; i < 4; ++i) ys[i] = bracket_value(k, l, Beta(xs[i]));
  auto c = interpolate(xs, ys);
  CubicPoly p;
  std::copy(c.begin(), c.end(), p.b.begin());
  return p;
}

CubicPoly curvature_poly(WaveVector k, WaveVector l) {
  detail::require_plane(k, l);
  return bracket_poly({Scalar(k.k1), Scalar(k.k2)}, {Scalar(l.k1), Scalar(l.k2)});
}

namespace {

using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar(0));
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Scalar f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.back() = 0;
    trim(a);
  }
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::vector<Poly> sturm_chain(std::span<const Scalar> poly) {
  Poly p(poly.begin(), poly.end());
  trim(p);
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "root count of the zero polynomial");
  Poly g = gcd(p, derivative(p));
  Poly q = g.size() > 1 ? divmod(p, g).first : p;  // squarefree part, same distinct roots
  std::vector<Poly> chain{q};
  Poly next = derivative(q);
  while (!next.empty()) {
    chain.push_back(next);
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : r) c = -c;
    next = std::move(r);
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int roots_above(const std::vector<Poly>& chain, const Scalar& x) {
  std::vector<int> at_x, at_inf;
  for (const auto& p : chain) {
    at_x.push_back(sgn(eval(p, x)));
    at_inf.push_back(sgn(p.back()));
  }
  return variations(at_x) - variations(at_inf);
}

}  // namespace

int count_roots_above(std::span<const Scalar> poly, const Scalar& x) {
  return roots_above(sturm_chain(poly), x);
}

int count_roots_in(std::span<const Scalar> poly, const Scalar& a, const Scalar& b) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "root interval needs a < b");
  auto chain = sturm_chain(poly);
  return roots_above(chain, a) - roots_above(chain, b);
}

const char* to_string(Alpha0Status status) noexcept {
  switch (status) {
    case Alpha0Status::Threshold: return "threshold";
    case Alpha0Status::AlreadyPositive: return "positive at alpha=0";
    case Alpha0Status::FlatDirection: return "flat direction";
    case Alpha0Status::NeverPositive: return "never positive";
    case Alpha0Status::EventuallyNegative: return "eventually negative";
  }
  return "unknown";
}

Alpha0Result find_alpha0(WaveVector k, WaveVector l, const Alpha0Options& options) {
  if (sgn(options.beta_tolerance) <= 0) throw Error(ErrorCode::InvalidArgument, "beta tolerance must be positive");
  Alpha0Result res;
  res.poly = curvature_poly(k, l);
  const int deg = res.poly.degree();
  if (deg < 0) {
    res.status = sgn(cross(k, l)) == 0 ? Alpha0Status::FlatDirection : Alpha0Status::NeverPositive;
    return res;
  }
  std::span<const Scalar> coeffs(res.poly.b.data(), static_cast<size_t>(deg) + 1);
  auto chain = sturm_chain(coeffs);
  res.positive_roots = roots_above(chain, Scalar(0));

  if (sgn(cross(k, l)) == 0) {
    res.status = Alpha0Status::FlatDirection;
    return res;
  }
  const Scalar& lead = res.poly.b[static_cast<size_t>(deg)];
  if (sgn(lead) < 0) {
    res.status = res.positive_roots == 0 ? Alpha0Status::NeverPositive : Alpha0Status::EventuallyNegative;
    return res;
  }
  res.exists = true;
  if (res.positive_roots == 0) {
    res.status = Alpha0Status::AlreadyPositive;
    res.sign_at_lo = sgn(res.poly.b[0]);
    return res;
  }

  // Cauchy bound: every root lies below 1 + max |b_i / lead|.
  Scalar hi = 0;
  for (int i = 0; i < deg; ++i) hi = std::max(hi, Scalar(abs(res.poly.b[static_cast<size_t>(i)] / lead)));
  hi += 1;
  Scalar lo = 0;
  // Invariant: at least one root in (lo, hi], none above hi. Stop once the
  // bracket is narrow, holds exactly one root, and B(lo) != 0.
  while (true) {
    bool narrow = hi - lo <= options.beta_tolerance;
    if (narrow && roots_above(chain, lo) == 1 && sgn(res.poly.eval(lo)) != 0) break;
    Scalar mid = (lo + hi) / 2;
    if (roots_above(chain, mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  lo.canonicalize();
  hi.canonicalize();
  res.status = Alpha0Status::Threshold;
  res.beta_lo = lo;
  res.beta_hi = hi;
  res.beta_star = (lo + hi) / 2;
  res.beta_star.canonicalize();
  res.alpha0 = sqrt_approx(res.beta_star, options.digits + 3);
  res.sign_at_lo = sgn(res.poly.eval(lo));
  return res;
}

std::array<std::array<Scalar, 3>, 4> low_order_coefficients(WaveVector k, WaveVector direction) {
  // b_n is a polynomial of vector degree 6 + 2n <= 12, so 13 nodes in t suffice.
  constexpr int nodes = 13;
  std::vector<Scalar> ts;
  std::array<std::vector<Scalar>, 4> values;
  RationalVector kr{Scalar(k.k1), Scalar(k.k2)};
  for (int i = 1; i <= nodes; ++i) {
    Scalar t(i);
    RationalVector lr{kr.x + t * direction.k1, kr.y + t * direction.k2};
    CubicPoly p = bracket_poly(kr, lr);
    ts.push_back(t);
    for (size_t n = 0; n < 4; ++n) values[n].push_back(p.b[n]);
  }
  std::array<std::array<Scalar, 3>, 4> out;
  for (size_t n = 0; n < 4; ++n) {
    auto c = interpolate(ts, values[n]);
    out[n] = {c[0], c[1], c[2]};
  }
  return out;
}

namespace {

struct PrintedForm {
  int eps2_power;
  long eps2_constant;
  int dot2_power;
  long dot2_constant;
};

// b_n ~ c1 |k|^p eps^2 + c2 |k|^q (k,eps)^2 as printed; b3 has no eps^2 term.
constexpr std::array<PrintedForm, 4> printed_forms{{
    {4, -64, 2, 16},
    {6, -224, 4, 128},
    {8, -640, 6, 320},
    {8, 0, 8, 256},
}};

Scalar norm_power(WaveVector k, int even_power) {
  Integer n = norm2(k);
  Integer r = 1;
  for (int i = 0; i < even_power / 2; ++i) r *= n;
  return Scalar(r);
}

Integer separation(WaveVector k, WaveVector a, WaveVector b) {
  Integer da = dot(k, a), db = dot(k, b);
  return norm2(a) * db * db - norm2(b) * da * da;
}

}  // namespace

EpsExpansion eps_expansion(WaveVector k, WaveVector eps, std::span<const WaveVector> probes) {
  detail::require_nonzero(k, "k");
  detail::require_nonzero(eps, "eps");
  if (eps == -2 * k) throw Error(ErrorCode::DegeneratePlane, "degenerate plane: k + eps = -k");

  auto probe_it = std::find_if(probes.begin(), probes.end(), [&](WaveVector v) {
    return !v.is_zero() && sgn(separation(k, eps, v)) != 0;
  });
  if (probe_it == probes.end())
    throw Error(ErrorCode::DegenerateDirectionSet, "no probe separates |eps|^2 from (k,eps)^2");
  WaveVector probe = *probe_it;
  auto check_it = std::find_if(probe_it + 1, probes.end(), [&](WaveVector v) {
    return !v.is_zero() && sgn(separation(k, eps, v)) != 0 && sgn(separation(k, probe, v)) != 0;
  });

  auto along_eps = low_order_coefficients(k, eps);
  auto along_probe = low_order_coefficients(k, probe);
  std::array<std::array<Scalar, 3>, 4> along_check;
  bool have_check = check_it != probes.end();
  if (have_check) along_check = low_order_coefficients(k, *check_it);

  Scalar e1(norm2(eps)), d1(dot(k, eps));
  d1 *= d1;
  Scalar e2(norm2(probe)), d2(dot(k, probe));
  d2 *= d2;
  Scalar det = e1 * d2 - e2 * d1;

  EpsExpansion out;
  out.k = k;
  out.eps = eps;
  out.probe = probe;
  for (size_t n = 0; n < 4; ++n) {
    EpsCoefficient& c = out.coeffs[n];
    const PrintedForm& form = printed_forms[n];
    c.n = static_cast<int>(n);
    c.t2_coeff = along_eps[n][2];
    c.lower_orders_vanish = sgn(along_eps[n][0]) == 0 && sgn(along_eps[n][1]) == 0 &&
                            sgn(along_probe[n][0]) == 0 && sgn(along_probe[n][1]) == 0;
    const Scalar& q1 = along_eps[n][2];
    const Scalar& q2 = along_probe[n][2];
    // Cramer on [e1 d1; e2 d2] [X; Y] = [q1; q2].
    c.eps2_part = (q1 * d2 - q2 * d1) / det;
    c.dot2_part = (e1 * q2 - e2 * q1) / det;
    c.eps2_part.canonicalize();
    c.dot2_part.canonicalize();
    c.eps2_power = form.eps2_power;
    c.dot2_power = form.dot2_power;
    c.eps2_constant = c.eps2_part / norm_power(k, form.eps2_power);
    c.dot2_constant = c.dot2_part / norm_power(k, form.dot2_power);
    c.eps2_constant.canonicalize();
    c.dot2_constant.canonicalize();
    c.printed_eps2_constant = form.eps2_constant;
    c.printed_dot2_constant = form.dot2_constant;
    c.eps2_matches = c.eps2_constant == Scalar(c.printed_eps2_constant);
    c.dot2_matches = c.dot2_constant == Scalar(c.printed_dot2_constant);
    if (have_check) {
      WaveVector w = *check_it;
      Scalar dw(dot(k, w));
      Scalar predicted = c.eps2_part * Scalar(norm2(w)) + c.dot2_part * dw * dw;
      c.form_consistent = predicted == along_check[n][2] && sgn(along_check[n][0]) == 0 &&
                          sgn(along_check[n][1]) == 0;
    }
  }
  return out;
}

EpsExpansion eps_expansion(WaveVector k, WaveVector eps) {
  const std::array<WaveVector, 10> probes{{
      {-eps.k2, eps.k1},
      k,
      {-k.k2, k.k1},
      {1, 0},
      {0, 1},
      {1, 1},
      {1, -1},
      {2, 1},
      {1, 2},
      {3, 1},
  }};
  return eps_expansion(k, eps, probes);
}

std::pair<bool, Alpha0Result> theorem2_check(WaveVector k, WaveVector eps, const Scalar& alpha_cap,
                                             const Alpha0Options& options) {
  if (sgn(alpha_cap) <= 0) throw Error(ErrorCode::InvalidArgument, "alpha cap must be positive");
  detail::require_nonzero(eps, "eps");
  Alpha0Result r = find_alpha0(k, k + eps, options);
  bool below = r.exists && r.beta_star < alpha_cap * alpha_cap;
  return {below, std::move(r)};
}

}  // namespace curvalpha
