#include "curvalpha/curvature.hpp"

#include <set>

#include "curvalpha/error.hpp"

namespace curvalpha {

const char* to_string(CurvatureRoute route) noexcept {
  switch (route) {
    case CurvatureRoute::RSum: return "r-sum";
    case CurvatureRoute::ClosedForm: return "closed-form";
    case CurvatureRoute::ArnoldL2: return "arnold-l2";
  }
  return "unknown";
}

namespace detail {

void require_plane(WaveVector k, WaveVector l) {
  require_nonzero(k, "k");
  require_nonzero(l, "l");
  if (k == l || k == -l) throw Error(ErrorCode::DegeneratePlane, "degenerate plane: k = +-l");
}

}  // namespace detail

namespace {

// nabla_{e_a} e_b coefficient; products that route through the excluded zero
// mode vanish.
Scalar conn_or_zero(WaveVector a, WaveVector b, const Beta& beta) {
  if (a.is_zero() || b.is_zero()) return 0;
  return conn_coeff(a, b, beta);
}

}  // namespace

Scalar r_coeff(WaveVector k, WaveVector l, WaveVector m, const Beta& beta, const TorusGeometry& geom) {
  detail::require_nonzero(k, "k");
  detail::require_nonzero(l, "l");
  detail::require_nonzero(m, "m");
  WaveVector target = k + l + m;
  detail::require_nonzero(target, "n = -(k+l+m)");

  // -nabla_k nabla_l e_m
  Scalar c = -conn_or_zero(l, m, beta) * conn_or_zero(k, l + m, beta);
  // +nabla_l nabla_k e_m
  c += conn_or_zero(k, m, beta) * conn_or_zero(l, k + m, beta);
  // +nabla_[e_k,e_l] e_m
  c += Scalar(cross(k, l)) * conn_or_zero(k + l, m, beta);

  Scalar r = c * geom.area() * a_alpha(target, beta);
  r.canonicalize();
  return r;
}

Scalar r_coeff(WaveVector k, WaveVector l, WaveVector m, WaveVector n, const Beta& beta,
               const TorusGeometry& geom) {
  detail::require_nonzero(n, "n");
  if (!(k + l + m + n).is_zero()) {
    detail::require_nonzero(k, "k");
    detail::require_nonzero(l, "l");
    detail::require_nonzero(m, "m");
    return 0;
  }
  return r_coeff(k, l, m, beta, geom);
}

Scalar r_coeff_paper(WaveVector k, WaveVector l, WaveVector m, const Beta& beta, const TorusGeometry& geom) {
  detail::require_nonzero(k, "k");
  detail::require_nonzero(l, "l");
  detail::require_nonzero(m, "m");
  WaveVector target = k + l + m;
  if (target.is_zero()) return 0;

  // d_{p,q} is the coefficient of nabla_{e_p} e_{q-p}.
  auto d = [&](WaveVector p, WaveVector q) { return conn_or_zero(p, q - p, beta); };
  Scalar c = -d(l + m, target) * d(m, l + m);
  c += d(k + m, target) * d(m, k + m);
  c += Scalar(cross(k, l)) * d(m, target);
  Scalar r = c * a_alpha(target, beta) * geom.area();
  r.canonicalize();
  return r;
}

Scalar sectional_cos_cos_raw(WaveVector k, WaveVector l, const Beta& beta, const TorusGeometry& geom) {
  detail::require_plane(k, l);
  Scalar r = (r_coeff(k, l, -k, beta, geom) + r_coeff(-k, l, k, beta, geom)) / 8;
  r.canonicalize();
  return r;
}

Scalar bracket_value(const RationalVector& k, const RationalVector& l, const Beta& beta) {
  auto a = [&](const Scalar& x, const Scalar& y) {
    Scalar n = x * x + y * y;
    return Scalar(n * (1 + beta.value() * n));
  };
  Scalar ak = a(k.x, k.y);
  Scalar al = a(l.x, l.y);
  Scalar ap = a(k.x + l.x, k.y + l.y);
  Scalar am = a(k.x - l.x, k.y - l.y);
  Scalar diff = ak - al;
  Scalar r = ap * am * (4 * ak + 4 * al - 3 * ap - 3 * am) + diff * diff * (ap + am);
  r.canonicalize();
  return r;
}

Scalar bracket_value(WaveVector k, WaveVector l, const Beta& beta) {
  return bracket_value(RationalVector{Scalar(k.k1), Scalar(k.k2)}, RationalVector{Scalar(l.k1), Scalar(l.k2)},
                       beta);
}

Scalar sectional_cos_cos_closed(WaveVector k, WaveVector l, const Beta& beta, const TorusGeometry& geom) {
  detail::require_plane(k, l);
  Scalar c(cross(k, l));
  Scalar rho2 = geom.area() * c * c / (36 * a_alpha(k + l, beta) * a_alpha(k - l, beta));
  Scalar r = rho2 * bracket_value(k, l, beta);
  r.canonicalize();
  return r;
}

CurvatureResult sectional_cos_cos_normalized(WaveVector k, WaveVector l, const Beta& beta,
                                             const TorusGeometry& geom) {
  Scalar raw = sectional_cos_cos_raw(k, l, beta, geom);
  // <cos k, cos k> = S A(k) / 2 and <cos k, cos l> = 0 for k != +-l.
  Scalar gram = geom.area() * a_alpha(k, beta) / 2 * geom.area() * a_alpha(l, beta) / 2;
  Scalar normalized = raw / gram;
  normalized.canonicalize();
  return {raw, normalized, CurvatureRoute::RSum, beta, k, l};
}

Scalar inner(const FourierStream& xi, const FourierStream& eta, const Beta& beta, const TorusGeometry& geom) {
  Complex sum;
  for (const auto& [a, xa] : xi.coeffs()) {
    Complex eb = eta.at(-a);
    if (eb.is_zero()) continue;
    sum = sum + (geom.area() * a_alpha(a, beta)) * (xa * eb);
  }
  // Real streams give a real pairing.
  if (sgn(sum.im) != 0) throw Error(ErrorCode::InvalidArgument, "inner product of real streams is not real");
  sum.re.canonicalize();
  return sum.re;
}

CurvatureResult sectional_general(const FourierStream& xi, const FourierStream& eta, const Beta& beta,
                                  const TorusGeometry& geom) {
  Scalar gram = inner(xi, xi, beta, geom) * inner(eta, eta, beta, geom);
  Scalar cross_term = inner(xi, eta, beta, geom);
  gram -= cross_term * cross_term;
  if (sgn(gram) == 0) throw Error(ErrorCode::DegeneratePlane, "degenerate plane: Gram determinant is zero");

  Complex sum;
  for (const auto& [a, xa] : xi.coeffs()) {
    for (const auto& [b, eb] : eta.coeffs()) {
      for (const auto& [c, xc] : xi.coeffs()) {
        WaveVector d = -(a + b + c);
        Complex ed = eta.at(d);
        if (ed.is_zero()) continue;
        Scalar r = r_coeff(a, b, c, beta, geom);
        if (sgn(r) == 0) continue;
        sum = sum + r * (xa * eb * xc * ed);
      }
    }
  }
  if (sgn(sum.im) != 0) throw Error(ErrorCode::InvalidArgument, "curvature of real streams is not real");
  Scalar raw = sum.re;
  raw.canonicalize();
  Scalar normalized = raw / gram;
  normalized.canonicalize();
  return {raw, normalized, CurvatureRoute::RSum, beta, WaveVector{}, WaveVector{}};
}

Scalar arnold_general(WaveVector k, const FourierStream& eta, const TorusGeometry& geom) {
  detail::require_nonzero(k, "k");
  std::set<WaveVector> indices;
  for (const auto& [l, x] : eta.coeffs()) {
    indices.insert(l);
    indices.insert(l - 2 * k);
  }
  Scalar sum = 0;
  for (WaveVector l : indices) {
    WaveVector s = k + l;
    if (s.is_zero()) continue;
    Scalar c(cross(k, l));
    Scalar a2 = c * c * c * c / Scalar(norm2(s));
    Complex x = eta.at(l) + eta.at(l + 2 * k);
    sum += a2 * x.norm2();
  }
  Scalar r = -geom.area() / 4 * sum;
  r.canonicalize();
  return r;
}

Scalar arnold_cos_cos(WaveVector k, WaveVector l, const TorusGeometry& geom) {
  detail::require_plane(k, l);
  Scalar kl(cross(k, l));
  Scalar pm(cross(k + l, k - l));
  Scalar nk(norm2(k));
  Scalar nl(norm2(l));
  Scalar sin2_angle_kl = kl * kl / (nk * nl);
  Scalar sin2_angle_diag = pm * pm / (Scalar(norm2(k + l)) * Scalar(norm2(k - l)));
  Scalar r = -(nk + nl) * sin2_angle_kl * sin2_angle_diag / (4 * geom.area());
  r.canonicalize();
  return r;
}

}  // namespace curvalpha
