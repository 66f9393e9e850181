#pragma once

// Sign analysis of the cos/cos curvature as a function of alpha: the cubic
// bracket polynomial in beta = alpha^2, its positivity threshold, and the
// small-epsilon structure of its coefficients for l = k + t eps.

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "curvalpha/curvature.hpp"

namespace curvalpha {

/// b0 + b1 beta + b2 beta^2 + b3 beta^3.
struct CubicPoly {
  std::array<Scalar, 4> b{};

  Scalar eval(const Scalar& beta) const;
  /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
  int degree() const;
};

/// Exact bracket polynomial for an admissible plane (k != +-l), obtained by
/// interpolating the bracket at beta = 0, 1, 2, 3.
CubicPoly curvature_poly(WaveVector k, WaveVector l);

/// Same interpolation without admissibility checks, for rational vectors.
CubicPoly bracket_poly(const RationalVector& k, const RationalVector& l);

/// Monomial coefficients (low to high) of the unique polynomial of degree
/// < xs.size() through (xs[i], ys[i]). The xs must be distinct.
std::vector<Scalar> interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys);

/// Number of distinct real roots of `poly` (low-to-high coefficients) in (x, +inf).
int count_roots_above(std::span<const Scalar> poly, const Scalar& x);
/// Number of distinct real roots in (a, b], a < b.
int count_roots_in(std::span<const Scalar> poly, const Scalar& a, const Scalar& b);

enum class Alpha0Status {
  Threshold,           ///< B < 0 just below beta*, B > 0 beyond it
  AlreadyPositive,     ///< B > 0 on (0, inf): alpha0 = 0
  FlatDirection,       ///< k x l = 0, curvature vanishes identically
  NeverPositive,       ///< B <= 0 on (0, inf)
  EventuallyNegative,  ///< leading coefficient negative
};

const char* to_string(Alpha0Status status) noexcept;

struct Alpha0Options {
  Scalar beta_tolerance = pow10(-18);
  int digits = 12;
};

struct Alpha0Result {
  bool exists = false;
  Alpha0Status status = Alpha0Status::NeverPositive;
  CubicPoly poly;
  Scalar beta_star{0};  ///< midpoint of the certified bracket
  Scalar alpha0{0};     ///< sqrt(beta_star) to `digits` + 3 significant digits
  Scalar beta_lo{0};
  Scalar beta_hi{0};
  int positive_roots = 0;  ///< distinct roots of the cubic in (0, inf)
  int sign_at_lo = 0;      ///< exact sign of B(beta_lo)
};

/// Least beta* >= 0 beyond which the bracket stays positive, isolated by
/// Sturm root counting and exact bisection down to `beta_tolerance`.
/// Throws DegeneratePlane for k = +-l.
Alpha0Result find_alpha0(WaveVector k, WaveVector l, const Alpha0Options& options = {});

/// One b_n of the bracket along l = k + t eps, at order t^2, decomposed as
///   t2_coeff = eps2_part |eps|^2 + dot2_part (k,eps)^2
/// and compared against the printed constants
///   eps2_part = c1 |k|^p,  dot2_part = c2 |k|^q.
struct EpsCoefficient {
  int n = 0;
  Scalar t2_coeff{0};
  bool lower_orders_vanish = false;  ///< t^0 and t^1 coefficients are exactly 0
  Scalar eps2_part{0};
  Scalar dot2_part{0};
  int eps2_power = 0;
  int dot2_power = 0;
  Scalar eps2_constant{0};  ///< eps2_part / |k|^p
  Scalar dot2_constant{0};  ///< dot2_part / |k|^q
  Integer printed_eps2_constant;
  Integer printed_dot2_constant;
  bool eps2_matches = false;
  bool dot2_matches = false;
  bool form_consistent = false;  ///< a third direction reproduces the decomposition
};

struct EpsExpansion {
  WaveVector k;
  WaveVector eps;
  WaveVector probe;  ///< second direction used to separate the two quadratic forms
  std::array<EpsCoefficient, 4> coeffs{};
};

/// Exact t^0..t^2 coefficients of b_n(k, k + t v) for n = 0..3, obtained by
/// interpolation in t. Row n holds {t^0, t^1, t^2} of b_n.
std::array<std::array<Scalar, 3>, 4> low_order_coefficients(WaveVector k, WaveVector direction);

EpsExpansion eps_expansion(WaveVector k, WaveVector eps);
/// Uses the first entry of `probes` that separates |v|^2 from (k,v)^2 against eps;
/// the next separating one checks the form. Throws DegenerateDirectionSet if none separates.
EpsExpansion eps_expansion(WaveVector k, WaveVector eps, std::span<const WaveVector> probes);

/// find_alpha0(k, k + eps); the flag is exists && alpha0 < alpha_cap.
std::pair<bool, Alpha0Result> theorem2_check(WaveVector k, WaveVector eps, const Scalar& alpha_cap = Scalar(1),
                                             const Alpha0Options& options = {});

}  // namespace curvalpha
