#pragma once

// Curvature of the H^1 metric on the area-preserving diffeomorphism group of
// the 2-torus, plus Arnold's L^2 formulas used as the beta = 0 oracle.

#include "curvalpha/lattice.hpp"

namespace curvalpha {

enum class CurvatureRoute { RSum, ClosedForm, ArnoldL2 };

const char* to_string(CurvatureRoute route) noexcept;

struct CurvatureResult {
  Scalar raw;         ///< <R(xi,eta)xi, eta>
  Scalar normalized;  ///< raw / (<xi,xi><eta,eta> - <xi,eta>^2)
  CurvatureRoute route = CurvatureRoute::RSum;
  Beta beta;
  WaveVector k;
  WaveVector l;
};

/// <R(e_k,e_l)e_m, e_n> with n = -(k+l+m), where
/// R(X,Y)Z = -nabla_X nabla_Y Z + nabla_Y nabla_X Z + nabla_[X,Y] Z.
Scalar r_coeff(WaveVector k, WaveVector l, WaveVector m, const Beta& beta, const TorusGeometry& geom);

/// Pairing against an explicit fourth index; zero unless k + l + m + n = 0.
Scalar r_coeff(WaveVector k, WaveVector l, WaveVector m, WaveVector n, const Beta& beta,
               const TorusGeometry& geom);

/// The three-term connection product exactly as printed for R_{k,l,m,n}, with
/// d_{p,q} read as conn_coeff(p, q - p). Cross-check only; r_coeff is authoritative.
/// Returns 0 when k + l + m = 0 (the A(k+l+m) factor vanishes).
Scalar r_coeff_paper(WaveVector k, WaveVector l, WaveVector m, const Beta& beta, const TorusGeometry& geom);

/// (R_{k,l,-k,-l} + R_{-k,l,k,-l}) / 8 for xi = cos(k,x), eta = cos(l,x).
Scalar sectional_cos_cos_raw(WaveVector k, WaveVector l, const Beta& beta, const TorusGeometry& geom);

/// rho^2 times the cubic bracket, rho^2 = S (k x l)^2 / (36 A(k+l) A(k-l)).
Scalar sectional_cos_cos_closed(WaveVector k, WaveVector l, const Beta& beta, const TorusGeometry& geom);

CurvatureResult sectional_cos_cos_normalized(WaveVector k, WaveVector l, const Beta& beta,
                                             const TorusGeometry& geom);

/// Multilinear expansion of <R(xi,eta)xi,eta> over zero-sum index quadruples.
CurvatureResult sectional_general(const FourierStream& xi, const FourierStream& eta, const Beta& beta,
                                  const TorusGeometry& geom);

/// Complex-bilinear <xi, eta> = sum_a xi_a eta_{-a} S A(a).
Scalar inner(const FourierStream& xi, const FourierStream& eta, const Beta& beta, const TorusGeometry& geom);

/// -(S/4) sum_l a_{kl}^2 |x_l + x_{l+2k}|^2, a_{kl} = (k x l)^2 / |k+l|.
/// Unnormalized curvature in the plane (cos(k,x), eta) for the L^2 metric.
Scalar arnold_general(WaveVector k, const FourierStream& eta, const TorusGeometry& geom);

/// -(|k|^2 + |l|^2) sin^2(angle(k,l)) sin^2(angle(k+l,k-l)) / (4S), via exact sin^2.
Scalar arnold_cos_cos(WaveVector k, WaveVector l, const TorusGeometry& geom);

struct RationalVector {
  Scalar x{0};
  Scalar y{0};
};

/// The cubic-in-beta bracket whose sign is the sign of the cos/cos curvature:
///   A+ A- (4A(k) + 4A(l) - 3A+ - 3A-) + (A(k) - A(l))^2 (A+ + A-),
/// A+ = A(k+l), A- = A(k-l). A polynomial, so it is defined for any
/// rational k, l.
Scalar bracket_value(const RationalVector& k, const RationalVector& l, const Beta& beta);
Scalar bracket_value(WaveVector k, WaveVector l, const Beta& beta);

namespace detail {
/// Throws ZeroMode for a zero vector, DegeneratePlane for k = +-l.
void require_plane(WaveVector k, WaveVector l);
}

}  // namespace curvalpha
