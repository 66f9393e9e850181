#pragma once

// Fourier-lattice Lie algebra of zero-mean stream functions on the flat
// 2-torus, with the right-invariant H^1 metric A(k) = |k|^2 (1 + beta |k|^2).

#include <compare>
#include <cstdint>
#include <map>
#include <utility>

#include "curvalpha/scalar.hpp"

namespace curvalpha {

/// Integer point of the dual lattice; indexes the basis function e_k = exp(i(k,x)).
struct WaveVector {
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;

  static constexpr std::int64_t max_component = 2147483647;

  /// Validated constructor for external input (|component| <= 2^31 - 1).
  static WaveVector checked(std::int64_t a, std::int64_t b);

  constexpr bool is_zero() const noexcept { return k1 == 0 && k2 == 0; }

  friend constexpr WaveVector operator+(WaveVector a, WaveVector b) noexcept {
    return {a.k1 + b.k1, a.k2 + b.k2};
  }
  friend constexpr WaveVector operator-(WaveVector a, WaveVector b) noexcept {
    return {a.k1 - b.k1, a.k2 - b.k2};
  }
  friend constexpr WaveVector operator-(WaveVector a) noexcept { return {-a.k1, -a.k2}; }
  friend constexpr WaveVector operator*(std::int64_t s, WaveVector a) noexcept {
    return {s * a.k1, s * a.k2};
  }
  friend constexpr auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

/// beta = alpha^2 >= 0.
class Beta {
 public:
  Beta() = default;
  explicit Beta(Scalar value);
  static Beta from_alpha(const Scalar& alpha) { return Beta(alpha * alpha); }

  const Scalar& value() const noexcept { return value_; }

 private:
  Scalar value_{0};
};

/// Flat torus of area S > 0. S = 1 stands in for the symbolic area.
class TorusGeometry {
 public:
  TorusGeometry() = default;
  explicit TorusGeometry(Scalar area);

  const Scalar& area() const noexcept { return area_; }

 private:
  Scalar area_{1};
};

struct Complex {
  Scalar re{0};
  Scalar im{0};

  Complex conj() const { return {re, -im}; }
  Scalar norm2() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Scalar& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

/// Finitely supported real stream function eta = sum x_l e_l with x_{-l} = conj(x_l).
class FourierStream {
 public:
  using Map = std::map<WaveVector, Complex>;

  FourierStream() = default;
  /// Validates the reality condition and the absence of a zero-mode entry.
  explicit FourierStream(Map coeffs);

  /// cos((k,x)) = (e_k + e_{-k}) / 2.
  static FourierStream cosine(WaveVector k);
  /// sin((k,x)) = (e_k - e_{-k}) / (2i).
  static FourierStream sine(WaveVector k);

  const Map& coeffs() const noexcept { return coeffs_; }
  Complex at(WaveVector k) const;

  FourierStream scaled(const Scalar& s) const;
  friend FourierStream operator+(const FourierStream& a, const FourierStream& b);

 private:
  Map coeffs_;
};

Integer cross(WaveVector k, WaveVector l);
Integer dot(WaveVector k, WaveVector l);
Integer norm2(WaveVector k);

/// |k|^2 (1 + beta |k|^2); zero for k = 0.
Scalar a_alpha(WaveVector k, const Beta& beta);

/// <e_k, e_l> = S A(k) [l = -k].
Scalar inner_basis(WaveVector k, WaveVector l, const Beta& beta, const TorusGeometry& geom);

struct Bracket {
  Scalar coeff;
  WaveVector target;
};

/// [e_k, e_l] = (k x l) e_{k+l}.
Bracket commutator_coeff(WaveVector k, WaveVector l);

/// B(e_k, e_l) = b e_{k+l}, b = (k x l) A(k) / A(k+l); 0 when k + l = 0.
Scalar b_coeff(WaveVector k, WaveVector l, const Beta& beta);

/// nabla_{e_k} e_l = d e_{k+l}, d = (k x l)/2 (1 - (A(k) - A(l)) / A(k+l)); 0 when k + l = 0.
Scalar conn_coeff(WaveVector k, WaveVector l, const Beta& beta);

namespace detail {
// conn_coeff with an arbitrary divisor in place of 2. Only used by the
// verification suite's negative control.
Scalar conn_coeff_with_divisor(WaveVector k, WaveVector l, const Beta& beta, const Scalar& divisor);
void require_nonzero(WaveVector k, const char* what);
}  // namespace detail

}  // namespace curvalpha
