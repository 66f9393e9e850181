#include "curvalpha/lattice.hpp"

#include <string>

#include "curvalpha/error.hpp"

namespace curvalpha {

WaveVector WaveVector::checked(std::int64_t a, std::int64_t b) {
  if (a > max_component || a < -max_component || b > max_component || b < -max_component)
    throw Error(ErrorCode::InvalidArgument, "wave vector component out of range");
  return {a, b};
}

Beta::Beta(Scalar value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw Error(ErrorCode::InvalidArgument, "beta must be nonnegative");
}

TorusGeometry::TorusGeometry(Scalar area) : area_(std::move(area)) {
  area_.canonicalize();
  if (sgn(area_) <= 0) throw Error(ErrorCode::InvalidArgument, "torus area must be positive");
}

FourierStream::FourierStream(Map coeffs) {
  for (auto& [k, c] : coeffs) {
    if (c.is_zero()) continue;
    if (k.is_zero()) throw Error(ErrorCode::ZeroMode, "stream has an entry at the zero mode");
    auto it = coeffs.find(-k);
    if (it == coeffs.end() || !(it->second == c.conj()))
      throw Error(ErrorCode::InvalidArgument, "stream violates x(-l) = conj(x(l))");
    coeffs_.emplace(k, c);
  }
}

FourierStream FourierStream::cosine(WaveVector k) {
  detail::require_nonzero(k, "cosine mode");
  Map m;
  m[k] = {Scalar(1, 2), 0};
  m[-k] = {Scalar(1, 2), 0};
  return FourierStream(std::move(m));
}

FourierStream FourierStream::sine(WaveVector k) {
  detail::require_nonzero(k, "sine mode");
  Map m;
  m[k] = {0, Scalar(-1, 2)};
  m[-k] = {0, Scalar(1, 2)};
  return FourierStream(std::move(m));
}

Complex FourierStream::at(WaveVector k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex{} : it->second;
}

FourierStream FourierStream::scaled(const Scalar& s) const {
  Map m;
  for (const auto& [k, c] : coeffs_) m[k] = s * c;
  return FourierStream(std::move(m));
}

FourierStream operator+(const FourierStream& a, const FourierStream& b) {
  FourierStream::Map m = a.coeffs();
  for (const auto& [k, c] : b.coeffs()) m[k] = m[k] + c;
  return FourierStream(std::move(m));
}

Integer cross(WaveVector k, WaveVector l) {
  return Integer(static_cast<long>(k.k1)) * static_cast<long>(l.k2) -
         Integer(static_cast<long>(k.k2)) * static_cast<long>(l.k1);
}

Integer dot(WaveVector k, WaveVector l) {
  return Integer(static_cast<long>(k.k1)) * static_cast<long>(l.k1) +
         Integer(static_cast<long>(k.k2)) * static_cast<long>(l.k2);
}

Integer norm2(WaveVector k) { return dot(k, k); }

Scalar a_alpha(WaveVector k, const Beta& beta) {
  Scalar n(norm2(k));
  return n * (1 + beta.value() * n);
}

namespace detail {

void require_nonzero(WaveVector k, const char* what) {
  if (k.is_zero()) throw Error(ErrorCode::ZeroMode, std::string(what) + " is the zero vector");
}

Scalar conn_coeff_with_divisor(WaveVector k, WaveVector l, const Beta& beta, const Scalar& divisor) {
  require_nonzero(k, "k");
  require_nonzero(l, "l");
  WaveVector s = k + l;
  if (s.is_zero()) return 0;
  Scalar r = Scalar(cross(k, l)) / divisor * (1 - (a_alpha(k, beta) - a_alpha(l, beta)) / a_alpha(s, beta));
  r.canonicalize();
  return r;
}

}  // namespace detail

Scalar inner_basis(WaveVector k, WaveVector l, const Beta& beta, const TorusGeometry& geom) {
  detail::require_nonzero(k, "k");
  detail::require_nonzero(l, "l");
  if (k + l != WaveVector{}) return 0;
  return geom.area() * a_alpha(k, beta);
}

Bracket commutator_coeff(WaveVector k, WaveVector l) {
  detail::require_nonzero(k, "k");
  detail::require_nonzero(l, "l");
  return {Scalar(cross(k, l)), k + l};
}

Scalar b_coeff(WaveVector k, WaveVector l, const Beta& beta) {
  detail::require_nonzero(k, "k");
  detail::require_nonzero(l, "l");
  WaveVector s = k + l;
  if (s.is_zero()) return 0;
  Scalar r = Scalar(cross(k, l)) * a_alpha(k, beta) / a_alpha(s, beta);
  r.canonicalize();
  return r;
}

Scalar conn_coeff(WaveVector k, WaveVector l, const Beta& beta) {
  return detail::conn_coeff_with_divisor(k, l, beta, Scalar(2));
}

}  // namespace curvalpha
