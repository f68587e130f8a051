#pragma once

#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <string>

#include "error.hpp"

namespace lusztig {

inline constexpr double kDefaultTolerance = 1e-9;

using Complex = std::complex<double>;

/// Residue in [0, p). Arithmetic goes through FieldSpec, which owns p.
struct FFElem {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FFElem, FFElem) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/**
 * @brief The prime field F_p, p odd.
 *
 * Carries the residue characteristic and provides modular arithmetic and the
 * quadratic character. Cheap to copy.
 */
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 3 || p > (1u << 30) || !is_prime(p))
      fail(ErrorKind::InvalidPrime, "p must be an odd prime (got " + std::to_string(p) + ")");
  }

  std::uint32_t p() const noexcept { return p_; }

  /// Good-prime bound 3(h-1) = 6n-3 for sp_2n (Coxeter number h = 2n).
  static constexpr std::int64_t good_prime_bound(int n) noexcept { return 6 * std::int64_t{n} - 3; }

  /// False flags (without refusing) a prime at or below the bound.
  bool is_good_prime(int n) const noexcept { return std::int64_t{p_} > good_prime_bound(n); }

  FFElem elem(std::int64_t x) const noexcept {
    std::int64_t r = x % std::int64_t{p_};
    if (r < 0) r += p_;
    return FFElem{static_cast<std::uint32_t>(r)};
  }

  FFElem add(FFElem a, FFElem b) const noexcept {
    return FFElem{static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p_)};
  }
  FFElem sub(FFElem a, FFElem b) const noexcept {
    return FFElem{static_cast<std::uint32_t>((std::uint64_t{a.value} + p_ - b.value) % p_)};
  }
  FFElem neg(FFElem a) const noexcept { return FFElem{a.value == 0 ? 0 : p_ - a.value}; }
  FFElem mul(FFElem a, FFElem b) const noexcept {
    return FFElem{static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
  }

  FFElem pow(FFElem a, std::uint64_t e) const noexcept {
    FFElem result{1 % p_};
    while (e != 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  FFElem inv(FFElem a) const {
    if (a.value == 0) fail(ErrorKind::DivisionByZero, "division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }

  /// Quadratic character: 0 at 0, 1 on nonzero squares, -1 otherwise (Euler criterion).
  int sgn(FFElem x) const noexcept {
    if (x.value == 0) return 0;
    return pow(x, (p_ - 1) / 2).value == 1 ? 1 : -1;
  }

  /// Smallest nonsquare residue; the representative of the class of epsilon.
  FFElem nonsquare() const noexcept {
    for (std::uint32_t x = 2;; ++x)
      if (sgn(FFElem{x}) == -1) return FFElem{x};
  }

  bool minus_one_is_square() const noexcept { return p_ % 4 == 1; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

/// psi(x) = exp(2 pi i x / p).
inline Complex additive_character(FFElem x, const FieldSpec& field) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(x.value % field.p()) / field.p();
  return {std::cos(angle), std::sin(angle)};
}

/// G = sum_x sgn(x) psi(x), by direct summation.
inline Complex gauss_sum(const FieldSpec& field) {
  Complex sum{0.0, 0.0};
  for (std::uint32_t x = 1; x < field.p(); ++x) sum += double(field.sgn(FFElem{x})) * additive_character(FFElem{x}, field);
  return sum;
}

/// tau = sgn(-1) p^{-1/2} G; equals 1 for p = 1 mod 4 and -i for p = 3 mod 4.
inline Complex tau(const FieldSpec& field) {
  const double sign = field.sgn(field.elem(-1));
  return sign * gauss_sum(field) / std::sqrt(static_cast<double>(field.p()));
}

inline bool approx_equal(Complex a, Complex b, double tol = kDefaultTolerance) { return std::abs(a - b) < tol; }

}  // namespace lusztig
