#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hskein/detail/poly.hpp"
#include "hskein/laurent.hpp"

namespace hskein {

/// Exact element of Q(a, s).
///
/// Canonical form: value = coef * a^shift_a * s^shift_s * N / D where N and D
/// are coprime integer polynomials with content 1, minimum exponents (0,0) and
/// positive coefficient on the lexicographically greatest monomial. Zero is
/// coef = 0, N = D = 1. Equal values therefore have identical representations,
/// which makes operator== structural.
class Scalar {
 public:
  Scalar() : num_(detail::BiPoly::one()), den_(detail::BiPoly::one()) {}
  Scalar(long n) : Scalar() { coef_ = n; }  // NOLINT(google-explicit-constructor)
  explicit Scalar(const BigRational& q) : Scalar() { coef_ = q; }

  /// Canonical representative of num/den; throws ZeroDenominator when den = 0.
  static Scalar normalize(const LaurentPoly& num, const LaurentPoly& den);
  static Scalar monomial(int ea, int es, const BigRational& c = 1);
  static Scalar a() { return monomial(1, 0); }
  static Scalar s() { return monomial(0, 1); }
  static Scalar from_rational(const BigRational& q) { return Scalar(q); }

  LaurentPoly num() const;
  LaurentPoly den() const;

  bool is_zero() const { return sgn(coef_) == 0; }
  bool is_one() const { return coef_ == 1 && shift_a_ == 0 && shift_s_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_rational() const { return shift_a_ == 0 && shift_s_ == 0 && num_.is_one() && den_.is_one(); }
  const BigRational& rational_part() const { return coef_; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  /// a -> a^-1 and/or s -> s^-1.
  Scalar invert_vars(bool flip_a, bool flip_s) const;
  Scalar mirror() const { return invert_vars(true, true); }

  /// Exact value at (a0, s0). Throws BadEvaluationPoint if a0 = 0 or
  /// s0 in {0, 1, -1}, PoleAtPoint if the denominator vanishes there.
  BigRational eval_at(const BigRational& a0, const BigRational& s0) const;

  /// Canonical text: `P` or `(P)/(Q)` with integer coefficients.
  std::string to_string() const;
  /// Display form with powers of z = s - s^-1 factored out, e.g. `-z*s^-1`.
  /// Parses back to the same value.
  std::string to_pretty_string() const;
  /// Parses the scalar grammar: integers, a, s, z, ^ with signed integer
  /// exponents, * / + - and parentheses.
  static Scalar parse(std::string_view text);

  std::size_t complexity() const { return num_.term_count() + den_.term_count(); }

 private:
  void canonicalize_after_substitution();

  BigRational coef_ = 0;
  int shift_a_ = 0;
  int shift_s_ = 0;
  detail::BiPoly num_;
  detail::BiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace hskein
