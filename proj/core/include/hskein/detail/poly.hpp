#pragma once

// Dense integer polynomials used as the canonical storage behind Scalar.
//
// UPoly is an element of Z[s]: index i holds the coefficient of s^i, trailing
// zeros are trimmed and the zero polynomial is the empty vector.
// BiPoly is an element of Z[s][a]: row j holds the Z[s] coefficient of a^j,
// with the same trimming convention on rows.

#include <gmpxx.h>

#include <vector>

namespace hskein::detail {

using UPoly = std::vector<mpz_class>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for the zero polynomial
bool is_one(const UPoly& p);
UPoly upoly_add(const UPoly& x, const UPoly& y);
UPoly upoly_sub(const UPoly& x, const UPoly& y);
UPoly upoly_mul(const UPoly& x, const UPoly& y);
UPoly upoly_scale(const UPoly& x, const mpz_class& c);
UPoly upoly_shift(const UPoly& x, int k);  // multiply by s^k, k >= 0
mpz_class upoly_content(const UPoly& p);   // nonnegative
/// Exact division; returns false (and leaves q unspecified) if y does not divide x.
bool upoly_divexact(const UPoly& x, const UPoly& y, UPoly& q);
/// gcd in Z[s] with positive leading coefficient; gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& x, const UPoly& y);

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UPoly> rows) : rows_(std::move(rows)) { trim_rows(); }

  static BiPoly one();
  static BiPoly constant(const mpz_class& c);
  static BiPoly from_upoly(UPoly p);

  const std::vector<UPoly>& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_one() const;
  int deg_a() const { return static_cast<int>(rows_.size()) - 1; }
  int deg_s() const;
  int min_s() const;
  /// Coefficient of the lexicographically greatest monomial (a-degree first).
  const mpz_class& lex_lead() const;
  std::size_t term_count() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator-(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  BiPoly scaled(const mpz_class& c) const;
  BiPoly times_upoly(const UPoly& c) const;
  /// Multiply by a^ea s^es with ea, es >= 0.
  BiPoly shifted(int ea, int es) const;

  /// Strip monomial factors, the integer content and the sign so that the
  /// result has min exponents (0,0), content 1 and positive lex-lead.
  /// Returns the removed factors through the out-parameters.
  void make_canonical(mpz_class& content, int& shift_a, int& shift_s);

  /// gcd of the rows in Z[s] (nonnegative integer content included).
  UPoly content_a() const;
  bool divexact(const BiPoly& y, BiPoly& q) const;
  bool divexact(const UPoly& y, BiPoly& q) const;

  /// Substitutions a -> 1/a and/or s -> 1/s followed by multiplication with the
  /// monomial that keeps exponents nonnegative (a^deg_a, s^deg_s).
  BiPoly reversed(bool flip_a, bool flip_s) const;

  mpq_class eval(const mpq_class& a0, const mpq_class& s0) const;

 private:
  void trim_rows();
  std::vector<UPoly> rows_;
};

/// gcd in Z[a,s] of two canonical (primitive, min-exponent-zero) polynomials,
/// returned canonical. Either argument may be one.
BiPoly gcd(const BiPoly& x, const BiPoly& y);

}  // namespace hskein::detail
