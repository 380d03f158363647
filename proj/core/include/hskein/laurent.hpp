#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hskein {

using BigRational = mpq_class;
using BigInt = mpz_class;

/// Sparse Laurent polynomial in a and s with rational coefficients. Terms are
/// kept sorted by (e_a, e_s) ascending with no zero coefficients; the zero
/// polynomial has no terms.
class LaurentPoly {
 public:
  struct Term {
    int ea = 0;
    int es = 0;
    BigRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<Term> terms);

  static LaurentPoly constant(const BigRational& c);
  static LaurentPoly monomial(int ea, int es, const BigRational& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Term with the greatest (e_a, e_s); precondition: nonzero.
  const Term& lex_greatest() const { return terms_.back(); }
  int min_ea() const;
  int min_es() const;
  BigRational coeff(int ea, int es) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const BigRational& c, const LaurentPoly& x);

  LaurentPoly invert_vars(bool flip_a, bool flip_s) const;
  BigRational eval(const BigRational& a0, const BigRational& s0) const;

  /// Terms in descending (e_a, e_s) order, e.g. `a*s - a^-1*s + 2`.
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// Exponent arithmetic with overflow detection.
int checked_exp_add(int x, int y);
int checked_exp_mul(int x, int y);

}  // namespace hskein
