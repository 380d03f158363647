#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "hskein/partition.hpp"
#include "hskein/sampled.hpp"
#include "hskein/scalar.hpp"

namespace hskein {

/// W: Schur-type basis W_lambda. P: power-sum basis P_lambda = prod P_{lambda_i}.
enum class Basis { W, P };

std::string_view basis_name(Basis b);
/// "W" or "P"; ParseError otherwise.
Basis parse_basis(std::string_view text);

/// Expansion of one basis element in the other basis, with rational
/// coefficients: P_mu = sum chi^lambda(mu) W_lambda and
/// W_lambda = sum chi^lambda(mu)/z_mu P_mu. Cached per partition.
const std::vector<std::pair<Partition, BigRational>>& basis_expansion(Basis from, const Partition& p);

/// Finite linear combination of basis elements of the positive skein of the
/// solid torus, with coefficients in K.
template <class K>
class SkeinElem {
 public:
  using Terms = std::map<Partition, K, PartitionOrder>;

  explicit SkeinElem(Basis b = Basis::W) : basis_(b) {}

  static SkeinElem one(Basis b = Basis::W) { return constant(K(1), b); }
  static SkeinElem constant(const K& c, Basis b = Basis::W) { return basis_element(b, Partition(), c); }
  static SkeinElem basis_element(Basis b, const Partition& p, const K& c = K(1));
  /// P_i in the P basis; P_0 = 1.
  static SkeinElem power_sum(int i);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  K coeff(const Partition& p) const;
  /// Distinct sizes |lambda| present, ascending.
  std::vector<int> degrees() const;

  void add_term(const Partition& p, const K& c);

  SkeinElem operator-() const;
  SkeinElem& operator+=(const SkeinElem& y);
  SkeinElem& operator-=(const SkeinElem& y);
  SkeinElem& operator*=(const K& c);
  friend SkeinElem operator+(SkeinElem x, const SkeinElem& y) { return x += y; }
  friend SkeinElem operator-(SkeinElem x, const SkeinElem& y) { return x -= y; }
  friend SkeinElem operator*(const K& c, SkeinElem x) { return x *= c; }
  friend SkeinElem operator*(SkeinElem x, const K& c) { return x *= c; }

 private:
  Basis basis_;
  Terms terms_;
};

/// Equality as elements; y is converted to the basis of x first.
template <class K>
bool operator==(const SkeinElem<K>& x, const SkeinElem<K>& y);

template <class K>
SkeinElem<K> basis_convert(const SkeinElem<K>& x, Basis target);

/// Product; result is expressed in the basis of x.
template <class K>
SkeinElem<K> multiply(const SkeinElem<K>& x, const SkeinElem<K>& y);

template <class K>
SkeinElem<K> operator*(const SkeinElem<K>& x, const SkeinElem<K>& y) {
  return multiply(x, y);
}

/// a z sum_{cells} s^{2c}: eigenvalue of P - unknot on W_lambda.
template <class K>
K meridian_shift(const Partition& lambda);

/// unknot + a z sum_{cells} s^{2c}: eigenvalue of P on W_lambda.
template <class K>
K meridian_eigenvalue(const Partition& lambda);

/// a^{|lambda|} s^{2 sum c}: eigenvalue of F on W_lambda.
template <class K>
K framing_eigenvalue(const Partition& lambda);

/// Meridian operator P; result in the W basis.
template <class K>
SkeinElem<K> meridian(const SkeinElem<K>& x);

/// Inverse of P - unknot on positive degree; result in the W basis.
/// Throws DegreeZeroComponent if x has a nonzero constant term.
template <class K>
SkeinElem<K> meridian_minus_unknot_inverse(const SkeinElem<K>& x);

/// F^power; result in the W basis.
template <class K>
SkeinElem<K> framing(const SkeinElem<K>& x, int power);

/// a -> a^-1, s -> s^-1 on coefficients, basis elements fixed. Both bases are
/// mirror invariant, so the basis of x is kept.
template <class K>
SkeinElem<K> mirror(const SkeinElem<K>& x);

/// HOMFLY-PT value of the zero-framed unknot decorated by x.
template <class K>
K unknot_eval(const SkeinElem<K>& x);

/// C_m = a^-1 (P - unknot)(P_m)/(s^m - s^-m) in the W basis; BadIndex if m < 1.
template <class K>
SkeinElem<K> core_curve(int m);

}  // namespace hskein
