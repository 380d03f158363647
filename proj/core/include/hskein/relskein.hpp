#pragma once

#include <map>
#include <vector>

#include "hskein/tensor_series.hpp"

namespace hskein {

/// c-exponent and partition tuple of a term c^m r(e, x). The first slot of the
/// tuple lives in the annulus skein, the remaining slots in the coefficient
/// module.
struct RelKey {
  int c = 0;
  PartitionTuple tuple;
  int relative_degree() const { return c + (tuple.empty() ? 0 : tuple[0].size()); }
  friend bool operator==(const RelKey&, const RelKey&) = default;
};

struct RelKeyOrder {
  bool operator()(const RelKey& x, const RelKey& y) const {
    const int dx = x.relative_degree(), dy = y.relative_degree();
    if (dx != dy) return dx < dy;
    if (x.c != y.c) return x.c > y.c;
    return TupleOrder()(x.tuple, y.tuple);
  }
};

/// Element of the relative skein of the annulus tensored with the coefficient
/// module, written in the basis c^m r(e, P_lambda) (x) P_mu ... All slots are
/// stored in the P basis. A term survives truncation iff its relative degree
/// m + |lambda_1| and every other slot size are <= N.
template <class K>
class RelElem {
 public:
  using Terms = std::map<RelKey, K, RelKeyOrder>;

  RelElem(int rank, int truncation);

  static RelElem one(int rank, int truncation) { return c_power(0, rank, truncation); }
  static RelElem c_power(int m, int rank, int truncation, const K& coeff = K(1));

  int rank() const { return rank_; }
  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  K coeff(int m, const PartitionTuple& tuple) const;

  /// Adds c at (m, tuple); the tuple is in the P basis.
  void add_term(int m, const PartitionTuple& tuple, const K& c);
  /// Adds c at (m, tuple) with the tuple given in basis b (converted to P).
  void add_term_in_basis(int m, const PartitionTuple& tuple, const K& c, Basis b);

  /// Terms of one relative degree.
  RelElem component(int degree) const;
  /// Relative degrees present, ascending.
  std::vector<int> degrees() const;

  RelElem operator-() const;
  RelElem& operator+=(const RelElem& y);
  RelElem& operator-=(const RelElem& y);
  RelElem& operator*=(const K& c);
  friend RelElem operator+(RelElem x, const RelElem& y) { return x += y; }
  friend RelElem operator-(RelElem x, const RelElem& y) { return x -= y; }
  friend RelElem operator*(const K& c, RelElem x) { return x *= c; }
  friend bool operator==(const RelElem& x, const RelElem& y) {
    return x.rank_ == y.rank_ && x.truncation_ == y.truncation_ && x.terms_ == y.terms_;
  }

 private:
  int rank_;
  int truncation_;
  Terms terms_;
};

/// Terms re-expressed with every slot in basis b.
template <class K>
typename RelElem<K>::Terms terms_in_basis(const RelElem<K>& x, Basis b);

/// Commutative product: c-exponents add, slots multiply. RankMismatch if the
/// ranks differ.
template <class K>
RelElem<K> rel_mul(const RelElem<K>& x, const RelElem<K>& y);

template <class K>
RelElem<K> operator*(const RelElem<K>& x, const RelElem<K>& y) {
  return rel_mul(x, y);
}

/// r(e, x): every term at c-exponent 0.
template <class K>
RelElem<K> embed_right(const TensorSeries<K>& x);

/// l(x, e): P_i in the first factor becomes r(e, P_i) + (s^i - s^-i) c^i.
template <class K>
RelElem<K> embed_left(const TensorSeries<K>& x);

/// [x, e] = l(x, e) - r(e, x).
template <class K>
RelElem<K> commutator_e(const TensorSeries<K>& x);

/// Capping: c^m (m >= 1, empty first slot) -> a C_m, m = 0 -> unknot times the
/// term. UnsupportedMixedTerm for c^m r(e, x) with m >= 1 and x of positive
/// degree. The first factor of the result is in the W basis.
template <class K>
TensorSeries<K> cp_on_c_part(const RelElem<K>& x);

/// sum_i c^i (x) A_i with coeffs[i] = A_i (coeffs[0] ignored); each A_i is a
/// series of rank l - 1.
template <class K>
RelElem<K> from_c_coefficients(const std::vector<TensorSeries<K>>& coeffs, int truncation);

/// Inverse of from_c_coefficients; entry i is the coefficient of c^i, for
/// i = 0..N. UnsupportedMixedTerm if a first slot is nonempty.
template <class K>
std::vector<TensorSeries<K>> c_coefficients(const RelElem<K>& x);

enum class RecursionSide { Right, Left };

/// Residual [Phi, e] - A r(e, Phi) (side Right) or [Phi, e] - A l(Phi, e)
/// (side Left), graded by relative degree.
template <class K>
struct RecursionResidual {
  RelElem<K> residual;
  bool holds() const { return residual.is_zero(); }
  std::vector<int> failing_degrees() const { return residual.degrees(); }
};

template <class K>
RecursionResidual<K> check_relative_recursion(const TensorSeries<K>& phi, const RelElem<K>& a, RecursionSide side);

/// The unique A with [Phi, e] = r(A, Phi) through the truncation degree.
/// ConstantTermNotOne unless the first-factor degree-0 part of Phi is 1.
template <class K>
RelElem<K> extract_relative_data(const TensorSeries<K>& phi);

}  // namespace hskein
