#pragma once

#include <map>
#include <vector>

#include "hskein/skein.hpp"

namespace hskein {

using PartitionTuple = std::vector<Partition>;

/// Lexicographic over positions, each position in PartitionOrder.
struct TupleOrder {
  bool operator()(const PartitionTuple& x, const PartitionTuple& y) const;
};

/// Degree in the formal variable t together with the partition tuple. For
/// rank >= 1 the degree is max_i |lambda_i|; rank-0 series carry it explicitly.
struct SeriesKey {
  int degree = 0;
  PartitionTuple tuple;
  friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
};

struct SeriesKeyOrder {
  bool operator()(const SeriesKey& x, const SeriesKey& y) const {
    if (x.degree != y.degree) return x.degree < y.degree;
    return TupleOrder()(x.tuple, y.tuple);
  }
};

enum class PairingFamily { AllPartitions, SingleRows };

struct FactorOp {
  enum class Kind { Meridian, MeridianMinusUnknotInverse, Framing, Mirror, UnknotEval };
  Kind kind;
  int power = 0;  // framing exponent

  static FactorOp meridian() { return {Kind::Meridian, 0}; }
  static FactorOp meridian_minus_unknot_inverse() { return {Kind::MeridianMinusUnknotInverse, 0}; }
  static FactorOp framing(int k) { return {Kind::Framing, k}; }
  static FactorOp mirror() { return {Kind::Mirror, 0}; }
  static FactorOp unknot_eval() { return {Kind::UnknotEval, 0}; }
};

/// Truncated power series with values in the l-fold tensor power of the skein,
/// stored as a map from partition tuples to coefficients. A term survives
/// truncation iff every factor has size <= N. Each tensor factor has its own
/// basis tag.
template <class K>
class TensorSeries {
 public:
  using Terms = std::map<SeriesKey, K, SeriesKeyOrder>;

  TensorSeries(int rank, int truncation, Basis b = Basis::W);
  TensorSeries(int rank, int truncation, std::vector<Basis> bases);

  static TensorSeries one(int rank, int truncation, Basis b = Basis::W) { return constant(K(1), rank, truncation, b); }
  static TensorSeries constant(const K& c, int rank, int truncation, Basis b = Basis::W);
  /// Rank-1 series of a skein element; the t-degree of W_lambda is |lambda|.
  static TensorSeries from_skein(const SkeinElem<K>& x, int truncation);

  int rank() const { return rank_; }
  int truncation() const { return truncation_; }
  const std::vector<Basis>& bases() const { return bases_; }
  Basis basis(int i) const { return bases_.at(static_cast<std::size_t>(i)); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the tuple; rank-0 series take the degree instead.
  K coeff(const PartitionTuple& tuple) const;
  K coeff_at_degree(int degree) const;
  K constant_term() const;
  bool is_diagonal() const;
  int max_degree() const;

  /// Adds c at the tuple. For rank 0 the degree argument is the t-degree; for
  /// rank >= 1 it is ignored. Terms beyond the truncation are dropped.
  void add_term(const PartitionTuple& tuple, const K& c, int degree = 0);

  /// Terms of the given degree.
  TensorSeries component(int degree) const;
  /// Terms whose first factor has size d (rank >= 1).
  TensorSeries first_factor_component(int d) const;
  /// The same series cut at a smaller truncation.
  TensorSeries truncated(int n) const;

  TensorSeries operator-() const;
  TensorSeries& operator+=(const TensorSeries& y);
  TensorSeries& operator-=(const TensorSeries& y);
  TensorSeries& operator*=(const K& c);
  friend TensorSeries operator+(TensorSeries x, const TensorSeries& y) { return x += y; }
  friend TensorSeries operator-(TensorSeries x, const TensorSeries& y) { return x -= y; }
  friend TensorSeries operator*(const K& c, TensorSeries x) { return x *= c; }
  friend TensorSeries operator*(TensorSeries x, const K& c) { return x *= c; }

 private:
  static int key_degree(const PartitionTuple& tuple);

  int rank_;
  int truncation_;
  std::vector<Basis> bases_;
  Terms terms_;
};

/// Equal rank and truncation, and equal terms after converting y to the bases of x.
template <class K>
bool operator==(const TensorSeries<K>& x, const TensorSeries<K>& y);

template <class K>
TensorSeries<K> convert_factor(const TensorSeries<K>& x, int i, Basis target);

template <class K>
TensorSeries<K> convert_all(const TensorSeries<K>& x, Basis target);

template <class K>
TensorSeries<K> convert_like(const TensorSeries<K>& x, const std::vector<Basis>& bases);

/// Factorwise product, truncated; result in the bases of x. RankMismatch if the
/// ranks differ, BadParams if the truncations differ.
template <class K>
TensorSeries<K> series_mul(const TensorSeries<K>& x, const TensorSeries<K>& y);

template <class K>
TensorSeries<K> operator*(const TensorSeries<K>& x, const TensorSeries<K>& y) {
  return series_mul(x, y);
}

/// NonzeroConstantTerm unless the constant term vanishes.
template <class K>
TensorSeries<K> series_exp(const TensorSeries<K>& x);

/// ConstantTermNotOne unless the constant term is 1.
template <class K>
TensorSeries<K> series_ln(const TensorSeries<K>& x);

/// Multiplicative inverse of a series with constant term 1.
template <class K>
TensorSeries<K> series_inverse(const TensorSeries<K>& x);

template <class K>
TensorSeries<K> tensor_concat(const TensorSeries<K>& x, const TensorSeries<K>& y);

/// t -> a^e t on a diagonal series; NotDiagonal otherwise.
template <class K>
TensorSeries<K> scale_variable(const TensorSeries<K>& x, int e);

/// Contracts factors i and j (0-based) against sum W*_lambda (x) W*_lambda, or
/// only single rows. BadFactorIndex for invalid or equal indices.
template <class K>
TensorSeries<K> pair_factors(const TensorSeries<K>& x, int i, int j, PairingFamily fam);

/// Applies a skein operator in factor i (0-based). UnknotEval drops the factor.
template <class K>
TensorSeries<K> apply_factor_op(const TensorSeries<K>& x, int i, const FactorOp& op);

/// Mirror map on all coefficients.
template <class K>
TensorSeries<K> series_mirror(const TensorSeries<K>& x);

/// Reorders factors: factor k of the result is factor perm[k] of x.
template <class K>
TensorSeries<K> permute_factors(const TensorSeries<K>& x, const std::vector<int>& perm);

}  // namespace hskein
