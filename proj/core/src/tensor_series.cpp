#include "hskein/tensor_series.hpp"

#include <algorithm>

#include "hskein/error.hpp"
#include "hskein/field.hpp"

namespace hskein {

bool TupleOrder::operator()(const PartitionTuple& x, const PartitionTuple& y) const {
  const PartitionOrder less;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (less(x[i], y[i])) return true;
    if (less(y[i], x[i])) return false;
  }
  return x.size() < y.size();
}

template <class K>
TensorSeries<K>::TensorSeries(int rank, int truncation, Basis b)
    : TensorSeries(rank, truncation, std::vector<Basis>(static_cast<std::size_t>(std::max(rank, 0)), b)) {}

template <class K>
TensorSeries<K>::TensorSeries(int rank, int truncation, std::vector<Basis> bases)
    : rank_(rank), truncation_(truncation), bases_(std::move(bases)) {
  if (rank < 0 || truncation < 0) throw Error(ErrorCode::BadParams, "rank and truncation must be >= 0");
  if (bases_.size() != static_cast<std::size_t>(rank)) throw Error(ErrorCode::RankMismatch, "one basis tag per factor");
}

template <class K>
TensorSeries<K> TensorSeries<K>::constant(const K& c, int rank, int truncation, Basis b) {
  TensorSeries x(rank, truncation, b);
  x.add_term(PartitionTuple(static_cast<std::size_t>(rank)), c, 0);
  return x;
}

template <class K>
TensorSeries<K> TensorSeries<K>::from_skein(const SkeinElem<K>& e, int truncation) {
  TensorSeries x(1, truncation, e.basis());
  for (const auto& [p, c] : e.terms()) x.add_term({p}, c);
  return x;
}

template <class K>
int TensorSeries<K>::key_degree(const PartitionTuple& tuple) {
  int d = 0;
  for (const auto& p : tuple) d = std::max(d, p.size());
  return d;
}

template <class K>
K TensorSeries<K>::coeff(const PartitionTuple& tuple) const {
  if (rank_ == 0) return coeff_at_degree(0);
  auto it = terms_.find(SeriesKey{key_degree(tuple), tuple});
  return it == terms_.end() ? K() : it->second;
}

template <class K>
K TensorSeries<K>::coeff_at_degree(int degree) const {
  if (rank_ != 0) throw Error(ErrorCode::RankMismatch, "coeff_at_degree is for rank-0 series");
  auto it = terms_.find(SeriesKey{degree, {}});
  return it == terms_.end() ? K() : it->second;
}

template <class K>
K TensorSeries<K>::constant_term() const {
  if (rank_ == 0) return coeff_at_degree(0);
  return coeff(PartitionTuple(static_cast<std::size_t>(rank_)));
}

template <class K>
bool TensorSeries<K>::is_diagonal() const {
  for (const auto& [key, c] : terms_)
    for (const auto& p : key.tuple)
      if (p.size() != key.degree) return false;
  return true;
}

template <class K>
int TensorSeries<K>::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree;
}

template <class K>
void TensorSeries<K>::add_term(const PartitionTuple& tuple, const K& c, int degree) {
  if (tuple.size() != static_cast<std::size_t>(rank_)) throw Error(ErrorCode::RankMismatch, "tuple length differs from rank");
  if (c.is_zero()) return;
  SeriesKey key{rank_ == 0 ? degree : key_degree(tuple), tuple};
  if (key.degree > truncation_ || key.degree < 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class K>
TensorSeries<K> TensorSeries<K>::component(int degree) const {
  TensorSeries out(rank_, truncation_, bases_);
  for (const auto& [key, c] : terms_)
    if (key.degree == degree) out.terms_.emplace(key, c);
  return out;
}

template <class K>
TensorSeries<K> TensorSeries<K>::first_factor_component(int d) const {
  if (rank_ == 0) throw Error(ErrorCode::RankMismatch, "first_factor_component needs rank >= 1");
  TensorSeries out(rank_, truncation_, bases_);
  for (const auto& [key, c] : terms_)
    if (key.tuple[0].size() == d) out.terms_.emplace(key, c);
  return out;
}

template <class K>
TensorSeries<K> TensorSeries<K>::truncated(int n) const {
  TensorSeries out(rank_, std::min(n, truncation_), bases_);
  for (const auto& [key, c] : terms_)
    if (key.degree <= out.truncation_) out.terms_.emplace(key, c);
  return out;
}

template <class K>
TensorSeries<K> TensorSeries<K>::operator-() const {
  TensorSeries r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

template <class K>
TensorSeries<K>& TensorSeries<K>::operator+=(const TensorSeries& y) {
  if (y.rank_ != rank_) throw Error(ErrorCode::RankMismatch, "cannot add series of different rank");
  const TensorSeries& other = y.bases_ == bases_ ? y : convert_like(y, bases_);
  for (const auto& [key, c] : other.terms_) add_term(key.tuple, c, key.degree);
  return *this;
}

template <class K>
TensorSeries<K>& TensorSeries<K>::operator-=(const TensorSeries& y) {
  return *this += -y;
}

template <class K>
TensorSeries<K>& TensorSeries<K>::operator*=(const K& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

template <class K>
bool operator==(const TensorSeries<K>& x, const TensorSeries<K>& y) {
  if (x.rank() != y.rank() || x.truncation() != y.truncation()) return false;
  if (x.bases() == y.bases()) return x.terms() == y.terms();
  return x.terms() == convert_like(y, x.bases()).terms();
}

template <class K>
TensorSeries<K> convert_factor(const TensorSeries<K>& x, int i, Basis target) {
  if (i < 0 || i >= x.rank()) throw Error(ErrorCode::BadFactorIndex, "factor index out of range");
  const Basis from = x.basis(i);
  if (from == target) return x;
  std::vector<Basis> bases = x.bases();
  bases[static_cast<std::size_t>(i)] = target;
  TensorSeries<K> out(x.rank(), x.truncation(), bases);
  for (const auto& [key, c] : x.terms()) {
    PartitionTuple t = key.tuple;
    for (const auto& [q, r] : basis_expansion(from, key.tuple[static_cast<std::size_t>(i)])) {
      t[static_cast<std::size_t>(i)] = q;
      out.add_term(t, c * K(r));
    }
  }
  return out;
}

template <class K>
TensorSeries<K> convert_like(const TensorSeries<K>& x, const std::vector<Basis>& bases) {
  if (bases.size() != static_cast<std::size_t>(x.rank())) throw Error(ErrorCode::RankMismatch, "basis list length");
  TensorSeries<K> out = x;
  for (int i = 0; i < x.rank(); ++i) out = convert_factor(out, i, bases[static_cast<std::size_t>(i)]);
  return out;
}

template <class K>
TensorSeries<K> convert_all(const TensorSeries<K>& x, Basis target) {
  return convert_like(x, std::vector<Basis>(static_cast<std::size_t>(x.rank()), target));
}

template <class K>
TensorSeries<K> series_mul(const TensorSeries<K>& x, const TensorSeries<K>& y) {
  if (x.rank() != y.rank()) throw Error(ErrorCode::RankMismatch, "series_mul needs equal ranks");
  if (x.truncation() != y.truncation()) throw Error(ErrorCode::BadParams, "series_mul needs equal truncations");
  const int n = x.truncation();
  if (x.rank() == 0) {
    TensorSeries<K> out(0, n);
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) {
        if (kx.degree + ky.degree > n) break;
        out.add_term({}, cx * cy, kx.degree + ky.degree);
      }
    return out;
  }
  const TensorSeries<K> xp = convert_all(x, Basis::P);
  const TensorSeries<K> yp = convert_all(y, Basis::P);
  TensorSeries<K> out(x.rank(), n, Basis::P);
  const auto rank = static_cast<std::size_t>(x.rank());
  PartitionTuple t(rank);
  for (const auto& [kx, cx] : xp.terms()) {
    for (const auto& [ky, cy] : yp.terms()) {
      bool fits = true;
      for (std::size_t f = 0; f < rank && fits; ++f)
        fits = kx.tuple[f].size() + ky.tuple[f].size() <= n;
      if (!fits) continue;
      for (std::size_t f = 0; f < rank; ++f) t[f] = kx.tuple[f].merged(ky.tuple[f]);
      out.add_term(t, cx * cy);
    }
  }
  return convert_like(out, x.bases());
}

template <class K>
TensorSeries<K> series_exp(const TensorSeries<K>& x) {
  if (!x.constant_term().is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "series_exp needs a zero constant term");
  const TensorSeries<K> xp = convert_all(x, Basis::P);
  TensorSeries<K> result = TensorSeries<K>::one(x.rank(), x.truncation(), Basis::P);
  TensorSeries<K> power = result;
  for (long k = 1; ; ++k) {
    power = series_mul(power, xp) * K(BigRational(1, k));
    if (power.is_zero()) break;
    result += power;
  }
  return convert_like(result, x.bases());
}

template <class K>
TensorSeries<K> series_ln(const TensorSeries<K>& x) {
  if (!x.constant_term().is_one()) throw Error(ErrorCode::ConstantTermNotOne, "series_ln needs constant term 1");
  TensorSeries<K> y = convert_all(x, Basis::P);
  y -= TensorSeries<K>::one(x.rank(), x.truncation(), Basis::P);
  TensorSeries<K> result(x.rank(), x.truncation(), Basis::P);
  TensorSeries<K> power = TensorSeries<K>::one(x.rank(), x.truncation(), Basis::P);
  for (long k = 1; ; ++k) {
    power = series_mul(power, y);
    if (power.is_zero()) break;
    result += power * K(BigRational(k % 2 == 1 ? 1 : -1, k));
  }
  return convert_like(result, x.bases());
}

template <class K>
TensorSeries<K> series_inverse(const TensorSeries<K>& x) {
  if (!x.constant_term().is_one()) throw Error(ErrorCode::ConstantTermNotOne, "series_inverse needs constant term 1");
  // 1/(1 + y) = sum (-y)^k
  TensorSeries<K> y = convert_all(x, Basis::P);
  y -= TensorSeries<K>::one(x.rank(), x.truncation(), Basis::P);
  y = -y;
  TensorSeries<K> result = TensorSeries<K>::one(x.rank(), x.truncation(), Basis::P);
  TensorSeries<K> power = result;
  while (true) {
    power = series_mul(power, y);
    if (power.is_zero()) break;
    result += power;
  }
  return convert_like(result, x.bases());
}

template <class K>
TensorSeries<K> tensor_concat(const TensorSeries<K>& x, const TensorSeries<K>& y) {
  if (x.truncation() != y.truncation()) throw Error(ErrorCode::BadParams, "tensor_concat needs equal truncations");
  if (x.rank() == 0 && y.rank() == 0) return series_mul(x, y);
  std::vector<Basis> bases = x.bases();
  bases.insert(bases.end(), y.bases().begin(), y.bases().end());
  TensorSeries<K> out(x.rank() + y.rank(), x.truncation(), bases);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      PartitionTuple t = kx.tuple;
      t.insert(t.end(), ky.tuple.begin(), ky.tuple.end());
      out.add_term(t, cx * cy);
    }
  }
  return out;
}

template <class K>
TensorSeries<K> scale_variable(const TensorSeries<K>& x, int e) {
  if (!x.is_diagonal()) throw Error(ErrorCode::NotDiagonal, "scale_variable needs a diagonal series");
  TensorSeries<K> out(x.rank(), x.truncation(), x.bases());
  for (const auto& [key, c] : x.terms()) out.add_term(key.tuple, c * K::monomial(checked_exp_mul(e, key.degree), 0), key.degree);
  return out;
}

template <class K>
TensorSeries<K> pair_factors(const TensorSeries<K>& x, int i, int j, PairingFamily fam) {
  if (i == j || i < 0 || j < 0 || i >= x.rank() || j >= x.rank())
    throw Error(ErrorCode::BadFactorIndex, "pair_factors needs two distinct valid factor indices");
  const TensorSeries<K> w = convert_factor(convert_factor(x, i, Basis::W), j, Basis::W);
  std::vector<Basis> bases;
  for (int k = 0; k < x.rank(); ++k)
    if (k != i && k != j) bases.push_back(x.basis(k));
  TensorSeries<K> out(x.rank() - 2, x.truncation(), bases);
  for (const auto& [key, c] : w.terms()) {
    const Partition& pi = key.tuple[static_cast<std::size_t>(i)];
    const Partition& pj = key.tuple[static_cast<std::size_t>(j)];
    if (pi != pj) continue;
    if (fam == PairingFamily::SingleRows && !pi.is_single_row()) continue;
    PartitionTuple t;
    for (int k = 0; k < x.rank(); ++k)
      if (k != i && k != j) t.push_back(key.tuple[static_cast<std::size_t>(k)]);
    out.add_term(t, c, key.degree);
  }
  return out;
}

template <class K>
TensorSeries<K> apply_factor_op(const TensorSeries<K>& x, int i, const FactorOp& op) {
  if (i < 0 || i >= x.rank()) throw Error(ErrorCode::BadFactorIndex, "factor index out of range");
  const auto fi = static_cast<std::size_t>(i);
  if (op.kind == FactorOp::Kind::UnknotEval) {
    const TensorSeries<K> xp = convert_factor(x, i, Basis::P);
    std::vector<Basis> bases = x.bases();
    bases.erase(bases.begin() + i);
    TensorSeries<K> out(x.rank() - 1, x.truncation(), bases);
    std::map<int, K> cache;
    for (const auto& [key, c] : xp.terms()) {
      K v = c;
      for (int part : key.tuple[fi].parts()) {
        auto it = cache.find(part);
        if (it == cache.end()) it = cache.emplace(part, unknot_power_sum<K>(part)).first;
        v *= it->second;
      }
      PartitionTuple t = key.tuple;
      t.erase(t.begin() + i);
      out.add_term(t, v, key.degree);
    }
    return out;
  }
  const TensorSeries<K> w = convert_factor(x, i, Basis::W);
  TensorSeries<K> out(w.rank(), w.truncation(), w.bases());
  for (const auto& [key, c] : w.terms()) {
    const Partition& p = key.tuple[fi];
    switch (op.kind) {
      case FactorOp::Kind::Meridian:
        out.add_term(key.tuple, c * meridian_eigenvalue<K>(p), key.degree);
        break;
      case FactorOp::Kind::MeridianMinusUnknotInverse:
        if (p.empty()) throw Error(ErrorCode::DegreeZeroComponent, "P - unknot is not invertible in degree 0");
        out.add_term(key.tuple, c / meridian_shift<K>(p), key.degree);
        break;
      case FactorOp::Kind::Framing:
        out.add_term(key.tuple,
                     c * K::monomial(checked_exp_mul(op.power, p.size()), checked_exp_mul(op.power, 2 * content_sum(p))),
                     key.degree);
        break;
      case FactorOp::Kind::Mirror:
        out.add_term(key.tuple, c.mirror(), key.degree);
        break;
      case FactorOp::Kind::UnknotEval:
        break;
    }
  }
  return out;
}

template <class K>
TensorSeries<K> series_mirror(const TensorSeries<K>& x) {
  TensorSeries<K> out(x.rank(), x.truncation(), x.bases());
  for (const auto& [key, c] : x.terms()) out.add_term(key.tuple, c.mirror(), key.degree);
  return out;
}

template <class K>
TensorSeries<K> permute_factors(const TensorSeries<K>& x, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(x.rank())) throw Error(ErrorCode::BadFactorIndex, "permutation length");
  std::vector<int> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= x.rank() || seen[static_cast<std::size_t>(p)]++) throw Error(ErrorCode::BadFactorIndex, "not a permutation");
  }
  std::vector<Basis> bases;
  for (int p : perm) bases.push_back(x.basis(p));
  TensorSeries<K> out(x.rank(), x.truncation(), bases);
  for (const auto& [key, c] : x.terms()) {
    PartitionTuple t;
    for (int p : perm) t.push_back(key.tuple[static_cast<std::size_t>(p)]);
    out.add_term(t, c, key.degree);
  }
  return out;
}

#define HSKEIN_INSTANTIATE_SERIES(K)                                                                  \
  template class TensorSeries<K>;                                                                     \
  template bool operator==(const TensorSeries<K>&, const TensorSeries<K>&);                           \
  template TensorSeries<K> convert_factor(const TensorSeries<K>&, int, Basis);                        \
  template TensorSeries<K> convert_all(const TensorSeries<K>&, Basis);                                \
  template TensorSeries<K> convert_like(const TensorSeries<K>&, const std::vector<Basis>&);           \
  template TensorSeries<K> series_mul(const TensorSeries<K>&, const TensorSeries<K>&);                \
  template TensorSeries<K> series_exp(const TensorSeries<K>&);                                        \
  template TensorSeries<K> series_ln(const TensorSeries<K>&);                                         \
  template TensorSeries<K> series_inverse(const TensorSeries<K>&);                                    \
  template TensorSeries<K> tensor_concat(const TensorSeries<K>&, const TensorSeries<K>&);             \
  template TensorSeries<K> scale_variable(const TensorSeries<K>&, int);                               \
  template TensorSeries<K> pair_factors(const TensorSeries<K>&, int, int, PairingFamily);             \
  template TensorSeries<K> apply_factor_op(const TensorSeries<K>&, int, const FactorOp&);             \
  template TensorSeries<K> series_mirror(const TensorSeries<K>&);                                     \
  template TensorSeries<K> permute_factors(const TensorSeries<K>&, const std::vector<int>&);

HSKEIN_INSTANTIATE_SERIES(Scalar)
HSKEIN_INSTANTIATE_SERIES(SampledScalar)

}  // namespace hskein
