#include "hskein/relskein.hpp"

#include "hskein/error.hpp"
#include "hskein/field.hpp"

namespace hskein {

template <class K>
RelElem<K>::RelElem(int rank, int truncation) : rank_(rank), truncation_(truncation) {
  if (rank < 1) throw Error(ErrorCode::BadParams, "relative elements need rank >= 1");
  if (truncation < 0) throw Error(ErrorCode::BadParams, "truncation must be >= 0");
}

template <class K>
RelElem<K> RelElem<K>::c_power(int m, int rank, int truncation, const K& coeff) {
  if (m < 0) throw Error(ErrorCode::BadIndex, "c-exponent must be >= 0");
  RelElem x(rank, truncation);
  x.add_term(m, PartitionTuple(static_cast<std::size_t>(rank)), coeff);
  return x;
}

template <class K>
K RelElem<K>::coeff(int m, const PartitionTuple& tuple) const {
  auto it = terms_.find(RelKey{m, tuple});
  return it == terms_.end() ? K() : it->second;
}

template <class K>
void RelElem<K>::add_term(int m, const PartitionTuple& tuple, const K& c) {
  if (tuple.size() != static_cast<std::size_t>(rank_)) throw Error(ErrorCode::RankMismatch, "tuple length differs from rank");
  if (c.is_zero()) return;
  RelKey key{m, tuple};
  if (key.relative_degree() > truncation_) return;
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i].size() > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class K>
void RelElem<K>::add_term_in_basis(int m, const PartitionTuple& tuple, const K& c, Basis b) {
  if (b == Basis::P) {
    add_term(m, tuple, c);
    return;
  }
  // Expand slot by slot into the P basis.
  std::vector<std::pair<PartitionTuple, K>> acc{{PartitionTuple(), c}};
  for (const auto& p : tuple) {
    std::vector<std::pair<PartitionTuple, K>> next;
    for (const auto& [t, v] : acc)
      for (const auto& [q, r] : basis_expansion(Basis::W, p)) {
        PartitionTuple u = t;
        u.push_back(q);
        next.emplace_back(std::move(u), v * K(r));
      }
    acc = std::move(next);
  }
  for (const auto& [t, v] : acc) add_term(m, t, v);
}

template <class K>
RelElem<K> RelElem<K>::component(int degree) const {
  RelElem out(rank_, truncation_);
  for (const auto& [key, c] : terms_)
    if (key.relative_degree() == degree) out.terms_.emplace(key, c);
  return out;
}

template <class K>
std::vector<int> RelElem<K>::degrees() const {
  std::vector<int> out;
  for (const auto& [key, c] : terms_)
    if (out.empty() || out.back() != key.relative_degree()) out.push_back(key.relative_degree());
  return out;
}

template <class K>
RelElem<K> RelElem<K>::operator-() const {
  RelElem r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

template <class K>
RelElem<K>& RelElem<K>::operator+=(const RelElem& y) {
  if (y.rank_ != rank_) throw Error(ErrorCode::RankMismatch, "cannot add relative elements of different rank");
  for (const auto& [key, c] : y.terms_) add_term(key.c, key.tuple, c);
  return *this;
}

template <class K>
RelElem<K>& RelElem<K>::operator-=(const RelElem& y) {
  return *this += -y;
}

template <class K>
RelElem<K>& RelElem<K>::operator*=(const K& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

template <class K>
typename RelElem<K>::Terms terms_in_basis(const RelElem<K>& x, Basis b) {
  if (b == Basis::P) return x.terms();
  // Reuse the series conversion on the tuple part, one c-exponent at a time.
  std::map<int, TensorSeries<K>> by_c;
  for (const auto& [key, c] : x.terms()) {
    auto it = by_c.find(key.c);
    if (it == by_c.end()) it = by_c.emplace(key.c, TensorSeries<K>(x.rank(), x.truncation(), Basis::P)).first;
    it->second.add_term(key.tuple, c);
  }
  typename RelElem<K>::Terms out;
  for (const auto& [m, s] : by_c) {
    const auto converted = convert_all(s, b);
    for (const auto& [key, c] : converted.terms()) out.emplace(RelKey{m, key.tuple}, c);
  }
  return out;
}

template <class K>
RelElem<K> rel_mul(const RelElem<K>& x, const RelElem<K>& y) {
  if (x.rank() != y.rank()) throw Error(ErrorCode::RankMismatch, "rel_mul needs equal ranks");
  if (x.truncation() != y.truncation()) throw Error(ErrorCode::BadParams, "rel_mul needs equal truncations");
  RelElem<K> out(x.rank(), x.truncation());
  const auto rank = static_cast<std::size_t>(x.rank());
  const int n = x.truncation();
  PartitionTuple t(rank);
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      if (kx.relative_degree() + ky.relative_degree() > n) break;
      bool fits = true;
      for (std::size_t f = 1; f < rank && fits; ++f) fits = kx.tuple[f].size() + ky.tuple[f].size() <= n;
      if (!fits) continue;
      for (std::size_t f = 0; f < rank; ++f) t[f] = kx.tuple[f].merged(ky.tuple[f]);
      out.add_term(kx.c + ky.c, t, cx * cy);
    }
  }
  return out;
}

template <class K>
RelElem<K> embed_right(const TensorSeries<K>& x) {
  if (x.rank() < 1) throw Error(ErrorCode::RankMismatch, "embed_right needs rank >= 1");
  const TensorSeries<K> xp = convert_all(x, Basis::P);
  RelElem<K> out(x.rank(), x.truncation());
  for (const auto& [key, c] : xp.terms()) out.add_term(0, key.tuple, c);
  return out;
}

template <class K>
RelElem<K> embed_left(const TensorSeries<K>& x) {
  if (x.rank() < 1) throw Error(ErrorCode::RankMismatch, "embed_left needs rank >= 1");
  const TensorSeries<K> xp = convert_all(x, Basis::P);
  RelElem<K> out(x.rank(), x.truncation());
  std::map<int, K> zcache;
  auto zp = [&](int i) -> const K& {
    auto it = zcache.find(i);
    if (it == zcache.end()) it = zcache.emplace(i, z_power<K>(i)).first;
    return it->second;
  };
  for (const auto& [key, c] : xp.terms()) {
    // Distinct parts with multiplicities.
    std::vector<std::pair<int, int>> groups;
    for (int p : key.tuple[0].parts()) {
      if (!groups.empty() && groups.back().first == p)
        ++groups.back().second;
      else
        groups.emplace_back(p, 1);
    }
    // Choose j_k copies of each part to become c^{part}.
    std::vector<int> chosen(groups.size(), 0);
    while (true) {
      int m = 0;
      K coeff = c;
      std::vector<int> rest;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto [part, mult] = groups[g];
        const int j = chosen[g];
        if (j > 0) {
          BigInt binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(mult), static_cast<unsigned long>(j));
          coeff *= K(BigRational(binom)) * zp(part).pow(j);
          m += j * part;
        }
        rest.insert(rest.end(), static_cast<std::size_t>(mult - j), part);
      }
      PartitionTuple t = key.tuple;
      t[0] = Partition(std::move(rest));
      out.add_term(m, t, coeff);
      std::size_t g = 0;
      while (g < groups.size() && chosen[g] == groups[g].second) chosen[g++] = 0;
      if (g == groups.size()) break;
      ++chosen[g];
    }
  }
  return out;
}

template <class K>
RelElem<K> commutator_e(const TensorSeries<K>& x) {
  return embed_left(x) - embed_right(x);
}

template <class K>
TensorSeries<K> cp_on_c_part(const RelElem<K>& x) {
  std::vector<Basis> bases(static_cast<std::size_t>(x.rank()), Basis::P);
  bases[0] = Basis::W;
  TensorSeries<K> out(x.rank(), x.truncation(), bases);
  std::map<int, SkeinElem<K>> curves;
  const K circle = unknot<K>();
  for (const auto& [key, c] : x.terms()) {
    PartitionTuple t = key.tuple;
    if (key.c == 0) {
      for (const auto& [q, r] : basis_expansion(Basis::P, key.tuple[0])) {
        t[0] = q;
        out.add_term(t, circle * c * K(r));
      }
      continue;
    }
    if (!key.tuple[0].empty())
      throw Error(ErrorCode::UnsupportedMixedTerm,
                  "cp is only defined here on c^m and on r(e, x); got c^" + std::to_string(key.c) + " r(e, P" +
                      key.tuple[0].to_string() + ")");
    auto it = curves.find(key.c);
    if (it == curves.end()) it = curves.emplace(key.c, core_curve<K>(key.c)).first;
    const K ac = K::a() * c;
    for (const auto& [q, v] : it->second.terms()) {
      t[0] = q;
      out.add_term(t, ac * v);
    }
  }
  return out;
}

template <class K>
RelElem<K> from_c_coefficients(const std::vector<TensorSeries<K>>& coeffs, int truncation) {
  if (coeffs.empty()) throw Error(ErrorCode::BadParams, "from_c_coefficients needs at least one entry");
  const int rank = coeffs[0].rank() + 1;
  RelElem<K> out(rank, truncation);
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i].rank() != rank - 1) throw Error(ErrorCode::RankMismatch, "coefficient ranks differ");
    const auto converted = convert_all(coeffs[i], Basis::P);
    for (const auto& [key, c] : converted.terms()) {
      PartitionTuple t{Partition()};
      t.insert(t.end(), key.tuple.begin(), key.tuple.end());
      out.add_term(static_cast<int>(i), t, c);
    }
  }
  return out;
}

template <class K>
std::vector<TensorSeries<K>> c_coefficients(const RelElem<K>& x) {
  std::vector<TensorSeries<K>> out(static_cast<std::size_t>(x.truncation()) + 1,
                                   TensorSeries<K>(x.rank() - 1, x.truncation(), Basis::P));
  for (const auto& [key, c] : x.terms()) {
    if (!key.tuple[0].empty())
      throw Error(ErrorCode::UnsupportedMixedTerm, "relative element is not a polynomial in c over the coefficient module");
    PartitionTuple t(key.tuple.begin() + 1, key.tuple.end());
    out[static_cast<std::size_t>(key.c)].add_term(t, c, 0);
  }
  return out;
}

template <class K>
RecursionResidual<K> check_relative_recursion(const TensorSeries<K>& phi, const RelElem<K>& a, RecursionSide side) {
  const RelElem<K> lhs = commutator_e(phi);
  const RelElem<K> embedded = side == RecursionSide::Right ? embed_right(phi) : embed_left(phi);
  return {lhs - rel_mul(a, embedded)};
}

template <class K>
RelElem<K> extract_relative_data(const TensorSeries<K>& phi) {
  if (phi.rank() < 1) throw Error(ErrorCode::RankMismatch, "extract_relative_data needs rank >= 1");
  const int n = phi.truncation();
  if (!(phi.first_factor_component(0) == TensorSeries<K>::one(phi.rank(), n, Basis::P)))
    throw Error(ErrorCode::ConstantTermNotOne, "the degree-0 part of Phi must be 1");
  const RelElem<K> bracket = commutator_e(phi);
  std::vector<RelElem<K>> right;
  for (int j = 0; j <= n; ++j) right.push_back(embed_right(phi.first_factor_component(j)));
  std::vector<RelElem<K>> parts(static_cast<std::size_t>(n) + 1, RelElem<K>(phi.rank(), n));
  RelElem<K> total(phi.rank(), n);
  for (int d = 1; d <= n; ++d) {
    RelElem<K> ad = bracket.component(d);
    for (int i = 1; i < d; ++i) ad -= rel_mul(parts[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(d - i)]).component(d);
    parts[static_cast<std::size_t>(d)] = ad;
    total += ad;
  }
  return total;
}

#define HSKEIN_INSTANTIATE_REL(K)                                                                            \
  template class RelElem<K>;                                                                                 \
  template typename RelElem<K>::Terms terms_in_basis(const RelElem<K>&, Basis);                              \
  template RelElem<K> rel_mul(const RelElem<K>&, const RelElem<K>&);                                         \
  template RelElem<K> embed_right(const TensorSeries<K>&);                                                   \
  template RelElem<K> embed_left(const TensorSeries<K>&);                                                    \
  template RelElem<K> commutator_e(const TensorSeries<K>&);                                                  \
  template TensorSeries<K> cp_on_c_part(const RelElem<K>&);                                                  \
  template RelElem<K> from_c_coefficients(const std::vector<TensorSeries<K>>&, int);                         \
  template std::vector<TensorSeries<K>> c_coefficients(const RelElem<K>&);                                   \
  template RecursionResidual<K> check_relative_recursion(const TensorSeries<K>&, const RelElem<K>&,         \
                                                         RecursionSide);                                     \
  template RelElem<K> extract_relative_data(const TensorSeries<K>&);

HSKEIN_INSTANTIATE_REL(Scalar)
HSKEIN_INSTANTIATE_REL(SampledScalar)

}  // namespace hskein
