#include "hskein/recursion.hpp"

#include "hskein/error.hpp"
#include "hskein/field.hpp"

namespace hskein {

template <class K>
TensorSeries<K> solve_absolute(const TensorSeries<K>& a, const TensorSeries<K>& m0) {
  if (a.rank() < 1) throw Error(ErrorCode::RankMismatch, "solve_absolute needs rank >= 1");
  if (m0.rank() != a.rank()) throw Error(ErrorCode::RankMismatch, "m0 must have the rank of A");
  const int n = a.truncation();
  if (!a.first_factor_component(0).is_zero())
    throw Error(ErrorCode::NonzeroConstantTerm, "A must raise the first-factor degree");
  for (const auto& [key, c] : m0.terms())
    if (!key.tuple[0].empty()) throw Error(ErrorCode::BadParams, "m0 must have degree 0 in the first factor");

  std::vector<TensorSeries<K>> a_parts;
  for (int i = 0; i <= n; ++i) a_parts.push_back(convert_all(a.first_factor_component(i), Basis::P));
  std::vector<TensorSeries<K>> phi_p{convert_all(m0.truncated(n), Basis::P)};
  TensorSeries<K> phi = convert_all(m0.truncated(n), Basis::W);
  for (int d = 1; d <= n; ++d) {
    TensorSeries<K> rhs(a.rank(), n, Basis::P);
    for (int i = 1; i <= d; ++i) {
      if (a_parts[static_cast<std::size_t>(i)].is_zero()) continue;
      rhs += series_mul(a_parts[static_cast<std::size_t>(i)], phi_p[static_cast<std::size_t>(d - i)]);
    }
    TensorSeries<K> phi_d = apply_factor_op(rhs, 0, FactorOp::meridian_minus_unknot_inverse());
    phi += convert_all(phi_d, Basis::W);
    phi_p.push_back(convert_all(phi_d, Basis::P));
  }
  return phi;
}

template <class K>
TensorSeries<K> solve_absolute(const TensorSeries<K>& a) {
  return solve_absolute(a, TensorSeries<K>::one(a.rank(), a.truncation(), Basis::W));
}

template <class K>
TensorSeries<K> absolute_residual(const TensorSeries<K>& phi, const TensorSeries<K>& a) {
  TensorSeries<K> lhs = apply_factor_op(phi, 0, FactorOp::meridian());
  lhs -= unknot<K>() * phi;
  return lhs - series_mul(a, phi);
}

template <class K>
TensorSeries<K> relative_to_absolute(const RelElem<K>& a_rel) {
  return cp_on_c_part(a_rel);
}

namespace {

// Multiplies two polynomials in c with series coefficients, dropping c^k for k > n.
template <class K>
std::vector<TensorSeries<K>> c_mul(const std::vector<TensorSeries<K>>& x, const std::vector<TensorSeries<K>>& y) {
  const std::size_t n = x.size() - 1;
  std::vector<TensorSeries<K>> out(n + 1, TensorSeries<K>(x[0].rank(), x[0].truncation(), Basis::P));
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 1; i + j <= n; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += series_mul(x[i], y[j]);
    }
  }
  return out;
}

template <class K>
bool c_is_zero(const std::vector<TensorSeries<K>>& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

template <class K>
std::vector<TensorSeries<K>> normalized(const std::vector<TensorSeries<K>>& x) {
  if (x.size() < 2) throw Error(ErrorCode::BadParams, "coefficient list needs at least c^1");
  std::vector<TensorSeries<K>> out;
  out.reserve(x.size());
  out.emplace_back(x[1].rank(), x[1].truncation(), Basis::P);
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i].rank() != x[1].rank()) throw Error(ErrorCode::RankMismatch, "coefficient ranks differ");
    out.push_back(convert_all(x[i], Basis::P));
  }
  return out;
}

}  // namespace

template <class K>
std::vector<TensorSeries<K>> expln_bridge_A_to_B(const std::vector<TensorSeries<K>>& a) {
  const auto u = normalized(a);
  std::vector<TensorSeries<K>> result(u.size(), u[0]);
  auto power = u;
  for (long k = 1; !c_is_zero(power); ++k) {
    const K w(BigRational(k % 2 == 1 ? 1 : -1, k));
    for (std::size_t i = 1; i < u.size(); ++i) result[i] += power[i] * w;
    power = c_mul(power, u);
  }
  return result;
}

template <class K>
std::vector<TensorSeries<K>> expln_bridge_B_to_A(const std::vector<TensorSeries<K>>& b) {
  const auto u = normalized(b);
  std::vector<TensorSeries<K>> result(u.size(), u[0]);
  auto power = u;
  for (long k = 1; !c_is_zero(power); ++k) {
    for (std::size_t i = 1; i < u.size(); ++i) result[i] += power[i];
    power = c_mul(power, u);
    for (std::size_t i = 1; i < u.size(); ++i) power[i] *= K(BigRational(1, k + 1));
  }
  return result;
}

template <class K>
TensorSeries<K> solve_relative_via_bridge(const std::vector<TensorSeries<K>>& b, const TensorSeries<K>& m0) {
  const auto u = normalized(b);
  const int rank = u[0].rank() + 1;
  const int n = u[0].truncation();
  if (m0.rank() != rank - 1) throw Error(ErrorCode::RankMismatch, "m0 must have the rank of the B_i");
  TensorSeries<K> log_phi(rank, n, Basis::P);
  const TensorSeries<K> log_m0 = convert_all(series_ln(m0.truncated(n)), Basis::P);
  for (const auto& [key, c] : log_m0.terms()) {
    PartitionTuple t{Partition()};
    t.insert(t.end(), key.tuple.begin(), key.tuple.end());
    log_phi.add_term(t, c);
  }
  for (std::size_t i = 1; i < u.size() && static_cast<int>(i) <= n; ++i) {
    const K w = z_power<K>(static_cast<int>(i)).inverse();
    for (const auto& [key, c] : u[i].terms()) {
      PartitionTuple t{Partition::row(static_cast<int>(i))};
      t.insert(t.end(), key.tuple.begin(), key.tuple.end());
      log_phi.add_term(t, c * w);
    }
  }
  return convert_all(series_exp(log_phi), Basis::W);
}

template <class K>
TensorSeries<K> solve_relative_via_bridge(const std::vector<TensorSeries<K>>& b) {
  if (b.size() < 2) throw Error(ErrorCode::BadParams, "coefficient list needs at least c^1");
  return solve_relative_via_bridge(b, TensorSeries<K>::one(b[1].rank(), b[1].truncation(), Basis::P));
}

#define HSKEIN_INSTANTIATE_RECURSION(K)                                                                  \
  template TensorSeries<K> solve_absolute(const TensorSeries<K>&, const TensorSeries<K>&);               \
  template TensorSeries<K> solve_absolute(const TensorSeries<K>&);                                       \
  template TensorSeries<K> absolute_residual(const TensorSeries<K>&, const TensorSeries<K>&);            \
  template TensorSeries<K> relative_to_absolute(const RelElem<K>&);                                      \
  template std::vector<TensorSeries<K>> expln_bridge_A_to_B(const std::vector<TensorSeries<K>>&);        \
  template std::vector<TensorSeries<K>> expln_bridge_B_to_A(const std::vector<TensorSeries<K>>&);        \
  template TensorSeries<K> solve_relative_via_bridge(const std::vector<TensorSeries<K>>&,                 \
                                                     const TensorSeries<K>&);                            \
  template TensorSeries<K> solve_relative_via_bridge(const std::vector<TensorSeries<K>>&);

HSKEIN_INSTANTIATE_RECURSION(Scalar)
HSKEIN_INSTANTIATE_RECURSION(SampledScalar)

}  // namespace hskein
