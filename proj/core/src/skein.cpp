#include "hskein/skein.hpp"

#include <memory>
#include <mutex>

#include "hskein/characters.hpp"
#include "hskein/error.hpp"
#include "hskein/field.hpp"

namespace hskein {

std::string_view basis_name(Basis b) { return b == Basis::W ? "W" : "P"; }

Basis parse_basis(std::string_view text) {
  if (text == "W") return Basis::W;
  if (text == "P") return Basis::P;
  throw Error(ErrorCode::ParseError, "unknown basis '" + std::string(text) + "'");
}

const std::vector<std::pair<Partition, BigRational>>& basis_expansion(Basis from, const Partition& p) {
  using Expansion = std::vector<std::pair<Partition, BigRational>>;
  static std::mutex mu;
  static std::map<std::pair<Basis, Partition>, std::unique_ptr<Expansion>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({from, p});
    if (it != cache.end()) return *it->second;
  }
  const CharTable& table = char_table(p.size());
  auto out = std::make_unique<Expansion>();
  const std::size_t pi = table.index(p);
  const auto& parts = table.partitions();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (from == Basis::P) {
      const std::int64_t chi = table.value(k, pi);  // chi^{parts[k]}(p)
      if (chi != 0) out->emplace_back(parts[k], BigRational(static_cast<long>(chi)));
    } else {
      const std::int64_t chi = table.value(pi, k);  // chi^p(parts[k])
      if (chi != 0) out->emplace_back(parts[k], BigRational(BigInt(static_cast<long>(chi)), z_const(parts[k])));
    }
  }
  for (auto& [q, c] : *out) c.canonicalize();
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(from, p), std::move(out));
  return *it->second;
}

template <class K>
SkeinElem<K> SkeinElem<K>::basis_element(Basis b, const Partition& p, const K& c) {
  SkeinElem x(b);
  x.add_term(p, c);
  return x;
}

template <class K>
SkeinElem<K> SkeinElem<K>::power_sum(int i) {
  if (i < 0) throw Error(ErrorCode::BadIndex, "power sum index must be >= 0");
  return basis_element(Basis::P, Partition::row(i));
}

template <class K>
K SkeinElem<K>::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? K() : it->second;
}

template <class K>
std::vector<int> SkeinElem<K>::degrees() const {
  std::vector<int> out;
  for (const auto& [p, c] : terms_)
    if (out.empty() || out.back() != p.size()) out.push_back(p.size());
  return out;
}

template <class K>
void SkeinElem<K>::add_term(const Partition& p, const K& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class K>
SkeinElem<K> SkeinElem<K>::operator-() const {
  SkeinElem r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

template <class K>
SkeinElem<K>& SkeinElem<K>::operator+=(const SkeinElem& y) {
  const SkeinElem& other = y.basis_ == basis_ ? y : basis_convert(y, basis_);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

template <class K>
SkeinElem<K>& SkeinElem<K>::operator-=(const SkeinElem& y) {
  return *this += -y;
}

template <class K>
SkeinElem<K>& SkeinElem<K>::operator*=(const K& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

template <class K>
bool operator==(const SkeinElem<K>& x, const SkeinElem<K>& y) {
  if (x.basis() == y.basis()) return x.terms() == y.terms();
  return x.terms() == basis_convert(y, x.basis()).terms();
}

template <class K>
SkeinElem<K> basis_convert(const SkeinElem<K>& x, Basis target) {
  if (x.basis() == target) return x;
  SkeinElem<K> out(target);
  for (const auto& [p, c] : x.terms())
    for (const auto& [q, r] : basis_expansion(x.basis(), p)) out.add_term(q, c * K(r));
  return out;
}

template <class K>
SkeinElem<K> multiply(const SkeinElem<K>& x, const SkeinElem<K>& y) {
  const SkeinElem<K> xp = basis_convert(x, Basis::P);
  const SkeinElem<K> yp = basis_convert(y, Basis::P);
  SkeinElem<K> out(Basis::P);
  for (const auto& [p, c] : xp.terms())
    for (const auto& [q, d] : yp.terms()) out.add_term(p.merged(q), c * d);
  return basis_convert(out, x.basis());
}

template <class K>
K meridian_shift(const Partition& lambda) {
  K sum;
  for (const Cell& cell : hooks_and_contents(lambda)) sum += K::monomial(0, 2 * cell.content);
  return K::a() * z_power<K>(1) * sum;
}

template <class K>
K meridian_eigenvalue(const Partition& lambda) {
  return unknot<K>() + meridian_shift<K>(lambda);
}

template <class K>
K framing_eigenvalue(const Partition& lambda) {
  return K::monomial(lambda.size(), 2 * content_sum(lambda));
}

template <class K>
SkeinElem<K> meridian(const SkeinElem<K>& x) {
  SkeinElem<K> w = basis_convert(x, Basis::W);
  SkeinElem<K> out(Basis::W);
  for (const auto& [p, c] : w.terms()) out.add_term(p, c * meridian_eigenvalue<K>(p));
  return out;
}

template <class K>
SkeinElem<K> meridian_minus_unknot_inverse(const SkeinElem<K>& x) {
  SkeinElem<K> w = basis_convert(x, Basis::W);
  SkeinElem<K> out(Basis::W);
  for (const auto& [p, c] : w.terms()) {
    if (p.empty()) throw Error(ErrorCode::DegreeZeroComponent, "P - unknot is not invertible in degree 0");
    out.add_term(p, c / meridian_shift<K>(p));
  }
  return out;
}

template <class K>
SkeinElem<K> framing(const SkeinElem<K>& x, int power) {
  SkeinElem<K> w = basis_convert(x, Basis::W);
  if (power == 0) return w;
  SkeinElem<K> out(Basis::W);
  for (const auto& [p, c] : w.terms())
    out.add_term(p, c * K::monomial(checked_exp_mul(power, p.size()), checked_exp_mul(power, 2 * content_sum(p))));
  return out;
}

template <class K>
SkeinElem<K> mirror(const SkeinElem<K>& x) {
  SkeinElem<K> out(x.basis());
  for (const auto& [p, c] : x.terms()) out.add_term(p, c.mirror());
  return out;
}

template <class K>
K unknot_eval(const SkeinElem<K>& x) {
  const SkeinElem<K> xp = basis_convert(x, Basis::P);
  std::map<int, K> cache;
  auto u = [&](int i) -> const K& {
    auto it = cache.find(i);
    if (it == cache.end()) it = cache.emplace(i, unknot_power_sum<K>(i)).first;
    return it->second;
  };
  K total;
  for (const auto& [p, c] : xp.terms()) {
    K term = c;
    for (int part : p.parts()) term *= u(part);
    total += term;
  }
  return total;
}

template <class K>
SkeinElem<K> core_curve(int m) {
  if (m < 1) throw Error(ErrorCode::BadIndex, "core_curve needs m >= 1");
  const K scale = K::monomial(-1, 0) / z_power<K>(m);
  SkeinElem<K> out(Basis::W);
  for (const auto& [q, r] : basis_expansion(Basis::P, Partition::row(m)))
    out.add_term(q, K(r) * meridian_shift<K>(q) * scale);
  return out;
}

#define HSKEIN_INSTANTIATE_SKEIN(K)                                                   \
  template class SkeinElem<K>;                                                        \
  template bool operator==(const SkeinElem<K>&, const SkeinElem<K>&);                 \
  template SkeinElem<K> basis_convert(const SkeinElem<K>&, Basis);                    \
  template SkeinElem<K> multiply(const SkeinElem<K>&, const SkeinElem<K>&);           \
  template K meridian_shift<K>(const Partition&);                                     \
  template K meridian_eigenvalue<K>(const Partition&);                                \
  template K framing_eigenvalue<K>(const Partition&);                                 \
  template SkeinElem<K> meridian(const SkeinElem<K>&);                                \
  template SkeinElem<K> meridian_minus_unknot_inverse(const SkeinElem<K>&);           \
  template SkeinElem<K> framing(const SkeinElem<K>&, int);                            \
  template SkeinElem<K> mirror(const SkeinElem<K>&);                                  \
  template K unknot_eval(const SkeinElem<K>&);                                        \
  template SkeinElem<K> core_curve<K>(int);

HSKEIN_INSTANTIATE_SKEIN(Scalar)
HSKEIN_INSTANTIATE_SKEIN(SampledScalar)

}  // namespace hskein
