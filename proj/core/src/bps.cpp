#include "hskein/bps.hpp"

#include "hskein/error.hpp"
#include "hskein/field.hpp"

namespace hskein {

namespace {

void check_spec(const BpsSpec& spec) {
  if (spec.l < 0) throw Error(ErrorCode::BadParams, "l must be >= 0");
  if (spec.sign != 1 && spec.sign != -1) throw Error(ErrorCode::BadParams, "sign must be +1 or -1");
  if (spec.truncation < 0) throw Error(ErrorCode::BadParams, "truncation must be >= 0");
}

template <class K>
TensorSeries<K> scalar_series(const K& c, int truncation) {
  return TensorSeries<K>::constant(c, 0, truncation);
}

}  // namespace

template <class K>
TensorSeries<K> make_psi_log(const BpsSpec& spec) {
  check_spec(spec);
  TensorSeries<K> psi(spec.l, spec.truncation, Basis::P);
  const int e = 2 * spec.g + spec.l - 2;
  for (int i = 1; i <= spec.truncation; ++i) {
    const K c = K(BigRational(spec.sign, i)) * z_power<K>(i).pow(e);
    psi.add_term(PartitionTuple(static_cast<std::size_t>(spec.l), Partition::row(i)), c, i);
  }
  return psi;
}

template <class K>
TensorSeries<K> make_psi(const BpsSpec& spec) {
  return series_exp(make_psi_log<K>(spec));
}

template <class K>
TensorSeries<K> disk_closed_form(int sign, int truncation) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::BadParams, "sign must be +1 or -1");
  TensorSeries<K> out(1, truncation, Basis::W);
  for (int n = 0; n <= truncation; ++n) {
    for (const Partition& p : partitions_of(n)) {
      K c(sign == -1 && n % 2 == 1 ? -1 : 1);
      for (const Cell& cell : hooks_and_contents(p)) c *= K::monomial(0, sign * cell.content) / z_power<K>(cell.hook);
      out.add_term({p}, c);
    }
  }
  return out;
}

template <class K>
TensorSeries<K> annulus_closed_form(int sign, int truncation) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::BadParams, "sign must be +1 or -1");
  TensorSeries<K> out(2, truncation, Basis::W);
  for (int n = 0; n <= truncation; ++n) {
    for (const Partition& p : partitions_of(n)) {
      if (sign == 1)
        out.add_term({p, p}, K(1));
      else
        out.add_term({p, p.conjugate()}, K(n % 2 == 0 ? 1 : -1));
    }
  }
  return out;
}

template <class K>
TensorSeries<K> one_holed_torus_closed_form(int sign, int truncation) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::BadParams, "sign must be +1 or -1");
  TensorSeries<K> out = TensorSeries<K>::one(1, truncation, Basis::W);
  const K z = z_power<K>(1);
  for (int i = 1; i <= truncation; ++i) {
    SkeinElem<K> c = core_curve<K>(i);
    if (sign == -1) c = mirror(c);
    for (const auto& [p, v] : c.terms()) out.add_term({p}, K(sign) * z * v);
  }
  return out;
}

template <class K>
TensorSeries<K> h_series(int truncation) {
  TensorSeries<K> out(1, truncation, Basis::W);
  for (int i = 0; i <= truncation; ++i) out.add_term({Partition::row(i)}, K(1));
  return out;
}

std::vector<DatumKind> all_datum_kinds() {
  return {DatumKind::Disk,    DatumKind::DiskLeft,      DatumKind::InverseDisk, DatumKind::OneHoledTorus,
          DatumKind::Annulus, DatumKind::MirrorAnnulus, DatumKind::HSeries};
}

template <class K>
RecursionDatum<K> recursion_datum(DatumKind kind, int truncation) {
  const int n = truncation;
  const K z = z_power<K>(1);
  auto scalar_b = [&](auto coeff) {
    std::vector<TensorSeries<K>> b(static_cast<std::size_t>(n) + 1, TensorSeries<K>(0, n));
    for (int i = 1; i <= n; ++i) b[static_cast<std::size_t>(i)] = scalar_series(coeff(i), n);
    return b;
  };
  auto scalar_a = [&](auto coeff, int last) {
    RelElem<K> a(1, n);
    for (int i = 1; i <= std::min(last, n); ++i) a.add_term(i, {Partition()}, coeff(i));
    return a;
  };
  RecursionDatum<K> d{"", TensorSeries<K>(1, n), RelElem<K>(1, n), RecursionSide::Right, {}};
  switch (kind) {
    case DatumKind::Disk:
      d.name = "disk";
      d.phi = make_psi<K>({0, 1, 1, n});
      d.a = scalar_a([](int) { return K(1); }, n);
      d.b = scalar_b([](int i) { return K(BigRational(1, i)); });
      break;
    case DatumKind::DiskLeft:
      d.name = "disk (left variant)";
      d.phi = make_psi<K>({0, 1, 1, n});
      d.a = scalar_a([](int) { return K(1); }, 1);
      d.side = RecursionSide::Left;
      d.b = scalar_b([](int i) { return K(BigRational(1, i)); });
      break;
    case DatumKind::InverseDisk:
      d.name = "inverse disk";
      d.phi = make_psi<K>({0, 1, -1, n});
      d.a = scalar_a([](int) { return K(-1); }, 1);
      d.b = scalar_b([](int i) { return K(BigRational(-1, i)); });
      break;
    case DatumKind::OneHoledTorus: {
      d.name = "one-holed torus";
      d.phi = make_psi<K>({1, 1, 1, n});
      const K denom = K::s() + K::monomial(0, -1);
      d.a = scalar_a([&](int i) { return z * z_power<K>(2 * i) / denom; }, n);
      d.b = scalar_b([](int i) { return z_power<K>(i).pow(2) * K(BigRational(1, i)); });
      break;
    }
    case DatumKind::Annulus:
    case DatumKind::MirrorAnnulus: {
      const bool mirrored = kind == DatumKind::MirrorAnnulus;
      d.name = mirrored ? "mirror annulus" : "annulus";
      d.phi = make_psi<K>({0, 2, mirrored ? -1 : 1, n});
      d.a = RelElem<K>(2, n);
      const K sign(mirrored ? -1 : 1);
      for (int i = 1; i <= n; ++i) {
        SkeinElem<K> c = core_curve<K>(i);
        if (mirrored) c = mirror(c);
        for (const auto& [p, v] : c.terms()) d.a.add_term_in_basis(i, {Partition(), p}, sign * z * v, Basis::W);
      }
      d.b.assign(static_cast<std::size_t>(n) + 1, TensorSeries<K>(1, n, Basis::P));
      for (int i = 1; i <= n; ++i) {
        TensorSeries<K> bi(1, n, Basis::P);
        bi.add_term({Partition::row(i)}, sign * z_power<K>(i) * K(BigRational(1, i)));
        d.b[static_cast<std::size_t>(i)] = bi;
      }
      break;
    }
    case DatumKind::HSeries:
      d.name = "H(t)";
      d.phi = h_series<K>(n);
      d.a = scalar_a([](int i) { return (K(1) - K::monomial(0, -2)) * K::monomial(0, i); }, n);
      d.b = scalar_b([](int i) { return z_power<K>(i) * K(BigRational(1, i)); });
      break;
  }
  return d;
}

#define HSKEIN_INSTANTIATE_BPS(K)                                            \
  template TensorSeries<K> make_psi_log<K>(const BpsSpec&);                  \
  template TensorSeries<K> make_psi<K>(const BpsSpec&);                      \
  template TensorSeries<K> disk_closed_form<K>(int, int);                    \
  template TensorSeries<K> annulus_closed_form<K>(int, int);                 \
  template TensorSeries<K> one_holed_torus_closed_form<K>(int, int);         \
  template TensorSeries<K> h_series<K>(int);                                 \
  template RecursionDatum<K> recursion_datum<K>(DatumKind, int);

HSKEIN_INSTANTIATE_BPS(Scalar)
HSKEIN_INSTANTIATE_BPS(SampledScalar)

}  // namespace hskein
