#pragma once

#include <string>
#include <vector>

#include "hskein/recursion.hpp"

namespace hskein {

/// Genus g, number of boundary components l, sign +1 or -1, truncation N.
struct BpsSpec {
  int g = 0;
  int l = 1;
  int sign = 1;
  int truncation = 0;
};

/// psi^{+-(g,l)} = +- sum_{i<=N} (1/i) (s^i - s^-i)^{2g+l-2} P_i^{(x)l}, P basis.
/// For l = 0 this is the rank-0 series with t^i in place of P_i^{(x)0}.
template <class K>
TensorSeries<K> make_psi_log(const BpsSpec& spec);

/// Psi^{+-(g,l)} = exp(psi^{+-(g,l)}), P basis.
template <class K>
TensorSeries<K> make_psi(const BpsSpec& spec);

/// 1 + sum (+-1)^{|lambda|} W_lambda prod_cells s^{+-c}/(s^h - s^-h), W basis.
template <class K>
TensorSeries<K> disk_closed_form(int sign, int truncation);

/// + : 1 + sum W_lambda (x) W_lambda.  - : 1 + sum (-1)^{|lambda|} W_lambda (x) W_lambda'.
template <class K>
TensorSeries<K> annulus_closed_form(int sign, int truncation);

/// + : 1 + z sum C_i.  - : 1 - z sum mirror(C_i). W basis.
template <class K>
TensorSeries<K> one_holed_torus_closed_form(int sign, int truncation);

/// 1 + sum W_(i) t^i.
template <class K>
TensorSeries<K> h_series(int truncation);

/// A relative recursion [Phi, e] = side(A, Phi) together with the solution it
/// determines and the logarithmic data B of the bridge.
template <class K>
struct RecursionDatum {
  std::string name;
  TensorSeries<K> phi;
  RelElem<K> a;
  RecursionSide side = RecursionSide::Right;
  /// Closed-form logarithmic data; entry i is B_i (entry 0 unused).
  std::vector<TensorSeries<K>> b;
};

enum class DatumKind { Disk, DiskLeft, InverseDisk, OneHoledTorus, Annulus, MirrorAnnulus, HSeries };

/// The relative data of the disk, its left-handed variant l(Psi, c), the inverse
/// disk, the one-holed torus, the annulus, the mirror annulus and H(t).
template <class K>
RecursionDatum<K> recursion_datum(DatumKind kind, int truncation);

std::vector<DatumKind> all_datum_kinds();

}  // namespace hskein
