#pragma once

#include <vector>

#include "hskein/relskein.hpp"

namespace hskein {

/// Solves (P - unknot) Phi = A Phi in the first tensor factor, where A is a
/// multiplication operator series of the same rank with no first-factor
/// degree-0 part (NonzeroConstantTerm otherwise). m0 is the first-factor
/// degree-0 part of the solution and must have an empty first partition in
/// every term. Result in the W basis.
template <class K>
TensorSeries<K> solve_absolute(const TensorSeries<K>& a, const TensorSeries<K>& m0);

/// Same with m0 = 1; the truncation of A is used.
template <class K>
TensorSeries<K> solve_absolute(const TensorSeries<K>& a);

/// (P - unknot) Phi - A Phi, to check a solution independently of the solver.
template <class K>
TensorSeries<K> absolute_residual(const TensorSeries<K>& phi, const TensorSeries<K>& a);

/// Applies cp termwise: sum c^i (x) A_i -> a sum C_i (x) A_i.
template <class K>
TensorSeries<K> relative_to_absolute(const RelElem<K>& a_rel);

/// Coefficients of c^i in ln(1 + sum c^i A_i), i = 1..N. Entry 0 of both
/// vectors is unused (kept so that index = c-exponent).
template <class K>
std::vector<TensorSeries<K>> expln_bridge_A_to_B(const std::vector<TensorSeries<K>>& a);

/// Coefficients of c^i in exp(sum c^i B_i) - 1.
template <class K>
std::vector<TensorSeries<K>> expln_bridge_B_to_A(const std::vector<TensorSeries<K>>& b);

/// exp(1 (x) ln m0 + sum (s^i - s^-i)^-1 P_i (x) B_i). m0 has the rank of the
/// B_i and constant term 1 (ConstantTermNotOne otherwise). Result in the W basis.
template <class K>
TensorSeries<K> solve_relative_via_bridge(const std::vector<TensorSeries<K>>& b, const TensorSeries<K>& m0);

/// Same with m0 = 1.
template <class K>
TensorSeries<K> solve_relative_via_bridge(const std::vector<TensorSeries<K>>& b);

}  // namespace hskein
