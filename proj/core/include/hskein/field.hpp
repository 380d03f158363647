#pragma once

// Named constants shared by every coefficient field K (Scalar or SampledScalar).

namespace hskein {

/// z_i = s^i - s^-i; z_1 is z.
template <class K>
K z_power(int i) {
  return K::monomial(0, i) - K::monomial(0, -i);
}

/// The unknot, (a - a^-1)/(s - s^-1).
template <class K>
K unknot() {
  return (K::a() - K::monomial(-1, 0)) / z_power<K>(1);
}

/// U(P_i) = (a^i - a^-i)/(s^i - s^-i).
template <class K>
K unknot_power_sum(int i) {
  return (K::monomial(i, 0) - K::monomial(-i, 0)) / z_power<K>(i);
}

}  // namespace hskein
