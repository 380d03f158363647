#include <gtest/gtest.h>

#include <functional>

#include "hskein/bps.hpp"
#include "hskein/error.hpp"
#include "hskein/field.hpp"
#include "hskein/recursion.hpp"
#include "oracles.hpp"

using namespace hskein;
using R = RelElem<Scalar>;
using T = TensorSeries<Scalar>;

namespace {

Scalar z() { return z_power<Scalar>(1); }

// a sum_i C_i as a rank-1 operator series.
T disk_operator(int n) {
  T a(1, n);
  for (int i = 1; i <= n; ++i) a += Scalar::a() * T::from_skein(core_curve<Scalar>(i), n);
  return a;
}

std::vector<T> constant_coeffs(int n, const std::function<Scalar(int)>& f) {
  std::vector<T> out(static_cast<std::size_t>(n) + 1, T(0, n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] = T::constant(f(i), 0, n);
  return out;
}

}  // namespace

TEST(SolveAbsolute, ZeroOperatorGivesConstant) {
  const T m0 = T::constant(Scalar::a(), 1, 4);
  EXPECT_EQ(solve_absolute(T(1, 4), m0), m0);
}

TEST(SolveAbsolute, Disk) {
  const int n = 6;
  const T phi = solve_absolute(disk_operator(n));
  EXPECT_EQ(phi, make_psi<Scalar>({0, 1, 1, n}));
  for (int m = 0; m <= n; ++m)
    for (const Partition& p : partitions_of(m)) EXPECT_EQ(phi.coeff({p}), oracle::disk_coefficient(p.parts(), 1));
  EXPECT_TRUE(absolute_residual(phi, disk_operator(n)).is_zero());
}

TEST(SolveAbsolute, Annulus) {
  const int n = 4;
  T a(2, n);
  for (int i = 1; i <= n; ++i) {
    const auto ci = core_curve<Scalar>(i);
    for (const auto& [p, c] : ci.terms())
      for (const auto& [q, d] : ci.terms()) a.add_term({p, q}, Scalar::a() * z() * c * d);
  }
  const T phi = solve_absolute(a);
  EXPECT_EQ(phi, make_psi<Scalar>({0, 2, 1, n}));
  EXPECT_TRUE(absolute_residual(phi, a).is_zero());
}

TEST(SolveAbsolute, Deterministic) {
  const T x = solve_absolute(disk_operator(5));
  const T y = solve_absolute(disk_operator(5));
  EXPECT_EQ(x.terms().size(), y.terms().size());
  auto it = y.terms().begin();
  for (const auto& [key, c] : x.terms()) {
    EXPECT_EQ(key, it->first);
    EXPECT_EQ(c.to_string(), it->second.to_string());
    ++it;
  }
}

TEST(SolveAbsolute, RejectsDegreeZeroOperator) {
  EXPECT_THROW((void)solve_absolute(T::one(1, 3)), Error);
}

TEST(RelativeToAbsolute, Examples) {
  const int n = 4;
  R disk(1, n);
  for (int i = 1; i <= n; ++i) disk += R::c_power(i, 1, n);
  EXPECT_EQ(relative_to_absolute(disk), disk_operator(n));
  EXPECT_EQ(relative_to_absolute(-R::c_power(1, 1, n)), T::from_skein(SkeinElem<Scalar>::basis_element(Basis::W, {1}, -Scalar::a()), n));
}

TEST(Bridge, Examples) {
  const int n = 6;
  const auto disk_b = expln_bridge_A_to_B(constant_coeffs(n, [](int) { return Scalar(1); }));
  for (int i = 1; i <= n; ++i) EXPECT_EQ(disk_b[static_cast<std::size_t>(i)], T::constant(Scalar(BigRational(1, i)), 0, n));

  const Scalar x = Scalar::a() + Scalar(1);
  const auto single = expln_bridge_A_to_B(constant_coeffs(n, [&](int i) { return i == 1 ? x : Scalar(0); }));
  for (int i = 1; i <= n; ++i)
    EXPECT_EQ(single[static_cast<std::size_t>(i)],
              T::constant(Scalar(BigRational(i % 2 ? 1 : -1, i)) * x.pow(i), 0, n));

  const auto torus = expln_bridge_A_to_B(constant_coeffs(
      n, [](int i) { return z() * z_power<Scalar>(2 * i) / (Scalar::s() + Scalar::s().inverse()); }));
  for (int i = 1; i <= n; ++i)
    EXPECT_EQ(torus[static_cast<std::size_t>(i)], T::constant(z_power<Scalar>(i).pow(2) / Scalar(i), 0, n));
}

TEST(Bridge, RoundTrip) {
  const int n = 5;
  const auto d = recursion_datum<Scalar>(DatumKind::Annulus, n);
  const auto a = c_coefficients(d.a);
  const auto back = expln_bridge_B_to_A(expln_bridge_A_to_B(a));
  ASSERT_EQ(back.size(), a.size());
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_EQ(back[i], a[i]) << i;
}

TEST(SolveViaBridge, Examples) {
  const int n = 5;
  EXPECT_EQ(solve_relative_via_bridge(constant_coeffs(n, [](int i) { return Scalar(BigRational(1, i)); })),
            make_psi<Scalar>({0, 1, 1, n}));
  const T h = solve_relative_via_bridge(constant_coeffs(n, [](int i) { return z_power<Scalar>(i) / Scalar(i); }));
  T expected(1, n);
  for (int i = 0; i <= n; ++i) expected.add_term({Partition::row(i)}, Scalar(1));
  EXPECT_EQ(h, expected);
  EXPECT_EQ(h, h_series<Scalar>(n));
}

// B_i = +-z_i^(2g) / i reproduces Psi^{+-(g,1)}.
TEST(SolveViaBridge, BpsData) {
  const int n = 4;
  for (int g = 0; g <= 2; ++g)
    for (int sign : {1, -1}) {
      const auto b = constant_coeffs(n, [&](int i) {
        return Scalar(sign) * z_power<Scalar>(i).pow(2 * g) / Scalar(i);
      });
      EXPECT_EQ(solve_relative_via_bridge(b), make_psi<Scalar>({g, 1, sign, n})) << g << " " << sign;
    }
}
