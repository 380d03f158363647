#include <gtest/gtest.h>

#include "hskein/bps.hpp"
#include "hskein/error.hpp"
#include "hskein/field.hpp"
#include "hskein/relskein.hpp"

using namespace hskein;
using R = RelElem<Scalar>;
using T = TensorSeries<Scalar>;

namespace {

Scalar z() { return z_power<Scalar>(1); }

R disk_data(int n) {
  R a(1, n);
  for (int i = 1; i <= n; ++i) a += R::c_power(i, 1, n);
  return a;
}

T skein_series(const SkeinElem<Scalar>& x, int n) { return T::from_skein(x, n); }

}  // namespace

TEST(RelMul, Examples) {
  const int n = 4;
  EXPECT_EQ(R::c_power(1, 1, n) * R::c_power(1, 1, n), R::c_power(2, 1, n));
  R x(1, n);
  x.add_term(2, {{1}}, Scalar::a());
  x.add_term(0, {{2, 1}}, z());
  EXPECT_EQ(R::one(1, n) * x, x);
  R cp1(2, n);
  cp1.add_term(1, {{}, {1}}, Scalar(1));
  R expected(2, n);
  expected.add_term(2, {{}, {1, 1}}, Scalar(1));
  EXPECT_EQ(cp1 * cp1, expected);
  EXPECT_THROW((void)(R::one(1, n) * R::one(2, n)), Error);
}

TEST(RelMul, DropsTermsBeyondTruncation) {
  EXPECT_TRUE((R::c_power(2, 1, 3) * R::c_power(2, 1, 3)).is_zero());
}

TEST(EmbedRight, Examples) {
  const int n = 3;
  EXPECT_EQ(embed_right(T::one(1, n)), R::one(1, n));
  R p2(1, n);
  p2.add_term(0, {{2}}, Scalar(1));
  EXPECT_EQ(embed_right(skein_series(SkeinElem<Scalar>::power_sum(2), n)), p2);
  const T psi = make_psi<Scalar>({0, 1, 1, 2});
  const R e = embed_right(psi);
  for (const auto& [key, c] : e.terms()) EXPECT_EQ(key.c, 0);
  EXPECT_EQ(e.size(), convert_all(psi, Basis::P).size());
}

TEST(EmbedLeft, Examples) {
  const int n = 4;
  EXPECT_EQ(embed_left(T::one(1, n)), R::one(1, n));
  for (int i = 1; i <= n; ++i) {
    R expected(1, n);
    expected.add_term(0, {Partition::row(i)}, Scalar(1));
    expected += R::c_power(i, 1, n, z_power<Scalar>(i));
    EXPECT_EQ(embed_left(skein_series(SkeinElem<Scalar>::power_sum(i), n)), expected);
  }
  R sq(1, n);
  sq.add_term(0, {{1, 1}}, Scalar(1));
  sq.add_term(1, {{1}}, Scalar(2) * z());
  sq.add_term(2, {{}}, z() * z());
  EXPECT_EQ(embed_left(skein_series(SkeinElem<Scalar>::basis_element(Basis::P, {1, 1}), n)), sq);
}

TEST(EmbedLeft, IsMultiplicative) {
  const int n = 4;
  const T x = make_psi<Scalar>({1, 1, 1, n});
  const T y = make_psi<Scalar>({0, 1, -1, n});
  EXPECT_EQ(embed_left(x * y), embed_left(x) * embed_left(y));
  EXPECT_EQ(embed_right(x * y), embed_right(x) * embed_right(y));
}

TEST(Commutator, Examples) {
  const int n = 5;
  EXPECT_TRUE(commutator_e(T::one(1, n)).is_zero());
  for (int i = 1; i <= n; ++i)
    EXPECT_EQ(commutator_e(skein_series(SkeinElem<Scalar>::power_sum(i), n)), R::c_power(i, 1, n, z_power<Scalar>(i)));
  R expected(1, n);
  for (int i = 1; i <= n; ++i) expected += R::c_power(i, 1, n, Scalar(BigRational(1, i)));
  EXPECT_EQ(commutator_e(make_psi_log<Scalar>({0, 1, 1, n})), expected);
}

TEST(CapOnCPart, Examples) {
  const int n = 4;
  for (int m = 1; m <= n; ++m)
    EXPECT_EQ(cp_on_c_part(R::c_power(m, 1, n)), skein_series(core_curve<Scalar>(m), n) * T::constant(Scalar::a(), 1, n));
  EXPECT_EQ(cp_on_c_part(R::one(1, n)), T::constant(unknot<Scalar>(), 1, n));

  std::vector<T> coeffs(static_cast<std::size_t>(n) + 1, T(1, n));
  T expected(2, n);
  for (int i = 1; i <= n; ++i) {
    coeffs[static_cast<std::size_t>(i)] = z() * skein_series(core_curve<Scalar>(i), n);
    const auto ci = core_curve<Scalar>(i);
    for (const auto& [p, c] : ci.terms())
      for (const auto& [q, d] : ci.terms()) expected.add_term({p, q}, Scalar::a() * z() * c * d);
  }
  EXPECT_EQ(cp_on_c_part(from_c_coefficients(coeffs, n)), expected);

  R mixed(1, n);
  mixed.add_term(1, {{1}}, Scalar(1));
  try {
    (void)cp_on_c_part(mixed);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedMixedTerm);
  }
}

TEST(CCoefficients, RoundTrip) {
  const auto d = recursion_datum<Scalar>(DatumKind::Annulus, 3);
  const auto coeffs = c_coefficients(d.a);
  ASSERT_EQ(coeffs.size(), 4u);
  EXPECT_EQ(from_c_coefficients(coeffs, 3), d.a);
}

TEST(RelativeRecursion, Examples) {
  const int n = 6;
  EXPECT_TRUE(check_relative_recursion(make_psi<Scalar>({0, 1, -1, n}), -R::c_power(1, 1, n), RecursionSide::Right).holds());
  EXPECT_TRUE(check_relative_recursion(make_psi<Scalar>({0, 1, 1, n}), disk_data(n), RecursionSide::Right).holds());
  const auto res = check_relative_recursion(T::one(1, n), R::c_power(1, 1, n), RecursionSide::Right);
  EXPECT_EQ(res.failing_degrees(), std::vector<int>{1});
  EXPECT_EQ(res.residual, -R::c_power(1, 1, n));
}

TEST(RelativeRecursion, LeftSide) {
  const int n = 5;
  EXPECT_TRUE(
      check_relative_recursion(make_psi<Scalar>({0, 1, 1, n}), R::c_power(1, 1, n), RecursionSide::Left).holds());
  EXPECT_FALSE(check_relative_recursion(make_psi<Scalar>({0, 1, 1, n}), disk_data(n), RecursionSide::Left).holds());
}

TEST(ExtractRelativeData, Examples) {
  const int n = 5;
  EXPECT_EQ(extract_relative_data(make_psi<Scalar>({0, 1, 1, n})), disk_data(n));
  R torus(1, n);
  for (int i = 1; i <= n; ++i)
    torus += R::c_power(i, 1, n, z() * z_power<Scalar>(2 * i) / (Scalar::s() + Scalar::s().inverse()));
  EXPECT_EQ(extract_relative_data(make_psi<Scalar>({1, 1, 1, n})), torus);
  R h(1, n);
  for (int i = 1; i <= n; ++i)
    h += R::c_power(i, 1, n, (Scalar(1) - Scalar::monomial(0, -2)) * Scalar::monomial(0, i));
  EXPECT_EQ(extract_relative_data(h_series<Scalar>(n)), h);
  EXPECT_THROW((void)extract_relative_data(T::constant(Scalar(2), 1, n)), Error);
}

// l(xy, e) = l(x, e) l(y, e), so 1 + A is multiplicative.
TEST(ExtractRelativeData, OnePlusDataIsMultiplicative) {
  const int n = 4;
  const T x = make_psi<Scalar>({0, 1, 1, n});
  const T y = make_psi<Scalar>({1, 1, 1, n});
  const R a = extract_relative_data(x);
  const R b = extract_relative_data(y);
  EXPECT_EQ(extract_relative_data(x * y), a + b + a * b);
}
