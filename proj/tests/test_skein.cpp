#include <gtest/gtest.h>

#include "hskein/error.hpp"
#include "hskein/field.hpp"
#include "hskein/skein.hpp"
#include "oracles.hpp"

using namespace hskein;
using S = SkeinElem<Scalar>;

namespace {

Scalar z() { return z_power<Scalar>(1); }
Scalar U() { return unknot<Scalar>(); }
S W(const Partition& p, const Scalar& c = Scalar(1)) { return S::basis_element(Basis::W, p, c); }
S P(const Partition& p, const Scalar& c = Scalar(1)) { return S::basis_element(Basis::P, p, c); }

}  // namespace

TEST(BasisConvert, Examples) {
  EXPECT_EQ(basis_convert(P({1}), Basis::W).terms(), W({1}).terms());
  EXPECT_EQ(basis_convert(P({2}), Basis::W).terms(), (W({2}) - W({1, 1})).terms());
  const S w11 = basis_convert(W({1, 1}), Basis::P);
  EXPECT_EQ(w11.terms(), (P({1, 1}, Scalar(BigRational(1, 2))) - P({2}, Scalar(BigRational(1, 2)))).terms());
  EXPECT_EQ(w11.basis(), Basis::P);
}

TEST(BasisConvert, RoundTripAndCharacters) {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& mu : partitions_of(n)) {
      const S pw = basis_convert(P(mu), Basis::W);
      for (const Partition& lambda : partitions_of(n))
        EXPECT_EQ(pw.coeff(lambda), Scalar(oracle::character(lambda.parts(), mu.parts())));
      EXPECT_EQ(basis_convert(pw, Basis::P).terms(), P(mu).terms());
      EXPECT_EQ(basis_convert(basis_convert(W(mu), Basis::P), Basis::W).terms(), W(mu).terms());
    }
}

TEST(BasisConvert, EqualityAcrossBases) {
  EXPECT_EQ(P({1, 1}), W({2}) + W({1, 1}));
  EXPECT_FALSE(P({2}) == W({2}));
}

TEST(Multiply, Examples) {
  const S x = W({2, 1}, U()) + W({3});
  EXPECT_EQ(S::one() * x, x);
  EXPECT_EQ(P({1}) * P({1}), P({1, 1}));
  EXPECT_EQ((P({1}) * P({1})).terms(), P({1, 1}).terms());
  EXPECT_EQ((W({1}) * W({1})).terms(), (W({2}) + W({1, 1})).terms());
}

// Littlewood-Richardson coefficients read off from products of Schur
// polynomials in enough variables to be faithful.
TEST(Multiply, MatchesSchurPolynomials) {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 5 - n1; ++n2)
      for (const Partition& l1 : partitions_of(n1))
        for (const Partition& l2 : partitions_of(n2)) {
          const int k = n1 + n2;
          const S prod = W(l1) * W(l2);
          ASSERT_EQ(prod.basis(), Basis::W);
          oracle::Monomials rhs;
          for (const auto& [nu, c] : prod.terms()) {
            ASSERT_TRUE(c.is_rational());
            ASSERT_EQ(c.rational_part().get_den(), 1);
            const long m = c.rational_part().get_num().get_si();
            for (const auto& [e, v] : oracle::schur(nu.parts(), k)) rhs[e] += m * v;
          }
          for (auto it = rhs.begin(); it != rhs.end();) it = it->second == 0 ? rhs.erase(it) : std::next(it);
          EXPECT_EQ(oracle::multiply(oracle::schur(l1.parts(), k), oracle::schur(l2.parts(), k)), rhs)
              << l1.to_string() << " * " << l2.to_string();
        }
}

TEST(Meridian, Examples) {
  EXPECT_EQ(meridian(S::one()).terms(), W({}, U()).terms());
  EXPECT_EQ(meridian(W({1})).terms(), W({1}, U() + Scalar::a() * z()).terms());
  EXPECT_EQ(meridian(W({2})).terms(), W({2}, U() + Scalar::a() * z() * (Scalar(1) + Scalar::monomial(0, 2))).terms());
  for (int n = 0; n <= 6; ++n)
    for (const Partition& p : partitions_of(n)) {
      EXPECT_EQ(meridian_eigenvalue<Scalar>(p), oracle::meridian_eigenvalue(p.parts()));
      EXPECT_EQ(meridian_shift<Scalar>(p), oracle::meridian_eigenvalue(p.parts()) - U());
    }
}

TEST(Meridian, AgreesInPowerSumBasis) {
  const S x = P({2, 1}, Scalar::s()) + P({3});
  EXPECT_EQ(meridian(x), meridian(basis_convert(x, Basis::W)));
}

TEST(MeridianInverse, Examples) {
  EXPECT_EQ(meridian_minus_unknot_inverse(W({1})).terms(), W({1}, (Scalar::a() * z()).inverse()).terms());
  const S x = W({3, 1});
  const S y = meridian_minus_unknot_inverse(x);
  EXPECT_EQ((meridian(y) - U() * y).terms(), x.terms());
  try {
    (void)meridian_minus_unknot_inverse(S::one());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZeroComponent);
  }
}

TEST(Framing, Examples) {
  EXPECT_EQ(framing(W({1}), 1).terms(), W({1}, Scalar::a()).terms());
  EXPECT_EQ(framing(W({2}), 1).terms(), W({2}, Scalar::monomial(2, 2)).terms());
  const S x = W({2, 1}, U()) + W({3});
  EXPECT_EQ(framing(x, 0), x);
  EXPECT_EQ(framing(framing(x, 3), -3), x);
  EXPECT_EQ(framing(x, 2), framing(framing(x, 1), 1));
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(W({2, 1})).terms(), W({2, 1}).terms());
  EXPECT_EQ(mirror(P({3})).terms(), P({3}).terms());
  EXPECT_EQ(mirror(W({1}, z())).terms(), W({1}, -z()).terms());
  EXPECT_EQ(mirror(P({2}, Scalar::a())).basis(), Basis::P);
}

TEST(UnknotEval, Examples) {
  EXPECT_EQ(unknot_eval(W({1})), U());
  const Scalar u2 = (Scalar::monomial(2, 0) - Scalar::monomial(-2, 0)) / (Scalar::monomial(0, 2) - Scalar::monomial(0, -2));
  EXPECT_EQ(unknot_eval(P({2})), u2);
  EXPECT_EQ(unknot_eval(W({1, 1})), (U() * U() - u2) / Scalar(2));
  EXPECT_EQ(unknot_eval(S::one()), Scalar(1));
}

TEST(UnknotEval, HookContentFormula) {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& p : partitions_of(n)) EXPECT_EQ(unknot_eval(W(p)), oracle::hook_content_unknot(p.parts())) << p.to_string();
}

TEST(UnknotEval, IsMultiplicative) {
  const S x = W({2}) + W({1}, Scalar::a());
  const S y = W({1, 1}, z()) - W({1});
  EXPECT_EQ(unknot_eval(x * y), unknot_eval(x) * unknot_eval(y));
}

TEST(CoreCurve, Examples) {
  EXPECT_EQ(core_curve<Scalar>(1).terms(), W({1}).terms());
  EXPECT_EQ(core_curve<Scalar>(2).terms(), (W({2}, Scalar::s()) - W({1, 1}, Scalar::s().inverse())).terms());
  EXPECT_EQ(core_curve<Scalar>(3).terms(),
            (W({3}, Scalar::monomial(0, 2)) - W({2, 1}) + W({1, 1, 1}, Scalar::monomial(0, -2))).terms());
  EXPECT_THROW((void)core_curve<Scalar>(0), Error);
}

// C_m is the sum over hooks (m-k, 1^k) of (-1)^k s^(m-1-2k) W.
TEST(CoreCurve, HookExpansion) {
  for (int m = 1; m <= 7; ++m) {
    S expected;
    for (int k = 0; k < m; ++k) {
      std::vector<int> parts{m - k};
      parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
      expected += W(Partition(parts), Scalar::monomial(0, m - 1 - 2 * k, k % 2 ? -1 : 1));
    }
    EXPECT_EQ(core_curve<Scalar>(m).terms(), expected.terms()) << m;
  }
}
