// Randomized algebraic properties with fixed seeds.
#include <gtest/gtest.h>

#include <random>

#include "hskein/bps.hpp"
#include "hskein/field.hpp"
#include "hskein/relskein.hpp"
#include "hskein/skein.hpp"
#include "hskein/tensor_series.hpp"

using namespace hskein;
using S = SkeinElem<Scalar>;
using T = TensorSeries<Scalar>;

namespace {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Scalar scalar() {
    Scalar x = Scalar::monomial(uniform(-2, 2), uniform(-2, 2), uniform(1, 3) * (uniform(0, 1) ? 1 : -1));
    if (uniform(0, 2) == 0) x += Scalar(uniform(-2, 2));
    if (uniform(0, 3) == 0) x /= z_power<Scalar>(uniform(1, 2));
    return x;
  }

  Partition partition(int max_size) {
    const auto& ps = partitions_of(uniform(0, max_size));
    return ps[static_cast<std::size_t>(uniform(0, static_cast<int>(ps.size()) - 1))];
  }

  S skein(int max_size, int terms = 3) {
    S x(uniform(0, 1) ? Basis::W : Basis::P);
    for (int i = 0; i < terms; ++i) x.add_term(partition(max_size), scalar());
    return x;
  }

  T series(int rank, int n, bool positive) {
    T x(rank, n, uniform(0, 1) ? Basis::W : Basis::P);
    for (int i = 0; i < 4; ++i) {
      PartitionTuple t;
      for (int k = 0; k < rank; ++k) t.push_back(partition(n));
      bool trivial = true;
      for (const auto& p : t) trivial = trivial && p.empty();
      if (positive && trivial) continue;
      x.add_term(t, scalar());
    }
    return x;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

TEST(SkeinProperties, RingAxioms) {
  Gen g(11);
  for (int trial = 0; trial < 15; ++trial) {
    const S x = g.skein(3), y = g.skein(3), w = g.skein(2);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
  }
}

TEST(SkeinProperties, OperatorsCommuteWithBasisChange) {
  Gen g(12);
  for (int trial = 0; trial < 15; ++trial) {
    const S x = g.skein(4);
    const S xw = basis_convert(x, Basis::W), xp = basis_convert(x, Basis::P);
    EXPECT_EQ(meridian(xw), meridian(xp));
    EXPECT_EQ(framing(xw, 2), framing(xp, 2));
    EXPECT_EQ(mirror(xw), mirror(xp));
    EXPECT_EQ(unknot_eval(xw), unknot_eval(xp));
  }
}

TEST(SkeinProperties, MirrorIsAnInvolutiveRingMap) {
  Gen g(13);
  for (int trial = 0; trial < 15; ++trial) {
    const S x = g.skein(3), y = g.skein(3);
    EXPECT_EQ(mirror(mirror(x)), x);
    EXPECT_EQ(mirror(x * y), mirror(x) * mirror(y));
    EXPECT_EQ(unknot_eval(mirror(x)), unknot_eval(x).mirror());
  }
}

TEST(SkeinProperties, UnknotEvalIsMultiplicative) {
  Gen g(14);
  for (int trial = 0; trial < 15; ++trial) {
    const S x = g.skein(3), y = g.skein(3);
    EXPECT_EQ(unknot_eval(x * y), unknot_eval(x) * unknot_eval(y));
  }
}

TEST(SkeinProperties, MeridianInverse) {
  Gen g(15);
  for (int trial = 0; trial < 15; ++trial) {
    S x = g.skein(4);
    x = basis_convert(x, Basis::W);
    x.add_term(Partition(), -x.coeff(Partition()));
    const S y = meridian_minus_unknot_inverse(x);
    EXPECT_EQ(meridian(y) - unknot<Scalar>() * y, x);
  }
}

TEST(SeriesProperties, ExpLnInverse) {
  Gen g(21);
  for (int trial = 0; trial < 8; ++trial) {
    const int rank = g.uniform(1, 2);
    const T x = g.series(rank, 3, true);
    const T e = series_exp(x);
    EXPECT_EQ(series_ln(e), x);
    EXPECT_EQ(e * series_inverse(e), T::one(rank, 3));
  }
}

TEST(SeriesProperties, ExpIsAHomomorphism) {
  Gen g(22);
  for (int trial = 0; trial < 8; ++trial) {
    const T x = g.series(2, 3, true), y = g.series(2, 3, true);
    EXPECT_EQ(series_exp(x + y), series_exp(x) * series_exp(y));
  }
}

TEST(SeriesProperties, ProductCommutesAndAssociates) {
  Gen g(23);
  for (int trial = 0; trial < 8; ++trial) {
    const T x = g.series(2, 2, false), y = g.series(2, 2, false), w = g.series(2, 2, false);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * w, x * (y * w));
  }
}

TEST(SeriesProperties, MirrorIsARingMap) {
  Gen g(24);
  for (int trial = 0; trial < 8; ++trial) {
    const T x = g.series(1, 3, false), y = g.series(1, 3, false);
    EXPECT_EQ(series_mirror(x * y), series_mirror(x) * series_mirror(y));
    EXPECT_EQ(series_mirror(series_mirror(x)), x);
  }
}

TEST(RelProperties, CommutatorIsADerivationUpToEmbedding) {
  Gen g(31);
  for (int trial = 0; trial < 6; ++trial) {
    const T x = g.series(1, 3, false), y = g.series(1, 3, false);
    // [xy, e] = l(x) [y, e] + [x, e] r(y)
    EXPECT_EQ(commutator_e(x * y), embed_left(x) * commutator_e(y) + commutator_e(x) * embed_right(y));
  }
}

TEST(RelProperties, ExtractedDataSatisfiesRecursion) {
  for (int g = 0; g <= 2; ++g)
    for (int sign : {1, -1}) {
      const T psi = make_psi<Scalar>({g, 1, sign, 4});
      EXPECT_TRUE(check_relative_recursion(psi, extract_relative_data(psi), RecursionSide::Right).holds());
    }
}
