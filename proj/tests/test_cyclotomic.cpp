#include <gtest/gtest.h>

#include <map>

#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "test_support.hpp"

namespace mckay {
namespace {

using testing::q;
using testing::random_cyc;
using testing::random_nonzero_cyc;
using testing::z;

const std::vector<unsigned> kConductors = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 20, 24};

// Independent route to Phi_m: the Moebius product of (x^d - 1)^mu(m/d),
// with integer synthetic division.
int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<long> moebius_cyclotomic(unsigned m) {
  std::vector<long> poly{1};
  std::vector<unsigned> dividing;
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0) dividing.push_back(d);
  // Multiply first so every division below is exact.
  for (unsigned d : dividing) {
    if (moebius(m / d) != 1) continue;
    std::vector<long> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] += poly[i];
      next[i] -= poly[i];
    }
    poly = next;
  }
  for (unsigned d : dividing) {
    if (moebius(m / d) != -1) continue;
    // Divide by x^d - 1: q_i = q_{i-d} + p_i ... working from the top.
    std::vector<long> quot(poly.size() - d, 0);
    std::vector<long> rem = poly;
    for (std::size_t k = rem.size() - 1; k >= d; --k) {
      const long c = rem[k];
      quot[k - d] = c;
      rem[k] = 0;
      rem[k - d] += c;
    }
    for (std::size_t k = 0; k < d; ++k) EXPECT_EQ(rem[k], 0) << "inexact division for m=" << m;
    poly = quot;
  }
  return poly;
}

TEST(CycloPoly, SmallCases) {
  EXPECT_EQ(cyclo_poly(1), (std::vector<Rational>{-1, 1}));
  EXPECT_EQ(cyclo_poly(4), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(cyclo_poly(6), (std::vector<Rational>{1, -1, 1}));
}

TEST(CycloPoly, MatchesMoebiusProduct) {
  for (unsigned m = 1; m <= 120; ++m) {
    const auto ours = cyclo_poly(m);
    const auto oracle = moebius_cyclotomic(m);
    ASSERT_EQ(ours.size(), oracle.size()) << "m=" << m;
    ASSERT_EQ(ours.size() - 1, euler_phi(m)) << "m=" << m;
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_EQ(ours[i], oracle[i]) << "m=" << m;
  }
}

TEST(CycloPoly, FirstNonUnitCoefficientAt105) {
  const auto p = cyclo_poly(105);
  bool has_two = false;
  for (const auto& c : p) has_two |= (c == -2);
  EXPECT_TRUE(has_two);
}

TEST(CycNum, Products) {
  EXPECT_EQ(z(4) * z(4), q(4, -1));
  EXPECT_EQ(z(3) * z(3, 2), q(3, 1));
  EXPECT_EQ((q(3, 1) + z(3)) * (q(3, 1) + z(3, 2)), q(3, 1));
}

TEST(CycNum, ConductorMismatchThrows) {
  EXPECT_THROW(cyc_mul(z(3), z(4)), ArithmeticError);
  EXPECT_THROW(z(3) + z(6), ArithmeticError);
}

TEST(CycNum, Inverses) {
  for (unsigned m : kConductors) EXPECT_EQ(cyc_inv(z(m)), z(m, m - 1)) << m;
  EXPECT_EQ(cyc_inv(q(1, 2)), q(1, 1, 2));
  // (1 + i)^-1 = (1 - i) / 2
  EXPECT_EQ(cyc_inv(q(4, 1) + z(4)), q(4, 1, 2) - q(4, 1, 2) * z(4));
  EXPECT_THROW(cyc_inv(CycNum(5)), ArithmeticError);
}

TEST(CycNum, Embedding) {
  EXPECT_EQ(cyc_embed(z(2), 4), q(4, -1));
  // zeta_3 = zeta_6^2 = zeta_6 - 1 modulo x^2 - x + 1
  EXPECT_EQ(cyc_embed(z(3), 6), z(6) - q(6, 1));
  EXPECT_EQ(cyc_embed(q(1, 5), 12), q(12, 5));
  EXPECT_THROW(cyc_embed(z(3), 8), ArithmeticError);
}

TEST(CycNum, Restriction) {
  EXPECT_EQ(cyc_restrict(z(12, 4), 3), z(3));
  EXPECT_EQ(cyc_restrict(z(12, 3), 4), z(4));
  EXPECT_FALSE(cyc_restrict(z(12), 6).has_value());
  EXPECT_FALSE(cyc_restrict(z(8), 4).has_value());
  EXPECT_THROW(cyc_restrict(z(12), 5), ArithmeticError);
  // zeta_50 = -zeta_25^13 lives in Q(zeta_25).
  EXPECT_EQ(cyc_restrict(z(50), 25), -z(25, 13));
}

TEST(CycNum, MinimalConductor) {
  const std::vector<CycNum> rational{q(4, 3), q(4, -1)};
  EXPECT_EQ(minimal_conductor(rational), 1u);
  const std::vector<CycNum> mixed{z(12, 4), q(12, 2)};
  EXPECT_EQ(minimal_conductor(mixed), 3u);
  const std::vector<CycNum> two_fields{z(3), z(4)};
  EXPECT_EQ(minimal_conductor(two_fields), 12u);
  // sqrt(2) = zeta_8 + zeta_8^-1 needs conductor 8.
  const std::vector<CycNum> root_two{z(8) + z(8, 7)};
  EXPECT_EQ(minimal_conductor(root_two), 8u);
}

TEST(CycNum, ZetaHasExactOrder) {
  for (unsigned m : kConductors) {
    CycNum power(m, 1);
    for (unsigned k = 1; k < m; ++k) {
      power *= z(m);
      EXPECT_FALSE(power.is_one()) << "zeta_" << m << "^" << k;
    }
    power *= z(m);
    EXPECT_TRUE(power.is_one()) << "zeta_" << m << "^" << m;
  }
}

TEST(CycNum, ToStringFormsCanonicalText) {
  EXPECT_EQ(CycNum(7).to_string(), "0");
  EXPECT_EQ(q(1, -3, 2).to_string(), "-3/2");
  EXPECT_EQ((q(5, 1, 2) + z(5, 2) * q(5, 3)).to_string(), "1/2 + 3*z^2");
  EXPECT_EQ((-z(7)).to_string(), "-z");
}

// ---- field axioms on random elements ----

TEST(CycNumProperty, FieldAxioms) {
  for (unsigned m : kConductors) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycNum a = random_cyc(m);
      const CycNum b = random_cyc(m);
      const CycNum c = random_cyc(m);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) - b, a);
      CycNum fused = c;
      fused.add_mul(a, b);
      EXPECT_EQ(fused, c + a * b);
      fused.sub_mul(a, b);
      EXPECT_EQ(fused, c);
      const CycNum nz = random_nonzero_cyc(m);
      EXPECT_TRUE((nz * cyc_inv(nz)).is_one()) << nz.to_string() << " in conductor " << m;
    }
  }
}

TEST(CycNumProperty, EmbeddingIsAHomomorphismAndRestrictsBack) {
  const std::vector<std::pair<unsigned, unsigned>> towers = {
      {1, 4}, {2, 6}, {3, 6}, {3, 12}, {4, 12}, {5, 10}, {5, 20}, {6, 24}, {4, 8}, {9, 18}};
  for (const auto& [m, big] : towers) {
    for (int trial = 0; trial < 30; ++trial) {
      const CycNum a = random_cyc(m);
      const CycNum b = random_cyc(m);
      EXPECT_EQ(cyc_embed(a * b, big), cyc_embed(a, big) * cyc_embed(b, big));
      EXPECT_EQ(cyc_embed(a + b, big), cyc_embed(a, big) + cyc_embed(b, big));
      EXPECT_EQ(cyc_restrict(cyc_embed(a, big), m), a);
    }
  }
}

TEST(CycNumProperty, PowersAgreeWithRepeatedProducts) {
  for (unsigned m : {3u, 5u, 8u, 12u}) {
    const CycNum a = random_nonzero_cyc(m);
    CycNum running(m, 1);
    for (long k = 0; k < 9; ++k) {
      EXPECT_EQ(cyc_pow(a, k), running);
      EXPECT_EQ(cyc_pow(a, -k) * running, CycNum(m, 1));
      running *= a;
    }
  }
}

TEST(CycNumProperty, HashRespectsEquality) {
  for (int trial = 0; trial < 100; ++trial) {
    const CycNum a = random_cyc(12);
    const CycNum b = cyc_restrict(cyc_embed(a, 24), 12).value();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.hash(), b.hash());
  }
}

}  // namespace
}  // namespace mckay
