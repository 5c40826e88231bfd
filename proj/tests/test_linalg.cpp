#include <gtest/gtest.h>

#include "mckay/error.hpp"
#include "mckay/linalg.hpp"
#include "test_support.hpp"

namespace mckay {
namespace {

using testing::diag;
using testing::q;
using testing::random_matrix;
using testing::rng;
using testing::z;

CycMatrix swap_on_two_copies() {
  // S_2 acting on C^2 + C^2 by swapping coordinates in each summand.
  return CycMatrix::from_integers(1, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

CycMatrix standard_omega(unsigned m = 1) {
  return CycMatrix::from_integers(1, {{0, 1}, {-1, 0}}).embed(m);
}

CycMatrix times_vector(const CycMatrix& a, const std::vector<CycNum>& v) {
  CycMatrix col(v.size(), 1, a.conductor());
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  return a * col;
}

// Callers pass linearly independent vectors.
Subspace span_of(std::size_t n, unsigned m, std::vector<std::vector<long>> vectors) {
  Subspace s{n, m, {}};
  for (const auto& v : vectors) {
    std::vector<CycNum> w;
    for (long x : v) w.emplace_back(m, x);
    s.basis.push_back(std::move(w));
  }
  return s;
}

TEST(Rank, Examples) {
  EXPECT_EQ(mat_rank(CycMatrix::identity(4, 1)), 4u);
  EXPECT_EQ(mat_rank(CycMatrix(3, 5, 7)), 0u);
  EXPECT_EQ(mat_rank(diag({z(3), z(3, 2)}) - CycMatrix::identity(2, 3)), 2u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(CycMatrix(2, 2, 1)).dim(), 2u);
  EXPECT_EQ(kernel_basis(CycMatrix::identity(3, 5)).dim(), 0u);

  CycMatrix a(2, 2, 4);
  a(0, 0) = q(4, 1);
  a(0, 1) = z(4);
  a(1, 0) = z(4);
  a(1, 1) = q(4, -1);
  const Subspace k = kernel_basis(a);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(times_vector(a, k.basis[0]).is_zero());
  // The free column is the second one, so the vector is (-z4, 1).
  EXPECT_EQ(k.basis[0][0], -z(4));
  EXPECT_EQ(k.basis[0][1], q(4, 1));
}

TEST(FixedSpace, Examples) {
  EXPECT_EQ(fixed_space(CycMatrix::identity(4, 1)).dim(), 4u);
  EXPECT_EQ(fixed_space(q(1, -1) * CycMatrix::identity(2, 1)).dim(), 0u);
  EXPECT_EQ(fixed_space(swap_on_two_copies()).dim(), 2u);
}

TEST(Intersection, Examples) {
  const Subspace full = whole_space(6, 1);
  EXPECT_EQ(subspace_intersection_dim(full, full), 6u);

  const Subspace u = span_of(6, 1, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                                    {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
  const Subspace w = span_of(6, 1, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                                    {0, 0, 0, 0, 1, 0}, {1, 1, 1, 1, 1, 1}});
  EXPECT_EQ(subspace_sum_dim(u, w), 6u);
  EXPECT_TRUE(transversal(u, w));
  EXPECT_EQ(subspace_intersection_dim(u, w), 2u);
  EXPECT_EQ(subspace_intersection(u, w).dim(), 2u);

  const Subspace inner = span_of(6, 1, {{0, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}});
  EXPECT_TRUE(subspace_contains(u, inner));
  EXPECT_EQ(subspace_intersection_dim(inner, u), 2u);
  EXPECT_FALSE(transversal(inner, inner));
}

TEST(Symplectic, Examples) {
  for (unsigned m : {2u, 3u, 5u, 12u})
    EXPECT_TRUE(is_symplectic(diag({z(m), z(m, m - 1)}), standard_omega(m))) << m;
  EXPECT_FALSE(is_symplectic(diag({z(3), z(3)}), standard_omega(3)));
  EXPECT_TRUE(is_symplectic(CycMatrix::identity(2, 1), standard_omega()));
}

TEST(Symplectic, RejectsBadForms) {
  EXPECT_THROW(validate_symplectic_form(CycMatrix::identity(2, 1)), PreconditionError);
  EXPECT_THROW(validate_symplectic_form(CycMatrix(2, 2, 1)), PreconditionError);
  EXPECT_THROW(validate_symplectic_form(CycMatrix(2, 3, 1)), PreconditionError);
  EXPECT_NO_THROW(validate_symplectic_form(standard_omega()));
}

TEST(EigenMultiplicities, Examples) {
  EXPECT_EQ(eigen_multiplicities(CycMatrix::identity(4, 1), 1), (std::vector<std::size_t>{4}));
  EXPECT_EQ(eigen_multiplicities(diag({z(3), z(3, 2)}), 3), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(eigen_multiplicities(q(1, -1) * CycMatrix::identity(2, 1), 2),
            (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(eigen_multiplicities(diag({z(3), z(3, 2)}), 2), PreconditionError);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(CycMatrix::identity(3, 5)), q(5, 1));
  EXPECT_EQ(determinant(swap_on_two_copies()), q(1, 1));
  EXPECT_EQ(determinant(CycMatrix::from_integers(1, {{0, 1}, {1, 0}})), q(1, -1));
  EXPECT_EQ(determinant(diag({z(7), z(7, 2), z(7, 4)})), q(7, 1));
}

// ---- properties ----

TEST(LinalgProperty, RankNullity) {
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (unsigned m : {1u, 3u, 4u, 5u, 8u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t r = size(rng()), c = size(rng());
      const CycMatrix a = random_matrix(r, c, m, trial % 2 ? 0.3 : 0.8);
      const Subspace k = kernel_basis(a);
      EXPECT_EQ(mat_rank(a) + k.dim(), c);
      for (const auto& v : k.basis) EXPECT_TRUE(times_vector(a, v).is_zero());
      EXPECT_EQ(mat_rank(k.as_columns()), k.dim());
    }
  }
}

TEST(LinalgProperty, RankOfProductOfLowRankFactors) {
  for (int trial = 0; trial < 20; ++trial) {
    const CycMatrix left = random_matrix(5, 2, 12, 0.9);
    const CycMatrix right = random_matrix(2, 5, 12, 0.9);
    EXPECT_LE(mat_rank(left * right), 2u);
    EXPECT_EQ(mat_rank(left * right), mat_rank((left * right).transpose()));
  }
}

TEST(LinalgProperty, DeterminantIsMultiplicative) {
  for (unsigned m : {1u, 3u, 4u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const CycMatrix a = random_matrix(3, 3, m, 0.7);
      const CycMatrix b = random_matrix(3, 3, m, 0.7);
      EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
      EXPECT_EQ(determinant(a).is_zero(), mat_rank(a) < 3);
    }
  }
}

// Random finite-order matrices: conjugates of a diagonal of r-th roots of unity
// by a random invertible rational matrix.
CycMatrix random_finite_order(std::size_t n, unsigned r) {
  std::uniform_int_distribution<long> exponent(0, r - 1);
  CycMatrix d(n, n, r);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = z(r, exponent(rng()));
  for (;;) {
    CycMatrix p = random_matrix(n, n, 1, 0.8).embed(r);
    if (mat_rank(p) < n) continue;
    // Inverse by cofactors.
    const CycNum det = determinant(p);
    CycMatrix inv(n, n, r);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CycMatrix minor(n - 1, n - 1, r);
        for (std::size_t a = 0, ra = 0; a < n; ++a) {
          if (a == j) continue;
          for (std::size_t b = 0, rb = 0; b < n; ++b) {
            if (b == i) continue;
            minor(ra, rb++) = p(a, b);
          }
          ++ra;
        }
        CycNum cof = determinant(minor);
        if ((i + j) % 2) cof = -cof;
        inv(i, j) = cyc_mul(cof, cyc_inv(det));
      }
    }
    EXPECT_TRUE((p * inv).is_identity());
    return p * d * inv;
  }
}

TEST(LinalgProperty, MultiplicitiesMatchTraceFourierTransform) {
  for (unsigned r : {2u, 3u, 4u, 5u, 6u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycMatrix g = random_finite_order(3, r);
      const auto mult = eigen_multiplicities(g, r);
      std::size_t total = 0;
      for (auto x : mult) total += x;
      EXPECT_EQ(total, 3u);
      EXPECT_EQ(mult[0], fixed_space(g).dim());
      for (unsigned j = 0; j < r; ++j) {
        CycNum sum(r);
        CycMatrix power = CycMatrix::identity(3, r);
        for (unsigned k = 0; k < r; ++k) {
          sum.add_mul(trace(power), z(r, -static_cast<long>(j * k)));
          power = power * g;
        }
        ASSERT_TRUE(sum.is_rational());
        EXPECT_EQ(sum.constant(), Rational(r * mult[j])) << "r=" << r << " j=" << j;
      }
    }
  }
}

TEST(LinalgProperty, CodimensionSubadditivity) {
  std::uniform_int_distribution<std::size_t> dimension(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const CycMatrix a = random_matrix(dimension(rng()), 5, 3, 0.6);
    const CycMatrix b = random_matrix(dimension(rng()), 5, 3, 0.6);
    const Subspace u = a.rows() ? kernel_basis(a) : whole_space(5, 3);
    const Subspace w = b.rows() ? kernel_basis(b) : whole_space(5, 3);
    const Subspace cap = subspace_intersection(u, w);
    EXPECT_LE(cap.codim(), u.codim() + w.codim());
    EXPECT_EQ(cap.dim() + subspace_sum_dim(u, w), u.dim() + w.dim());
    EXPECT_TRUE(subspace_contains(u, cap));
    EXPECT_TRUE(subspace_contains(w, cap));
    EXPECT_EQ(cap.dim(), subspace_intersection_dim(u, w));
    EXPECT_TRUE(same_subspace(u, u));
  }
}

}  // namespace
}  // namespace mckay
