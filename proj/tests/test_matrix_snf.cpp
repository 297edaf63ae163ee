#include "nilstab/matrix.hpp"
#include "nilstab/random.hpp"
#include "nilstab/snf.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

using namespace nilstab;

namespace {

IntMatrix minor_matrix(const IntMatrix &a, const std::vector<std::size_t> &rows,
                       const std::vector<std::size_t> &cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(i, j) = a(rows[i], cols[j]);
  return m;
}

// Laplace expansion along the first row.
Integer cofactor_det(const IntMatrix &a) {
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i)
      rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j)
        cols.push_back(k);
    Integer term = a(0, j) * cofactor_det(minor_matrix(a, rows, cols));
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix &a, std::size_t k) {
  Integer g = 0;
  for (const auto &rows : all_subsets(a.rows(), k))
    for (const auto &cols : all_subsets(a.cols(), k)) {
      Integer d = cofactor_det(minor_matrix(a, rows, cols));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs)
    out.emplace_back(x);
  return out;
}

void expect_valid_snf(const IntMatrix &a, const SNFResult &res) {
  EXPECT_EQ(res.U * a * res.V, res.D);
  EXPECT_EQ(abs(determinant(res.U)), 1);
  EXPECT_EQ(abs(determinant(res.V)), 1);
  auto diag = res.diagonal();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j)
        EXPECT_EQ(res.D(i, j), 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(sgn(diag[i]), 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0)
        EXPECT_EQ(diag[i + 1], 0);
      else
        EXPECT_TRUE(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
    }
  }
}

} // namespace

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  Rng rng(11);
  for (int s = 0; s < 60; ++s) {
    auto n = static_cast<std::size_t>(random_int(rng, 1, 5));
    IntMatrix a = random_int_matrix(rng, n, n, 7, 0.8);
    EXPECT_EQ(determinant(a), cofactor_det(a));
  }
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 4}, {1, 2}}), 0);
}

TEST(Matrix, InverseUnimodular) {
  Rng rng(12);
  for (int s = 0; s < 30; ++s) {
    IntMatrix a = random_gl_matrix(rng, 4, 10);
    IntMatrix b = inverse_unimodular(a);
    EXPECT_TRUE((a * b).is_identity());
    EXPECT_TRUE((b * a).is_identity());
  }
  EXPECT_THROW(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
  EXPECT_THROW(inverse_unimodular(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Matrix, KroneckerMixedProduct) {
  Rng rng(13);
  for (int s = 0; s < 10; ++s) {
    IntMatrix a = random_int_matrix(rng, 2, 3), b = random_int_matrix(rng, 3, 2);
    IntMatrix c = random_int_matrix(rng, 3, 2), d = random_int_matrix(rng, 2, 3);
    EXPECT_EQ(kronecker(a, c) * kronecker(b, d), kronecker(a * b, c * d));
  }
}

TEST(Matrix, CompoundIsMultiplicative) {
  Rng rng(14);
  for (int s = 0; s < 10; ++s) {
    IntMatrix a = random_int_matrix(rng, 4, 4), b = random_int_matrix(rng, 4, 4);
    for (std::size_t t = 1; t <= 4; ++t)
      EXPECT_EQ(compound(a * b, t), compound(a, t) * compound(b, t));
    EXPECT_EQ(compound(a, 4)(0, 0), cofactor_det(a));
  }
  EXPECT_EQ(increasing_tuples(4, 2).size(), 6u);
}

TEST(Matrix, StabilizeAppendsFixedVector) {
  IntMatrix a{{0, 1}, {1, 1}};
  EXPECT_EQ(stabilize_matrix(a), (IntMatrix{{0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
}

TEST(Integer, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(-2, 2), 3);
}

TEST(SNF, FixedExamples) {
  EXPECT_EQ(smith_diagonal(IntMatrix{{2, 0}, {0, 3}}), ints({1, 6}));
  EXPECT_EQ(smith_diagonal(IntMatrix{{-2}}), ints({2}));
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(smith_diagonal(a), ints({2, 6, 12}));
  expect_valid_snf(a, snf(a));
  EXPECT_EQ(smith_diagonal(IntMatrix{{0, 0}, {0, 0}}), ints({0, 0}));
}

TEST(SNF, MatchesDeterminantalDivisors) {
  Rng rng(15);
  for (int s = 0; s < 80; ++s) {
    auto m = static_cast<std::size_t>(random_int(rng, 1, 4));
    auto n = static_cast<std::size_t>(random_int(rng, 1, 4));
    IntMatrix a = random_int_matrix(rng, m, n, 9, 0.6);
    SNFResult res = snf(a);
    expect_valid_snf(a, res);
    auto diag = res.diagonal();
    Integer prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      EXPECT_EQ(prod, determinantal_divisor(a, k)) << a;
    }
  }
}

TEST(SNF, LargeSparse) {
  Rng rng(16);
  for (int s = 0; s < 3; ++s) {
    IntMatrix a = random_int_matrix(rng, 40, 40, 5, 0.06);
    SNFResult res = snf(a);
    expect_valid_snf(a, res);
    EXPECT_EQ(smith_diagonal(a), res.diagonal());
  }
}

TEST(SNF, Cokernel) {
  EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 3}}).to_string(), "Z/6");
  EXPECT_EQ(cokernel(IntMatrix{{2}, {0}}).to_string(), "Z + Z/2");
  EXPECT_EQ(cokernel(IntMatrix(3, 0), 3).to_string(), "Z^3");
  EXPECT_EQ(cokernel(IntMatrix{{1, 0}, {0, 1}}).to_string(), "0");
  EXPECT_THROW(cokernel(IntMatrix{{1}}, 2), std::invalid_argument);
}

TEST(SNF, KernelAndLattice) {
  IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  IntMatrix k = integer_kernel(a);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((a * k).is_zero());
  // Saturated: the kernel basis spans a primitive sublattice.
  EXPECT_EQ(cokernel(k).free_rank, 1u);
  EXPECT_TRUE(cokernel(k).invariant_factors.empty());

  IntMatrix l{{2, 0}, {0, 3}};
  EXPECT_TRUE(lattice_contains(l, ints({4, 9})));
  EXPECT_FALSE(lattice_contains(l, ints({1, 3})));
  EXPECT_TRUE(lattice_contains(IntMatrix(2, 0), ints({0, 0})));
  EXPECT_FALSE(lattice_contains(IntMatrix(2, 0), ints({0, 1})));
}
