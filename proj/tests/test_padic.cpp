#include <gtest/gtest.h>

#include "lusztig/error.hpp"
#include "lusztig/padic.hpp"

using namespace lusztig;

namespace {

// Independent scan of the extended C_n diagram: a vertex carries a Lusztig
// function when both sides of its quotient have triangular rank.
int vertex_scan_count(int n) {
  int count = is_triangular(n) ? 2 : 0;
  for (int i = 1; i < n; ++i) count += is_triangular(i) && is_triangular(n - i);
  return count;
}

}  // namespace

TEST(Vertices, ReductiveQuotients) {
  EXPECT_EQ(reductive_quotient({2, 1}), (std::pair{2, 2}));
  EXPECT_EQ(reductive_quotient({3, 0}), (std::pair{6, 0}));
  EXPECT_EQ(reductive_quotient({3, 3}), (std::pair{6, 0}));
  EXPECT_EQ(reductive_quotient({5, 4}), (std::pair{8, 2}));
  try {
    (void)reductive_quotient({3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Catalog, Examples) {
  const auto one = catalog_padic_lusztig(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_TRUE(one[0].vertex.hyperspecial());
  EXPECT_TRUE(one[1].vertex.hyperspecial());

  const auto two = catalog_padic_lusztig(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].vertex.index, 1);
  EXPECT_EQ(reductive_quotient(two[0].vertex), (std::pair{2, 2}));

  const auto four = catalog_padic_lusztig(4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].vertex.index, 1);
  EXPECT_EQ(four[1].vertex.index, 3);

  EXPECT_TRUE(catalog_padic_lusztig(5).empty());
  EXPECT_THROW((void)catalog_padic_lusztig(0), Error);
}

TEST(Catalog, MatchesVertexScan) {
  for (int n = 1; n <= 500; ++n) {
    const auto cat = catalog_padic_lusztig(n);
    EXPECT_EQ(static_cast<int>(cat.size()), vertex_scan_count(n)) << n;
    for (const auto& d : cat) {
      const auto [a, b] = reductive_quotient(d.vertex);
      EXPECT_EQ(a + b, 2 * n);
      EXPECT_TRUE(is_triangular(d.delta1));
      EXPECT_TRUE(is_triangular(d.delta2));
      EXPECT_EQ(d.delta1 + d.delta2, n);
      if (!d.vertex.hyperspecial()) {
        EXPECT_EQ(2 * d.delta1, a);
        EXPECT_EQ(2 * d.delta2, b);
      }
    }
  }
}

TEST(Counting, TriangularReps) {
  EXPECT_EQ(triangular_reps(1), (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(triangular_reps(2), (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(triangular_reps(6), (std::vector<std::pair<int, int>>{{0, 3}, {2, 2}, {3, 0}}));
}

TEST(Counting, DivisorCensus) {
  EXPECT_EQ(divisor_census(1).d1, 2);
  EXPECT_EQ(divisor_census(1).d3, 0);
  EXPECT_EQ(divisor_census(2).d1, 2);
  EXPECT_EQ(divisor_census(2).d3, 1);
  EXPECT_EQ(divisor_census(6).d1, 3);
  EXPECT_EQ(divisor_census(6).d3, 0);
}

TEST(Counting, OddSquares) {
  EXPECT_EQ(odd_square_reps(1), 2);
  EXPECT_EQ(odd_square_reps(2), 1);
  EXPECT_EQ(odd_square_reps(5), 0);
}

TEST(Counting, PiecewiseFormula) {
  EXPECT_EQ(theorem_formula_dim(1), 6);
  EXPECT_EQ(theorem_formula_dim(2), 2);
  EXPECT_EQ(theorem_formula_dim(3), 6);
  EXPECT_EQ(theorem_formula_dim(6), 8);
}

TEST(Counting, IdentitiesHoldUpTo500) {
  for (const auto& row : census(500)) {
    EXPECT_TRUE(row.counts_agree()) << row.n;
    EXPECT_EQ(row.enum_count, static_cast<int>(triangular_reps(row.n).size()));
  }
}

TEST(Census, Rows) {
  const auto rows = census(10);
  ASSERT_EQ(rows.size(), 10u);
  const auto& six = rows[5];
  EXPECT_EQ(six.enum_count, 3);
  EXPECT_EQ(six.grosswald_count, 3);
  EXPECT_EQ(six.d1 - six.d3, 3);
  EXPECT_EQ(six.odd_square_count, 3);
  EXPECT_EQ(six.theorem_formula_value, 8);
  EXPECT_TRUE(six.mismatch());

  const auto& five = rows[4];
  EXPECT_EQ(five.enum_count, 0);
  EXPECT_EQ(five.grosswald_count, 0);
  EXPECT_EQ(five.odd_square_count, 0);

  EXPECT_EQ(rows[2].enum_count, 2);
  EXPECT_EQ(rows[2].d1 - rows[2].d3, 2);
  for (int n : {1, 2, 3}) EXPECT_TRUE(rows[static_cast<std::size_t>(n - 1)].mismatch()) << n;
  EXPECT_EQ(rows[6].enum_count, 2);  // 7 = 6 + 1
  EXPECT_EQ(rows[7].enum_count, 0);
  EXPECT_EQ(census(1).front().enum_count, 2);
  EXPECT_THROW((void)census(0), Error);
}

TEST(Eigenvalues, Symbolic) {
  EXPECT_EQ(eigenvalue_symbolic(1, 3).name(), "-i");
  EXPECT_EQ(eigenvalue_symbolic(2, 3).name(), "-1");
  EXPECT_EQ(eigenvalue_symbolic(4, 3).name(), "1");
  for (int n = 1; n < 20; ++n) EXPECT_EQ(eigenvalue_symbolic(n, 1).name(), "1");
  EXPECT_THROW((void)eigenvalue_symbolic(1, 2), Error);
}

TEST(Stability, Predicate) {
  EXPECT_EQ(stable_subspace_dim(2), 1);
  EXPECT_EQ(stable_subspace_dim(4), 0);
  EXPECT_EQ(stable_subspace_dim(12), 1);
  EXPECT_EQ(stable_subspace_dim(42), 1);
  EXPECT_EQ(stable_subspace_dim(7), 0);
}

TEST(Stability, ExactlyOneSymmetricDescriptor) {
  for (int n = 1; n <= 500; ++n) {
    int symmetric = 0;
    for (const auto& d : catalog_padic_lusztig(n)) symmetric += d.delta1 == d.delta2;
    EXPECT_EQ(symmetric, stable_subspace_dim(n)) << n;
  }
}

TEST(Distributions, Examples) {
  const auto two = lusztig_distributions(2, 3);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].eigenvalue.name(), "-1");
  EXPECT_TRUE(two[0].stable);

  const auto one = lusztig_distributions(1, 3);
  ASSERT_EQ(one.size(), 2u);
  for (const auto& d : one) {
    EXPECT_EQ(d.eigenvalue.name(), "-i");
    EXPECT_FALSE(d.stable);
  }
  EXPECT_TRUE(lusztig_distributions(5, 1).empty());
}
