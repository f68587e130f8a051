#include <random>

#include <gtest/gtest.h>

#include "lusztig.hpp"

using namespace lusztig;

namespace {

constexpr FiniteFormClass kNone{};
constexpr FiniteFormClass kSquare{1, 1};
constexpr FiniteFormClass kNonsquare{1, -1};

double max_diff(const ClassFunction& a, const ClassFunction& b) {
  double m = 0;
  for (const auto& [idx, v] : a.values) m = std::max(m, std::abs(v - b.at(idx)));
  for (const auto& [idx, v] : b.values) m = std::max(m, std::abs(v - a.at(idx)));
  return m;
}

}  // namespace

TEST(Triangular, Basics) {
  EXPECT_EQ(triangular(0), 0);
  EXPECT_EQ(triangular(4), 10);
  EXPECT_EQ(triangular_index(10), 4);
  EXPECT_FALSE(triangular_index(5).has_value());
  EXPECT_EQ(triangular_index(0), 0);
  for (int k = 0; k < 200; ++k) EXPECT_EQ(triangular_index(triangular(k)), k);
}

TEST(Triangular, LusztigPartitions) {
  EXPECT_EQ(lusztig_partition(1), SymplecticPartition({2}));
  EXPECT_EQ(lusztig_partition(3), SymplecticPartition({4, 2}));
  EXPECT_EQ(lusztig_partition(10), SymplecticPartition({8, 6, 4, 2}));
  EXPECT_THROW((void)lusztig_partition(2), Error);
  EXPECT_EQ(extended_lusztig_partition(3, 1), SymplecticPartition({4, 2, 2}));
  EXPECT_EQ(extended_lusztig_partition(1, 3), SymplecticPartition({4, 2, 2}));
  EXPECT_EQ(extended_lusztig_partition(1, 1), SymplecticPartition({2, 2}));
  EXPECT_EQ(extended_lusztig_partition(6, 0), lusztig_partition(6));
  EXPECT_THROW((void)extended_lusztig_partition(2, 1), Error);
  EXPECT_TRUE(is_lusztig_partition(SymplecticPartition({4, 2})));
  EXPECT_FALSE(is_lusztig_partition(SymplecticPartition({4, 2, 2})));
  EXPECT_TRUE(is_extended_lusztig_partition(SymplecticPartition({4, 2, 2})));
  EXPECT_FALSE(is_extended_lusztig_partition(SymplecticPartition({4, 4})));
}

TEST(CircSign, Examples) {
  const FieldSpec f(7);
  const SymplecticPartition l42({4, 2});
  EXPECT_EQ(circ_sgn({l42, {kSquare, kNonsquare, kNone}}, f), 1);
  EXPECT_EQ(circ_sgn({l42, {kNonsquare, kSquare, kNone}}, f), -1);
  EXPECT_EQ(circ_sgn({SymplecticPartition({2}), {kNonsquare}}, f), -1);
  EXPECT_EQ(circ_sgn({SymplecticPartition({2}), {kSquare}}, f), 1);
  EXPECT_THROW((void)circ_sgn({SymplecticPartition({4}), {kNone, kSquare}}, f), Error);
}

TEST(CircSign, DependsOnlyOnPartsTwoModFour) {
  // (8,6,4,2): only Q_2 and Q_6 matter.
  const FieldSpec f(11);
  for (const auto& l : enumerate_rational_orbits_finite(lusztig_partition(10), f)) {
    const int expected = l.form(2).disc_sign * l.form(6).disc_sign;
    EXPECT_EQ(circ_sgn(l, f), expected);
  }
}

TEST(LusztigFunction, Sp6Coefficients) {
  const auto c = lusztig_coefficients(3, FieldSpec(7));
  EXPECT_EQ(c.partition, SymplecticPartition({4, 2}));
  ASSERT_EQ(c.terms.size(), 4u);
  const std::vector<std::pair<FiniteFormClass, FiniteFormClass>> order = {
      {kSquare, kSquare}, {kSquare, kNonsquare}, {kNonsquare, kSquare}, {kNonsquare, kNonsquare}};
  const std::vector<int> signs = {1, 1, -1, -1};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(c.terms[k].first.form(2), order[k].first);
    EXPECT_EQ(c.terms[k].first.form(4), order[k].second);
    EXPECT_EQ(c.terms[k].second, signs[k]);
  }
}

TEST(LusztigFunction, Sp2Values) {
  const FieldSpec f(3);
  const auto fn = lusztig_function(1, f);
  const auto& alg = fn.algebra;
  EXPECT_EQ(fn.at(alg.index_of(Matrix::from_rows({{0, 1}, {0, 0}}, 3))), Complex(1, 0));
  EXPECT_EQ(fn.at(alg.index_of(Matrix::from_rows({{0, 2}, {0, 0}}, 3))), Complex(-1, 0));
  EXPECT_EQ(fn.at(alg.index_of(Matrix(2, 2, 3))), Complex(0, 0));
  EXPECT_EQ(fn.at(alg.index_of(Matrix::from_rows({{1, 0}, {0, 2}}, 3))), Complex(0, 0));
  EXPECT_EQ(fn.values.size(), 8u);
}

TEST(LusztigFunction, TotalMassVanishes) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    Complex mass{};
    for (const auto& [_, v] : lusztig_function(1, FieldSpec(p)).values) mass += v;
    EXPECT_LT(std::abs(mass), 1e-12);
  }
}

TEST(LusztigFunction, ConstantOnOrbits) {
  const FieldSpec f(5);
  const auto oracle = orbit_partition_oracle(1, f);
  const auto fn = lusztig_function(1, f, oracle);
  for (const auto& orbit : oracle.orbits)
    for (auto idx : orbit) EXPECT_EQ(fn.at(idx), fn.at(orbit.front()));
}

TEST(LusztigFunction, RejectsNonTriangular) {
  try {
    (void)lusztig_function(2, FieldSpec(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTriangular);
  }
}

// --- Fourier transform --------------------------------------------------------------

TEST(Fourier, DeltaAtZeroIsConstant) {
  for (std::uint32_t p : {3u, 5u}) {
    const SpAlgebra alg({1}, FieldSpec(p));
    const auto ft = fourier_transform(delta_function(alg, alg.index_of(Matrix(2, 2, p))));
    const double expected = std::pow(double(p), -1.5);
    for (const auto& [_, v] : ft.values) EXPECT_TRUE(approx_equal(v, Complex(expected, 0)));
  }
}

TEST(Fourier, TwiceIsParity) {
  std::mt19937 rng(1);
  std::normal_distribution<double> gauss;
  const SpAlgebra alg({1}, FieldSpec(3));
  ClassFunction f{alg, {}};
  for (std::uint64_t i = 0; i < alg.cardinality(); ++i) f.values[i] = Complex(gauss(rng), gauss(rng));
  EXPECT_LT(max_diff(fourier_transform(fourier_transform(f)), parity(f)), 1e-9);
}

TEST(Fourier, Parseval) {
  std::mt19937 rng(2);
  std::normal_distribution<double> gauss;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const SpAlgebra alg({1}, FieldSpec(p));
    ClassFunction f{alg, {}};
    for (std::uint64_t i = 0; i < alg.cardinality(); ++i)
      if (rng() % 3 == 0) f.values[i] = Complex(gauss(rng), gauss(rng));
    EXPECT_NEAR(fourier_transform(f).l2_norm_squared(), f.l2_norm_squared(), 1e-9 * f.l2_norm_squared());
  }
}

TEST(Fourier, PartialEvaluationAgrees) {
  const FieldSpec f(5);
  const auto fn = lusztig_function(1, f);
  const auto full = fourier_transform(fn);
  const std::vector<std::uint64_t> points = {0, 7, 42, 124};
  const auto partial = fourier_transform_at(fn, points);
  for (auto idx : points) EXPECT_TRUE(approx_equal(partial.at(idx), full.at(idx)));
}

TEST(Fourier, GramIsTheTraceForm) {
  std::mt19937 rng(31);
  const SpAlgebra alg({2}, FieldSpec(5));
  std::uniform_int_distribution<std::uint64_t> pick(0, alg.cardinality() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto i = pick(rng), j = pick(rng);
    EXPECT_EQ(alg.pairing(alg.coords(i), alg.coords(j)), trace_form(alg.matrix(i), alg.matrix(j)).value);
  }
}

// --- eigenvalues -------------------------------------------------------------------

TEST(Eigen, Sp2) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const FieldSpec f(p);
    const auto r = eigen_check(lusztig_function(1, f), f);
    EXPECT_TRUE(r.is_eigenfunction) << p;
    ASSERT_TRUE(r.eigenvalue.has_value());
    EXPECT_TRUE(approx_equal(*r.eigenvalue, p % 4 == 3 ? Complex(0, -1) : Complex(1, 0))) << p;
    EXPECT_TRUE(r.matches_prediction);
    EXPECT_LT(r.max_residual, 1e-9);
  }
}

TEST(Eigen, NonInvariantBumpIsNotAnEigenfunction) {
  const FieldSpec f(5);
  const SpAlgebra alg({1}, f);
  const auto r = eigen_check(delta_function(alg, alg.index_of(Matrix::from_rows({{0, 1}, {0, 0}}, 5))), f);
  EXPECT_FALSE(r.is_eigenfunction);
  EXPECT_FALSE(r.eigenvalue.has_value());
  EXPECT_THROW((void)eigen_check(ClassFunction{alg, {}}, f), Error);
}

TEST(Eigen, Predictions) {
  EXPECT_TRUE(approx_equal(predicted_eigenvalue(1, FieldSpec(3)), Complex(0, -1)));
  EXPECT_TRUE(approx_equal(predicted_eigenvalue(2, FieldSpec(3)), Complex(-1, 0)));
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(approx_equal(predicted_eigenvalue(n, FieldSpec(13)), Complex(1, 0)));
}

TEST(Eigen, ProductOfTwoSp2Functions) {
  for (std::uint32_t p : {3u, 5u}) {
    const FieldSpec f(p);
    const auto fn = product_lusztig_function(1, 1, f);
    EXPECT_EQ(fn.algebra.cardinality(), std::uint64_t{p} * p * p * p * p * p);
    for (const auto& [idx, _] : fn.values)
      for (const auto& m : fn.algebra.point(idx)) EXPECT_TRUE(is_nilpotent(m));
    const auto r = eigen_check(fn, f);
    EXPECT_TRUE(r.is_eigenfunction);
    ASSERT_TRUE(r.eigenvalue.has_value());
    EXPECT_TRUE(approx_equal(*r.eigenvalue, tau(f) * tau(f)));
    EXPECT_TRUE(r.matches_prediction);
  }
}
