#include <gtest/gtest.h>

#include <random>

#include "gerbe/lattice.hpp"
#include "gerbe/modular.hpp"
#include "gerbe/smith.hpp"

namespace gerbe {
namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ModOneAndFloor) {
  EXPECT_EQ(Rational(-1, 4).mod_one(), Rational(3, 4));
  EXPECT_EQ(Rational(7, 2).mod_one(), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), Integer(-4));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, GcdHelpers) {
  EXPECT_EQ(mod(Integer(-3), Integer(5)), Integer(2));
  EXPECT_EQ(lcm(Integer(4), Integer(6)), Integer(12));
  const auto g = extended_gcd(Integer(12), Integer(42));
  EXPECT_EQ(g.g, Integer(6));
  EXPECT_EQ(g.s * 12 + g.t * 42, g.g);
}

TEST(Linalg, SolveRational) {
  const auto a = RationalMatrix::from_columns({rv({1, 1}), rv({1, -1})});
  const auto x = solve_rational(a, rv({3, 1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, rv({2, 1}));
  const auto sing = RationalMatrix::from_columns({rv({1, 2}), rv({2, 4})});
  EXPECT_FALSE(solve_rational(sing, rv({1, 0})));
  EXPECT_EQ(rational_rank(sing), 1u);
}

TEST(Linalg, DimensionMismatchThrows) {
  EXPECT_THROW(rv({1, 2}) + rv({1}), DimensionError);
}

TEST(Linalg, Determinant) {
  EXPECT_EQ(determinant(IntegerMatrix{{2, 4}, {6, 8}}), Integer(-8));
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}), Integer(-5));
}

IntegerMatrix diag(std::size_t r, std::size_t c, std::initializer_list<long> d) {
  IntegerMatrix m(r, c);
  std::size_t i = 0;
  for (long x : d) m(i, i) = x, ++i;
  return m;
}

TEST(Smith, TwoByTwo) {
  const auto s = smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(s.diagonal, diag(2, 2, {2, 4}));
  EXPECT_EQ(s.rank, 2u);
}

TEST(Smith, IdentityAndZero) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix::identity(3)).diagonal, IntegerMatrix::identity(3));
  const IntegerMatrix z(2, 3);
  const auto s = smith_normal_form(z);
  EXPECT_EQ(s.diagonal, z);
  EXPECT_EQ(s.rank, 0u);
}

void expect_smith(const IntegerMatrix& a) {
  const auto s = smith_normal_form(a);
  const IntegerMatrix u = s.left();
  EXPECT_EQ(u * a * s.right, s.diagonal);
  EXPECT_EQ(abs(determinant(u)), 1);
  EXPECT_EQ(abs(determinant(s.right)), 1);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j) EXPECT_EQ(s.diagonal(i, j), 0);
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_GE(s.d(i), 0);
    if (i + 1 < n) {
      if (s.d(i) == 0) EXPECT_EQ(s.d(i + 1), 0);
      else EXPECT_EQ(mod(s.d(i + 1), s.d(i)), 0);
    }
  }
  // apply_left agrees with the materialized U.
  IntVector b(s.rows());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<long>(i * 3 + 1);
  EXPECT_EQ(s.apply_left(b), u.apply(b));
}

TEST(Smith, RandomProperty) {
  std::mt19937 gen(20240611);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int t = 0; t < 1000; ++t) {
    IntegerMatrix a(dim(gen), dim(gen));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(gen);
    SCOPED_TRACE(t);
    expect_smith(a);
  }
}

TEST(Modular, SpecExamples) {
  EXPECT_FALSE(solve_linear_mod(IntegerMatrix{{2}}, {1}, 4));

  auto s = solve_linear_mod(IntegerMatrix{{1}}, {3}, 5);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, IntVector{3});
  EXPECT_EQ(ModularSubgroup(1, 5, s->kernel).order(), 1);

  s = solve_linear_mod(IntegerMatrix{{2}}, {2}, 4);
  ASSERT_TRUE(s);
  EXPECT_EQ(ModularSubgroup(1, 4, s->kernel).reduce(s->particular), IntVector{1});
  const ModularSubgroup k(1, 4, s->kernel);
  EXPECT_EQ(k.order(), 2);
  EXPECT_TRUE(k.contains({2}));
}

// Exhaustive comparison on small systems.
TEST(Modular, MatchesEnumeration) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> entry(-4, 4), mdist(2, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + t % 3, c = 1 + (t / 3) % 3;
    const long m = mdist(gen);
    IntegerMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(gen);
    IntVector b(r);
    for (auto& x : b) x = entry(gen);

    std::size_t solutions = 0;
    std::size_t total = 1;
    for (std::size_t j = 0; j < c; ++j) total *= static_cast<std::size_t>(m);
    for (std::size_t code = 0; code < total; ++code) {
      IntVector x(c);
      std::size_t y = code;
      for (std::size_t j = 0; j < c; ++j, y /= m) x[j] = static_cast<long>(y % m);
      const IntVector ax = a.apply(x);
      bool ok = true;
      for (std::size_t i = 0; i < r; ++i) ok = ok && mod(ax[i] - b[i], m) == 0;
      solutions += ok;
    }

    SCOPED_TRACE(t);
    const auto s = solve_linear_mod(a, b, m);
    ASSERT_EQ(s.has_value(), solutions > 0);
    if (!s) continue;
    const IntVector ax = a.apply(s->particular);
    for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(mod(ax[i] - b[i], m), 0);
    EXPECT_EQ(ModularSubgroup(c, m, s->kernel).order(), Integer(static_cast<long>(solutions)));
  }
}

TEST(Modular, ReduceIsLexLeast) {
  const ModularSubgroup s(2, 6, {{2, 3}});
  // coset of (5, 5): {(5,5), (1,2), (3,5), (5,2), (1,5), (3,2)}
  EXPECT_EQ(s.reduce({5, 5}), (IntVector{1, 2}));
  EXPECT_EQ(s.order(), 6);
}

TEST(Lattice, Membership) {
  const Lattice l({rv({2, 0}), rv({0, 3})}, 2);
  EXPECT_TRUE(in_lattice(rv({2, 0}), l));
  EXPECT_FALSE(in_lattice(rv({1, 0}), l));
  EXPECT_TRUE(in_lattice(rv({-4, 9}), l));
  EXPECT_THROW(Lattice({rv({1, 2}), rv({2, 4})}, 2), std::invalid_argument);
}

TEST(Lattice, A2CorootExample) {
  const Lattice q({rv({1, -1, 0}), rv({0, 1, -1})}, 3);
  EXPECT_TRUE(in_lattice(rv({1, 0, -1}), q));
  const auto c = q.coordinates(rv({1, 0, -1}));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (IntVector{1, 1}));
  EXPECT_FALSE(in_lattice(rv({Rational(1, 2), Rational(-1, 2), 0}), q));
}

TEST(Lattice, MatchesEnumeration) {
  const Lattice l({rv({3, 1}), rv({1, 2})}, 2);  // index 5
  std::size_t hits = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      bool enumerated = false;
      for (int a = -10; a <= 10 && !enumerated; ++a)
        for (int b = -10; b <= 10; ++b)
          if (3 * a + b == x && a + 2 * b == y) enumerated = true;
      EXPECT_EQ(in_lattice(rv({x, y}), l), enumerated) << x << "," << y;
      hits += enumerated;
    }
  EXPECT_EQ(hits, 5u);
}

TEST(Lattice, GeneratedByAndIntersect) {
  const auto g = Lattice::generated_by({rv({2, 0}), rv({0, 2}), rv({1, 1})}, 2);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_TRUE(g.contains(rv({1, 1})));
  EXPECT_FALSE(g.contains(rv({1, 0})));
  const Lattice a({rv({2, 0}), rv({0, 1})}, 2), b({rv({1, 0}), rv({0, 3})}, 2);
  const Lattice c = a.intersect(b);
  EXPECT_TRUE(c.contains(rv({2, 3})));
  EXPECT_FALSE(c.contains(rv({2, 1})));
  EXPECT_FALSE(c.contains(rv({1, 3})));
}

}  // namespace
}  // namespace gerbe
