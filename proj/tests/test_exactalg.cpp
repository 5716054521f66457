#include <doctest.h>

#include <random>

#include "invsub/exactalg.hpp"
#include "oracles.hpp"

using namespace invsub;

namespace {

RationalMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return RationalMatrix::from_rows(r);
}

RationalMatrix companion(const RationalPolynomial& monic) {
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  RationalMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coefficient(i);
  return c;
}

// I, A, ..., A^{d-1} are linearly independent iff their Gram matrix is
// nonsingular.
bool powers_independent(const RationalMatrix& a, std::size_t d) {
  std::vector<RationalMatrix> powers{RationalMatrix::identity(a.size())};
  while (powers.size() < d) powers.push_back(powers.back() * a);
  RationalMatrix gram(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < powers[i].entries().size(); ++k) {
        gram(i, j) += powers[i].entries()[k] * powers[j].entries()[k];
      }
    }
  }
  return determinant(gram) != 0;
}

// x - a
RationalPolynomial lin(int a) { return RationalPolynomial{-a, 1}; }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const RationalPolynomial p{1, 2, 3};
  const RationalPolynomial q{-1, 1};
  CHECK((p * q) == RationalPolynomial{-1, -1, -1, 3});
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == RationalPolynomial{2, 6});
  CHECK(p.evaluate(Rational(1, 2)) == Rational(11, 4));
  const auto [quot, rem] = divmod(p, q);
  CHECK(quot * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK_THROWS_AS(divmod(p, RationalPolynomial{}), std::domain_error);
  CHECK(gcd(lin(1) * lin(2), lin(2) * lin(3)) == lin(2));
  CHECK(gcd(RationalPolynomial{2, 2}, RationalPolynomial{3}) == RationalPolynomial{1});
  CHECK(to_string(RationalPolynomial{5, -2, 0, 1}) == "x^3 - 2*x + 5");
  CHECK(to_string(RationalPolynomial{Rational(-1, 2), 0, -1}) == "-x^2 - 1/2");
}

TEST_CASE("matrix inverse and determinant") {
  const auto a = mat({{2, 1}, {7, 4}});
  CHECK(determinant(a) == 1);
  CHECK(a * inverse(a) == RationalMatrix::identity(2));
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), std::domain_error);
  CHECK_THROWS_AS(RationalMatrix::from_rows({{1, 2}}), std::invalid_argument);
}

TEST_CASE("char_poly goldens") {
  CHECK(char_poly(mat({{0, -1}, {1, 0}})) == RationalPolynomial{1, 0, 1});
  CHECK(char_poly(mat({{2}})) == RationalPolynomial{-2, 1});
  const RationalPolynomial f{5, -2, 0, 1};
  CHECK(char_poly(companion(f)) == f);
}

TEST_CASE("char_poly of random companion matrices") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(testing::random_rational(rng, 5, true));
    c.push_back(1);
    const RationalPolynomial f(c);
    const auto cp = char_poly(companion(f));
    CHECK(cp == f);
    CHECK(cp.is_monic());
  }
}

TEST_CASE("char_poly agrees with cofactor expansion") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = testing::random_matrix(rng, n, 5, trial % 2 == 0);
    const auto cp = char_poly(a);
    CHECK(cp.degree() == static_cast<int>(n));
    CHECK(cp.is_monic());
    CHECK(cp == testing::cofactor_char_poly(a));
  }
}

TEST_CASE("min_poly goldens") {
  CHECK(min_poly(RationalMatrix::identity(2)) == lin(1));
  CHECK(min_poly(mat({{0, 1}, {0, 0}})) == RationalPolynomial{0, 0, 1});
  const auto d12 = mat({{1, 0}, {0, 2}});
  CHECK(min_poly(d12) == RationalPolynomial{2, -3, 1});
  CHECK(evaluate(RationalPolynomial{2, -3, 1}, d12).is_zero());
  // No degree-1 annihilator: diag(1,2) is not scalar.
  CHECK_FALSE((d12 - RationalMatrix::identity(2) * d12(0, 0)).is_zero());
  CHECK(min_poly(RationalMatrix(3)) == RationalPolynomial{0, 1});
}

TEST_CASE("min_poly divides char_poly and annihilates A") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = testing::random_test_matrix(rng, n);
    const auto m = min_poly(a);
    CHECK(m.is_monic());
    CHECK(divmod(char_poly(a), m).second.is_zero());
    CHECK(evaluate(m, a).is_zero());
    CHECK(powers_independent(a, static_cast<std::size_t>(m.degree())));
  }
}

TEST_CASE("squarefree decomposition goldens") {
  SUBCASE("(x-1)^2 (x+2)") {
    const auto p = RationalPolynomial{2, -3, 0, 1};
    CHECK(p == lin(1) * lin(1) * lin(-2));
    const auto d = squarefree_decompose(p);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0] == SquarefreeFactor{lin(-2), 1});
    CHECK(d.factors[1] == SquarefreeFactor{lin(1), 2});
    CHECK(d.reconstruct() == p);
  }
  SUBCASE("x^2 + 1") {
    const auto d = squarefree_decompose(RationalPolynomial{1, 0, 1});
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0] == SquarefreeFactor{RationalPolynomial{1, 0, 1}, 1});
  }
  SUBCASE("(x^2 + 1)^2") {
    const auto d = squarefree_decompose(RationalPolynomial{1, 0, 2, 0, 1});
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0] == SquarefreeFactor{RationalPolynomial{1, 0, 1}, 2});
  }
  SUBCASE("non-monic input keeps the unit") {
    const auto p = RationalPolynomial{-3} * lin(2) * lin(2) * lin(2);
    const auto d = squarefree_decompose(p);
    CHECK(d.unit == -3);
    CHECK(d.reconstruct() == p);
  }
  SUBCASE("constants rejected") {
    CHECK_THROWS_AS(squarefree_decompose(RationalPolynomial{}), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_decompose(RationalPolynomial{4}), std::invalid_argument);
  }
}

TEST_CASE("squarefree decomposition reconstructs random products") {
  std::mt19937_64 rng(24);
  const std::vector<RationalPolynomial> pool{lin(0), lin(1), lin(-2), RationalPolynomial{1, 0, 1},
                                             RationalPolynomial{-2, 0, 1}, RationalPolynomial{5, 2, 1}};
  for (int trial = 0; trial < 80; ++trial) {
    RationalPolynomial p = RationalPolynomial::constant(testing::random_rational(rng, 4, true));
    if (p.is_zero()) p = RationalPolynomial{1};
    for (int k = 0; k < 4; ++k) p *= pow(pool[rng() % pool.size()], static_cast<unsigned>(rng() % 3));
    if (p.is_constant()) continue;
    const auto d = squarefree_decompose(p);
    CHECK(d.reconstruct() == p);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      const auto& g = d.factors[i].factor;
      CHECK_FALSE(g.is_constant());
      CHECK(gcd(g, g.derivative()).is_constant());
      if (i > 0) CHECK(d.factors[i - 1].multiplicity < d.factors[i].multiplicity);
      for (std::size_t j = 0; j < i; ++j) CHECK(gcd(g, d.factors[j].factor).is_constant());
    }
  }
}

TEST_CASE("Sturm real-root counts") {
  CHECK(count_real_roots(RationalPolynomial{1, 0, 1}) == 0);
  CHECK(count_real_roots(RationalPolynomial{-2, 0, 1}) == 2);
  CHECK(count_real_roots(RationalPolynomial{0, -1, 0, 1}) == 3);
  CHECK(count_real_roots(lin(7)) == 1);
  CHECK(count_real_roots(RationalPolynomial{5, -2, 0, 1}) == 1);
  // (x^2+1)(x-1)(x-2)(x+3), negative leading coefficient
  CHECK(count_real_roots(RationalPolynomial{-1} * RationalPolynomial{1, 0, 1} * lin(1) * lin(2) *
                         lin(-3)) == 3);
  CHECK_THROWS_AS(count_real_roots(lin(1) * lin(1)), std::invalid_argument);
  CHECK_THROWS_AS(count_real_roots(RationalPolynomial{3}), std::invalid_argument);
}

TEST_CASE("Sturm counts match constructed root sets") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 80; ++trial) {
    std::set<int> roots;
    for (int i = static_cast<int>(rng() % 5); i > 0; --i) roots.insert(static_cast<int>(rng() % 13) - 6);
    std::set<std::pair<int, int>> pairs;  // x^2 - 2a x + a^2 + b^2
    for (int i = static_cast<int>(rng() % 3); i > 0; --i) {
      pairs.insert({static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 3)});
    }
    RationalPolynomial p{1};
    for (int r : roots) p *= lin(r);
    for (auto [a, b] : pairs) p *= RationalPolynomial{a * a + b * b, -2 * a, 1};
    if (p.is_constant()) continue;
    const unsigned real = count_real_roots(p);
    CHECK(real == roots.size());
    CHECK((static_cast<unsigned>(p.degree()) - real) % 2 == 0);
  }
}

TEST_CASE("similarity preserves char_poly and min_poly") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = testing::random_test_matrix(rng, n);
    const auto b = testing::conjugate(a, testing::random_invertible(rng, n));
    CHECK(char_poly(b) == char_poly(a));
    CHECK(min_poly(b) == min_poly(a));
  }
}
