#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/int_matrix.hpp"
#include "hecke_lab/laurent.hpp"
#include "support.hpp"

using namespace hecke_lab;
using Rat = boost::multiprecision::cpp_rational;

namespace {

Laurent random_laurent(std::mt19937_64& g) {
  std::map<int, std::int64_t> t;
  const int n = testing::uniform(g, 0, 5);
  for (int i = 0; i < n; ++i) t[testing::uniform(g, -6, 6)] += testing::uniform(g, -9, 9);
  return Laurent::from_map(t);
}

// Evaluate from the term map, independent of Laurent::evaluate.
Rat value(const Laurent& c, const Rat& v) {
  Rat acc = 0;
  for (const auto& [e, a] : c.terms()) {
    Rat p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= v;
    acc += e >= 0 ? Rat(a) * p : Rat(a) / p;
  }
  return acc;
}

std::int64_t gcd_all(const IntMatrix& m) {
  std::int64_t g = 0;
  for (const auto& r : m)
    for (auto x : r) g = std::gcd(g, x);
  return g;
}

}  // namespace

TEST_CASE("laurent ring operations agree with evaluation at several points") {
  auto g = testing::rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    const Laurent a = random_laurent(g), b = random_laurent(g);
    for (Rat v : {Rat(2), Rat(-3), Rat(1, 2)}) {
      CHECK(value(a + b, v) == value(a, v) + value(b, v));
      CHECK(value(a - b, v) == value(a, v) - value(b, v));
      CHECK(value(a * b, v) == value(a, v) * value(b, v));
    }
    CHECK((a - a).is_zero());
    CHECK(a * Laurent(1) == a);
    CHECK(a.shifted(3) == a * Laurent::monomial(1, 3));
  }
}

TEST_CASE("laurent basics") {
  const Laurent q = Laurent::q_power(1);
  CHECK(q == Laurent::monomial(1, 2));
  CHECK((q - 1).to_string() == "v^2 - 1");
  CHECK((q - 1).at_zero() == -1);
  CHECK(Laurent::monomial(3, -1).is_polynomial() == false);
  CHECK(Laurent::monomial(3, 4).is_in_q());
  CHECK_FALSE((q + Laurent::monomial(1, 1)).is_in_q());
  CHECK(Laurent().is_zero());
  CHECK(Laurent::monomial(0, 5).is_zero());
  CHECK(Laurent::monomial(-2, 3).as_monomial() == std::make_pair(std::int64_t{-2}, 3));
  CHECK_THROWS_AS((void)Laurent::monomial(1, -1).at_zero(), Error);
}

TEST_CASE("laurent overflow is reported, never wrapped") {
  const Laurent big = Laurent::monomial(std::int64_t{1} << 62, 0);
  try {
    (void)(big * big);
    FAIL("no overflow raised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArithmeticOverflow);
  }
}

TEST_CASE("hermite basis spans the same lattice") {
  auto g = testing::rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(g, 1, 4));
    IntMatrix rows(n, IntVec(n));
    for (auto& r : rows)
      for (auto& x : r) x = testing::uniform(g, -6, 6);
    if (determinant(rows) == 0) continue;
    const IntMatrix h = hermite_basis(rows);
    REQUIRE(h.size() == n);
    CHECK(std::abs(determinant(h)) == std::abs(determinant(rows)));
    for (const auto& r : rows) CHECK(lattice_contains(h, r));
    // Upper triangular with positive pivots.
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h[i][i] > 0);
      for (std::size_t j = 0; j < i; ++j) CHECK(h[i][j] == 0);
    }
    const IntVec inv = smith_invariants(rows);
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      prod *= inv[i];
      if (i) CHECK(inv[i] % inv[i - 1] == 0);
    }
    CHECK(prod == std::abs(determinant(rows)));
    CHECK(inv.front() == gcd_all(rows));
    const IntMatrix adj = adjugate(rows);
    CHECK(multiply(rows, adj) == [&] {
      IntMatrix d = identity_matrix(n);
      for (std::size_t i = 0; i < n; ++i) d[i][i] = determinant(rows);
      return d;
    }());
  }
}

TEST_CASE("lattice membership matches a direct solve in rank two") {
  const IntMatrix h = hermite_basis({{2, 1}, {0, 3}});
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      // x = u (2,1) + w (0,3): u = a/2, w = (b - u)/3.
      const bool in = a % 2 == 0 && ((b - a / 2) % 3 == 0);
      CHECK(lattice_contains(h, {a, b}) == in);
    }
}
