#include <doctest.h>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"
#include "hecke_lab/hecke.hpp"
#include "support.hpp"

using namespace hecke_lab;

namespace {

struct Case {
  char type;
  int rank;
  std::vector<int> decoration;
};

// Rank <= 3, equal and unequal parameters.
const std::vector<Case> kCases = {
    {'A', 1, {1, 1}}, {'A', 1, {1, 2}},    {'A', 2, {1}},       {'C', 2, {2, 1, 1}}, {'C', 2, {1, 2, 1}},
    {'G', 2, {1, 1}}, {'G', 2, {2, 1}},    {'B', 3, {2, 1}},    {'A', 3, {1}},       {'C', 3, {1, 2, 2}},
};

ExtWeylElt random_element(std::mt19937_64& g, const RootDatum& d, int max_len) {
  const auto& om = d.decorated_omega();
  const auto& u = om[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<int>(om.size()) - 1))].element;
  return d.weyl().from_word(u, testing::random_word(g, d.num_nodes(), max_len));
}

IntVec random_effective(std::mt19937_64& g, const RootDatum& d, int bound) {
  while (true) {
    IntVec v = testing::random_coweight(g, d.rank(), bound);
    if (d.in_effective_lattice(v)) return v;
  }
}

IntVec add(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVec dominant_part(const IntVec& v, int sign) {
  IntVec out = v;
  for (auto& x : out) x = std::max<std::int64_t>(sign * x, 0);
  return out;
}

}  // namespace

TEST_CASE("quadratic and braid relations hold in the algebra") {
  for (const auto& c : kCases) {
    auto d = build_root_datum(c.type, c.rank, c.decoration);
    HeckeAlgebra h(d);
    for (int s = 0; s < d->num_nodes(); ++s) {
      const HeckeElt ts = h.generator(s);
      CHECK(h.mul(ts, ts) == (h.q(s) - 1) * ts + h.q(s) * h.one());
      for (int t = s + 1; t < d->num_nodes(); ++t) {
        const int m = d->roots().coxeter_matrix()[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (m == 0) continue;
        HeckeElt a = h.one(), b = h.one();
        for (int k = 0; k < m; ++k) {
          a = h.mul(a, h.generator(k % 2 ? t : s));
          b = h.mul(b, h.generator(k % 2 ? s : t));
        }
        CHECK(a == b);
      }
    }
    for (std::size_t i = 0; i < d->decorated_omega().size(); ++i)
      for (int s = 0; s < d->num_nodes(); ++s) {
        const auto& u = d->decorated_omega()[i];
        CHECK(h.mul(h.omega(static_cast<int>(i)), h.generator(s)) ==
              h.mul(h.generator(u.perm[static_cast<std::size_t>(s)]), h.omega(static_cast<int>(i))));
      }
  }
}

TEST_CASE("kernel properties on random samples") {
  auto g = testing::rng(21);
  int samples = 0, in_q = 0, bernstein_checked = 0;
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    auto d = build_root_datum(c.type, c.rank, c.decoration);
    const auto& w = d->weyl();
    HeckeAlgebra h(d);
    const int rounds = c.rank == 3 ? 15 : 25;
    for (int trial = 0; trial < rounds; ++trial) {
      // T_w T_w' = T_ww' when lengths add.
      const ExtWeylElt a = random_element(g, *d, 6), b = random_element(g, *d, 6);
      const ExtWeylElt ab = w.mul(a, b);
      if (w.length(ab) == w.length(a) + w.length(b)) {
        CHECK(h.mul(h.basis(a), h.basis(b)) == h.basis(ab));
        ++samples;
      }
      // T_w T*_{w^-1} = q_w.
      CHECK(h.mul(h.basis(a), h.star_basis(w.inv(a))) == h.q_of(a) * h.one());
      ++samples;
      // Associativity and the sign-star automorphism.
      const HeckeElt x = h.basis(a) + Laurent::monomial(2, 1) * h.basis(b);
      const HeckeElt y = h.basis(random_element(g, *d, 4)) - h.one();
      const HeckeElt z = h.basis(random_element(g, *d, 3));
      CHECK(h.mul(h.mul(x, y), z) == h.mul(x, h.mul(y, z)));
      CHECK(h.sign_star(h.sign_star(x)) == x);
      CHECK(h.sign_star(h.mul(x, y)) == h.mul(h.sign_star(x), h.sign_star(y)));
      samples += 3;
      // Bernstein elements: split independence, walk formula, product rule, integrality.
      // E_lambda grows quickly with |lambda|; products use the smallest box.
      const IntVec lam = random_effective(g, *d, c.rank == 3 ? 1 : 2);
      const IntVec small = random_effective(g, *d, 1), mu = random_effective(g, *d, 1);
      const HeckeElt e = h.bernstein(lam);
      if (d->in_effective_lattice(dominant_part(lam, 1))) {
        const IntVec shift = random_effective(g, *d, 1);
        const IntVec extra = dominant_rep(d->roots(), shift);
        CHECK(h.bernstein_split(add(dominant_part(lam, 1), extra), add(dominant_part(lam, -1), extra)) == e);
        ++samples;
      }
      CHECK(h.bernstein_walk(lam) == e);
      const std::int64_t wl = weighted_length(*d, translation(*d, small));
      const std::int64_t wm = weighted_length(*d, translation(*d, mu));
      const std::int64_t wlm = weighted_length(*d, translation(*d, add(small, mu)));
      CHECK(h.mul(h.bernstein(small), h.bernstein(mu)) ==
            Laurent::monomial(1, static_cast<int>(wl + wm - wlm)) * h.bernstein(add(small, mu)));
      CHECK(e.is_integral());
      in_q += e.is_in_q();
      ++bernstein_checked;
      samples += 3;
      // Dominant and antidominant cases.
      const IntVec dom = dominant_rep(d->roots(), lam);
      IntVec anti = dom;
      for (auto& v : anti) v = -v;
      CHECK(h.bernstein(dom) == h.star_basis(translation(*d, dom)));
      CHECK(h.bernstein(anti) == h.basis(translation(*d, anti)));
      samples += 2;
    }
  }
  MESSAGE("kernel property samples: " << samples << ", E_lambda with coefficients in Z[v^2]: " << in_q << "/"
                                      << bernstein_checked);
  CHECK(samples >= 1000);
}

TEST_CASE("orbit sums over fundamental coweights are central") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    auto d = build_root_datum(c.type, c.rank, c.decoration);
    HeckeAlgebra h(d);
    for (int i = 0; i < d->rank(); ++i) {
      IntVec varpi(static_cast<std::size_t>(d->rank()), 0);
      for (int k = 1; !d->in_effective_lattice(varpi) || k == 1; ++k) varpi[static_cast<std::size_t>(i)] = k;
      const HeckeElt z = h.central_z(orbit(*d, varpi));
      CHECK(z.is_integral());
      for (int s = 0; s < d->num_nodes(); ++s) CHECK(h.mul(z, h.generator(s)) == h.mul(h.generator(s), z));
      for (std::size_t u = 0; u < d->decorated_omega().size(); ++u)
        CHECK(h.mul(z, h.omega(static_cast<int>(u))) == h.mul(h.omega(static_cast<int>(u)), z));
    }
  }
}

TEST_CASE("algebra errors and specialization") {
  auto a1 = build_root_datum('A', 1, {1, 2});
  HeckeAlgebra h(a1);
  // The decoration breaks the diagram symmetry, so t_{varpi} is not in the algebra.
  try {
    h.bernstein({1});
    FAIL("odd translation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInLattice);
  }
  CHECK_NOTHROW(h.bernstein({2}));
  HeckeAlgebra other(build_root_datum('A', 2));
  try {
    h.mul(h.one(), other.one());
    FAIL("mixed algebras accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DatumMismatch);
  }
  try {
    other.central_z({{1, 0}, {-1, 1}});
    FAIL("partial orbit accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFullOrbit);
  }
  // T*_s = T_s - (q_s - 1): at v = 0 it is T_s + 1.
  const HeckeElt star = h.star_basis(a1->weyl().generator(1));  // d(s_1) = 1
  const auto modp = specialize_mod_p(star, 5);
  CHECK(modp.at(a1->weyl().generator(1)) == 1);
  CHECK(modp.at(a1->weyl().identity()) == 1);
  const auto real = specialize_real(star, 2.0);
  CHECK(real.at(a1->weyl().identity()) == doctest::Approx(1.0 - 4.0));
  const auto rat = specialize_rational(star, Rational(1, 2));
  CHECK(rat.at(a1->weyl().identity()) == Rational(3, 4));
  CHECK_THROWS_AS(evaluate(Laurent::monomial(1, -2), 0), Error);
}
