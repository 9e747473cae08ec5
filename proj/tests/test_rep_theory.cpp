#include <doctest.h>

#include <set>

#include "hecke_lab/classify.hpp"
#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"
#include "hecke_lab/reflection_module.hpp"
#include "support.hpp"

using namespace hecke_lab;

namespace {

struct Case {
  char type;
  int rank;
  std::vector<int> decoration;
};

const std::vector<Case> kSupported = {
    {'A', 1, {1, 1}}, {'A', 1, {1, 2}}, {'A', 2, {}},        {'A', 3, {}},        {'A', 4, {}},        {'B', 3, {1, 1}},
    {'B', 3, {2, 1}}, {'C', 2, {1, 1, 1}}, {'C', 2, {2, 1, 1}}, {'C', 2, {1, 2, 2}}, {'C', 2, {2, 3, 3}}, {'C', 3, {1, 1, 1}},
    {'C', 3, {2, 1, 1}}, {'C', 4, {1, 2, 2}}, {'C', 5, {2, 3, 3}}, {'D', 4, {}},  {'D', 5, {}},        {'E', 6, {}},
    {'E', 7, {}},     {'E', 8, {}},     {'F', 4, {1, 1}},    {'F', 4, {2, 1}},    {'G', 2, {1, 1}},    {'G', 2, {1, 3}},
};

Character find(const std::vector<Character>& chars, bool (Character::*pred)() const) {
  for (const auto& c : chars)
    if ((c.*pred)()) return c;
  FAIL("character not found");
  return {};
}

bool value_q(const RootDatum& d, const Character& chi, int cls) {
  return chi.q_nodes[static_cast<std::size_t>(d.classes()[static_cast<std::size_t>(cls)].front())];
}

std::size_t homs_to_sign(const std::string& structure) {
  if (structure == "{1}") return 1;
  std::size_t out = 1;
  for (std::size_t pos = 0; (pos = structure.find("Z/", pos)) != std::string::npos; pos += 2) {
    const long n = std::stol(structure.substr(pos + 2));
    out *= n % 2 == 0 ? 2 : 1;
  }
  return out;
}

}  // namespace

TEST_CASE("character counts") {
  for (const auto& c : kSupported) {
    auto d = build_root_datum(c.type, c.rank, c.decoration);
    const auto gen = enumerate_characters(d, CharMode::Generic);
    const auto modp = enumerate_characters(d, CharMode::ModP);
    CHECK(gen.size() == std::size_t{1} << d->num_classes());
    CHECK(modp.size() == std::size_t{1} << d->num_nodes());
    CHECK(gen.front().is_special());
    for (const auto& chi : gen) CHECK(check_relations(character_module(d, chi)).ok);
    for (const auto& chi : modp) CHECK(check_relations(character_module_mod_p(d, chi, 5)).ok);
  }
  auto a1 = build_root_datum('A', 1, {1, 2});
  const auto chars = enumerate_characters(a1, CharMode::Generic);
  CHECK(character_label(*a1, chars.front()) == "(-1,-1)");
  CHECK(character_label(*a1, chars.back()) == "(q,q^2)");
  CHECK(chars.back().is_trivial());
}

TEST_CASE("extension obstructions are exactly the two exceptional families") {
  for (const auto& c : kSupported) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    auto d = build_root_datum(c.type, c.rank, c.decoration);
    const auto dec = d->class_decoration();
    for (const auto& chi : enumerate_characters(d, CharMode::Generic)) {
      bool obstructed = false;
      if (c.type == 'A' && c.rank == 1 && dec[0] == dec[1]) obstructed = value_q(*d, chi, 0) != value_q(*d, chi, 1);
      if (c.type == 'C' && dec[1] == dec[2]) obstructed = value_q(*d, chi, 1) != value_q(*d, chi, 2);
      CHECK(character_extends(*d, chi) == !obstructed);
      const auto exts = character_extensions(*d, chi);
      CHECK(exts.size() == (obstructed ? 0 : homs_to_sign(d->decorated_omega().structure())));
      for (const auto& e : exts) CHECK(check_relations(character_module(d, e)).ok);
    }
  }
}

TEST_CASE("induced modules") {
  auto a1 = build_root_datum('A', 1, {1, 1});
  const Character chi = character_from_classes(*a1, {false, true});
  CHECK_FALSE(character_extends(*a1, chi));
  const GenericModule m = induce_character(a1, chi);
  CHECK(m.dim == 2);
  CHECK(check_relations(m).ok);
  const Character bar = twist_character(*a1, chi, 1);
  for (int s = 0; s < 2; ++s) {
    const Laurent qs = Laurent::q_power(1);
    CHECK(m.s[s].is_diagonal());
    CHECK(m.s[s](0, 0) == (chi.q_nodes[s] ? qs : Laurent(-1)));
    CHECK(m.s[s](1, 1) == (bar.q_nodes[s] ? qs : Laurent(-1)));
  }
  // No common eigenline: T_s separates e_0, e_1 and T_u swaps them.
  CHECK(m.s[0](0, 0) != m.s[0](1, 1));
  CHECK(m.omega[1](0, 0).is_zero());
  CHECK(m.omega[1](0, 1) == Laurent(1));

  auto c2 = build_root_datum('C', 2, {1, 1, 1});
  const Character psi = character_from_classes(*c2, {false, false, true});
  const GenericModule n = induce_character(c2, psi);
  CHECK(character_label(*c2, psi) == "(-1,-1,q)");
  CHECK(character_label(*c2, twist_character(*c2, psi, 1)) == "(-1,q,-1)");
  CHECK(check_relations(n).ok);
  try {
    induce_character(c2, enumerate_characters(c2, CharMode::Generic).back());
    FAIL("induced an extending character");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharacterExtends);
  }
  // Supersingular reduction of the induced A_1 module.
  CHECK(is_supersingular(reduce_mod_p(m, 3)));
}

TEST_CASE("reflection module and its star twist") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}}) {
    CAPTURE(t);
    auto d = build_root_datum(t, l);
    const GenericModule r = reflection_module(d);
    CHECK(r.dim == static_cast<std::size_t>(l + 1));
    CHECK(check_relations(r).ok);
    const GenericModule tw = star_twist(r);
    CHECK(check_relations(tw).ok);
    CHECK(star_twist(tw).s == r.s);
    for (int s = 0; s <= l; ++s) CHECK(tw.s[s](s, s) == Laurent::q_power(1));
    const auto comps = decompose_at_v0(reduce_mod_p(tw, 3));
    CHECK(comps.size() == static_cast<std::size_t>(l + 1));
    std::set<std::vector<bool>> distinct;
    for (const auto& chi : comps) {
      distinct.insert(chi.q_nodes);
      CHECK(std::count(chi.q_nodes.begin(), chi.q_nodes.end(), true) == 1);
    }
    CHECK(distinct.size() == comps.size());
  }
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 1}, {'C', 2}, {'G', 2}}) {
    try {
      reflection_module(build_root_datum(t, l));
      FAIL("not simply laced, still built");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSimplyLaced);
    }
  }
  // Twisting the trivial character gives the special one.
  auto g2 = build_root_datum('G', 2);
  const auto chars = enumerate_characters(g2, CharMode::Generic);
  const GenericModule triv = character_module(g2, trivial_extension(*g2, find(chars, &Character::is_trivial)));
  const GenericModule spec = character_module(g2, trivial_extension(*g2, find(chars, &Character::is_special)));
  CHECK(star_twist(triv).s == spec.s);
}

TEST_CASE("reduction mod p") {
  auto c2 = build_root_datum('C', 2, {2, 1, 1});
  const auto chars = enumerate_characters(c2, CharMode::Generic);
  const ModPModule triv = reduce_mod_p(character_module(c2, find(chars, &Character::is_trivial)), 5);
  for (const auto& m : triv.s) CHECK(m.is_zero());
  GenericModule bad = character_module(c2, chars.front());
  bad.s[0](0, 0) = Laurent::monomial(1, -1);
  try {
    reduce_mod_p(bad, 5);
    FAIL("negative power reduced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativePowersPresent);
  }
  CHECK_THROWS_AS(reduce_mod_p(character_module(c2, chars.front()), 4), Error);  // 4 is not prime
  CHECK_THROWS_AS((void)(ModInt(1, 3) + ModInt(1, 5)), Error);
}

TEST_CASE("special and trivial characters") {
  for (const auto& c : kSupported) {
    CAPTURE(c.type);
    CAPTURE(c.rank);
    auto d = build_root_datum(c.type, c.rank, c.decoration);
    const auto chars = enumerate_characters(d, CharMode::Generic);
    const Character sp = find(chars, &Character::is_special), tr = find(chars, &Character::is_trivial);
    CHECK(is_discrete_character(*d, sp));
    CHECK_FALSE(is_discrete_character(*d, tr));
    if (d->rank() <= 5) {
      CHECK_FALSE(is_supersingular(character_module_mod_p(d, trivial_extension(*d, sp), 3)));
      CHECK_FALSE(is_supersingular(character_module_mod_p(d, trivial_extension(*d, tr), 3)));
    }
  }
  // A discrete non-special character exists for G_2.
  auto g2 = build_root_datum('G', 2);
  int found = 0;
  for (const auto& chi : enumerate_characters(g2, CharMode::Generic))
    found += !chi.is_special() && is_discrete_character(*g2, chi);
  CHECK(found >= 1);
}

TEST_CASE("supersingularity of direct sums") {
  auto g = testing::rng(31);
  for (auto [t, l, dec] : std::vector<std::tuple<char, int, std::vector<int>>>{{'C', 2, {1, 1, 1}}, {'G', 2, {1, 1}}, {'A', 2, {}}, {'B', 3, {1, 1}}}) {
    auto d = build_root_datum(t, l, dec);
    const auto chars = enumerate_characters(d, CharMode::ModP);
    for (int trial = 0; trial < 12; ++trial) {
      const auto& a = chars[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<int>(chars.size()) - 1))];
      const auto& b = chars[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<int>(chars.size()) - 1))];
      const ModPModule ma = character_module_mod_p(d, a, 3), mb = character_module_mod_p(d, b, 3);
      CHECK(is_supersingular(direct_sum(ma, mb)) == (is_supersingular(ma) && is_supersingular(mb)));
    }
  }
}

TEST_CASE("non-generator dominant orbits agree with the generator test") {
  auto g = testing::rng(32);
  for (auto [t, l, dec] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'C', 2, {1, 1, 1}}, {'C', 3, {2, 1, 1}}, {'G', 2, {1, 1}}, {'B', 3, {2, 1}}, {'A', 1, {1, 2}}}) {
    CAPTURE(t);
    CAPTURE(l);
    auto d = build_root_datum(t, l, dec);
    const KeyResult r = key_result_search(d);
    REQUIRE(r.module);
    const ModPModule m = reduce_mod_p(*r.module, 3);
    const auto chars = enumerate_characters(d, CharMode::Generic);
    const ModPModule special = character_module_mod_p(d, trivial_extension(*d, chars.front()), 3);
    CHECK(is_supersingular(m));
    const auto gens = effective_dominant_generators(*d);
    for (int trial = 0; trial < 4; ++trial) {
      IntVec mu(static_cast<std::size_t>(l), 0);
      for (int k = 0; k < 2; ++k) {
        const auto& h = gens[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<int>(gens.size()) - 1))];
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += h[i];
      }
      const auto orb = orbit(*d, mu);
      Matrix<ModInt> z = central_action(m, orb), p = z;
      for (std::size_t k = 1; k < m.dim; ++k) p = p * z;
      CHECK(p.is_zero());
      CHECK_FALSE(central_action(special, orb).is_zero());
    }
  }
}

TEST_CASE("key result examples") {
  CHECK(key_result_search(build_root_datum('C', 2, {1, 1, 1})).verdict == Verdict::Induced2Dim);
  CHECK(key_result_search(build_root_datum('B', 3, {2, 1})).verdict == Verdict::Character1Dim);
  CHECK(key_result_search(build_root_datum('A', 2)).verdict == Verdict::ExcludedTypeA);
  const KeyResult d4 = key_result_search(build_root_datum('D', 4));
  CHECK(d4.verdict == Verdict::ReflectionTwist);
  CHECK(d4.dimension == 5);
  CHECK(d4.discrete_method == "cited-lusztig");
  CHECK(d4.components.size() == 5);
  for (const auto& rep : d4.component_reports) CHECK(rep.supersingular);
  try {
    key_result_search(build_root_datum('C', 2, {}, LatticeChoice::coroot()));
    FAIL("coroot lattice accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
  try {
    key_result_search(build_root_datum('C', 2), {9, false});
    FAIL("composite p accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
  try {
    key_result_search(build_root_datum('G', 2, {1, 2}));
    FAIL("borderline parameters classified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnhandledCase);
  }
}
