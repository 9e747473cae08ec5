#include "hecke_lab/characters.hpp"

#include <algorithm>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"

namespace hecke_lab {

bool Character::is_special() const {
  return std::none_of(q_nodes.begin(), q_nodes.end(), [](bool b) { return b; });
}

bool Character::is_trivial() const {
  return std::all_of(q_nodes.begin(), q_nodes.end(), [](bool b) { return b; });
}

std::string character_label(const RootDatum& datum, const Character& chi) {
  std::string out = "(";
  if (chi.mode == CharMode::Generic) {
    for (int i = 0; i < datum.num_classes(); ++i) {
      const int s = datum.classes()[static_cast<std::size_t>(i)].front();
      if (i) out += ",";
      if (!chi.q_nodes[static_cast<std::size_t>(s)]) out += "-1";
      else out += datum.d(s) == 1 ? "q" : "q^" + std::to_string(datum.d(s));
    }
  } else {
    for (std::size_t s = 0; s < chi.q_nodes.size(); ++s) out += std::string(s ? "," : "") + (chi.q_nodes[s] ? "0" : "-1");
  }
  return out + ")";
}

Character character_from_classes(const RootDatum& datum, const std::vector<bool>& q_classes) {
  if (static_cast<int>(q_classes.size()) != datum.num_classes())
    fail(ErrorCode::InvalidInput, "one value per conjugacy class expected");
  Character chi;
  for (int s = 0; s < datum.num_nodes(); ++s) chi.q_nodes.push_back(q_classes[static_cast<std::size_t>(datum.class_of(s))]);
  return chi;
}

std::vector<Character> enumerate_characters(const DatumPtr& datum, CharMode mode) {
  const int k = mode == CharMode::Generic ? datum->num_classes() : datum->num_nodes();
  std::vector<Character> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<bool> bits(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) bits[static_cast<std::size_t>(i)] = (mask >> (k - 1 - i)) & 1U;
    Character chi;
    if (mode == CharMode::Generic) {
      chi = character_from_classes(*datum, bits);
      require_relations(character_module(datum, chi));
    } else {
      chi.mode = CharMode::ModP;
      chi.q_nodes = bits;
      require_relations(character_module_mod_p(datum, chi, 2));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

GenericModule character_module(const DatumPtr& datum, const Character& chi) {
  GenericModule m{datum, 1, Laurent{}, Laurent{1}, {}, {}};
  for (int s = 0; s < datum->num_nodes(); ++s)
    m.s.push_back(Matrix<Laurent>::scalar(1, Laurent{}, chi.q_nodes[static_cast<std::size_t>(s)] ? Laurent::q_power(datum->d(s)) : Laurent{-1}));
  for (int v : chi.omega_values) m.omega.push_back(Matrix<Laurent>::scalar(1, Laurent{}, Laurent{v}));
  return m;
}

ModPModule character_module_mod_p(const DatumPtr& datum, const Character& chi, std::int64_t p) {
  const ModInt zero(0, p), one(1, p);
  ModPModule m{datum, 1, zero, one, {}, {}};
  for (int s = 0; s < datum->num_nodes(); ++s)
    m.s.push_back(Matrix<ModInt>::scalar(1, zero, chi.q_nodes[static_cast<std::size_t>(s)] ? zero : ModInt(-1, p)));
  for (int v : chi.omega_values) m.omega.push_back(Matrix<ModInt>::scalar(1, zero, ModInt(v, p)));
  return m;
}

Character twist_character(const RootDatum& datum, const Character& chi, int omega_index) {
  const auto& perm = datum.decorated_omega()[static_cast<std::size_t>(omega_index)].perm;
  Character out = chi;
  out.omega_values.clear();
  for (std::size_t s = 0; s < perm.size(); ++s) out.q_nodes[s] = chi.q_nodes[static_cast<std::size_t>(perm[s])];
  return out;
}

bool character_extends(const RootDatum& datum, const Character& chi) {
  Character bare = chi;
  bare.omega_values.clear();
  for (int i = 0; i < static_cast<int>(datum.decorated_omega().size()); ++i)
    if (twist_character(datum, chi, i) != bare) return false;
  return true;
}

std::vector<Character> character_extensions(const RootDatum& datum, const Character& chi) {
  if (!character_extends(datum, chi)) return {};
  const auto& om = datum.decorated_omega();
  const int n = static_cast<int>(om.size());
  // Greedy generating set; a homomorphism to {+-1} is fixed by its values there.
  std::vector<int> gens;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  covered[0] = true;
  for (int g = 1; g < n; ++g) {
    if (covered[static_cast<std::size_t>(g)]) continue;
    gens.push_back(g);
    std::vector<int> reached;
    for (int x = 0; x < n; ++x)
      if (covered[static_cast<std::size_t>(x)]) reached.push_back(x);
    for (std::size_t k = 0; k < reached.size(); ++k)
      for (int h : gens) {
        const int y = om.product(reached[k], h);
        if (!covered[static_cast<std::size_t>(y)]) {
          covered[static_cast<std::size_t>(y)] = true;
          reached.push_back(y);
        }
      }
  }
  std::vector<Character> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::vector<int> val(static_cast<std::size_t>(n), 0);
    val[0] = 1;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k)
      for (std::size_t g = 0; g < gens.size() && ok; ++g) {
        const int y = om.product(queue[k], gens[g]);
        const int v = val[static_cast<std::size_t>(queue[k])] * (((mask >> g) & 1U) ? -1 : 1);
        if (val[static_cast<std::size_t>(y)] == 0) {
          val[static_cast<std::size_t>(y)] = v;
          queue.push_back(y);
        } else if (val[static_cast<std::size_t>(y)] != v) {
          ok = false;
        }
      }
    if (!ok) continue;
    Character ext = chi;
    ext.omega_values = val;
    out.push_back(std::move(ext));
  }
  return out;
}

Character trivial_extension(const RootDatum& datum, const Character& chi) {
  if (!character_extends(datum, chi)) fail(ErrorCode::InvalidInput, "character does not extend");
  Character ext = chi;
  ext.omega_values.assign(datum.decorated_omega().size(), 1);
  return ext;
}

GenericModule induce_character(const DatumPtr& datum, const Character& chi) {
  if (chi.mode != CharMode::Generic) fail(ErrorCode::InvalidInput, "induction is implemented over the generic ring");
  if (character_extends(*datum, chi)) fail(ErrorCode::CharacterExtends, character_label(*datum, chi) + " extends");
  const auto& om = datum->decorated_omega();
  Character bare = chi;
  bare.omega_values.clear();
  std::vector<bool> fixes(om.size());
  std::size_t fixer_size = 0;
  for (std::size_t i = 0; i < om.size(); ++i) {
    fixes[i] = twist_character(*datum, chi, static_cast<int>(i)) == bare;
    fixer_size += fixes[i] ? 1 : 0;
  }
  if (2 * fixer_size != om.size())
    fail(ErrorCode::NoIndexTwoStructure, "stabilizer of the character has index " +
                                             std::to_string(om.size() / std::max<std::size_t>(fixer_size, 1)));
  const int u0 = static_cast<int>(std::find(fixes.begin(), fixes.end(), false) - fixes.begin());
  const Character other = twist_character(*datum, chi, u0);

  GenericModule m{datum, 2, Laurent{}, Laurent{1}, {}, {}};
  auto value = [&](const Character& c, int s) {
    return c.q_nodes[static_cast<std::size_t>(s)] ? Laurent::q_power(datum->d(s)) : Laurent{-1};
  };
  for (int s = 0; s < datum->num_nodes(); ++s) {
    Matrix<Laurent> x(2, 2, Laurent{});
    x(0, 0) = value(bare, s);
    x(1, 1) = value(other, s);
    m.s.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < om.size(); ++i) {
    Matrix<Laurent> x(2, 2, Laurent{});
    if (fixes[i]) x(0, 0) = x(1, 1) = 1;
    else x(0, 1) = x(1, 0) = 1;
    m.omega.push_back(std::move(x));
  }
  require_relations(m);
  return m;
}

DiscretenessResult discreteness(const RootDatum& datum, const Character& chi) {
  if (chi.mode != CharMode::Generic) fail(ErrorCode::InvalidInput, "discreteness needs a generic character");
  DiscretenessResult out;
  out.generators = effective_dominant_generators(datum);
  out.discrete = true;
  for (const auto& lambda : out.generators) {
    IntVec neg = lambda;
    for (auto& x : neg) x = -x;
    std::int64_t k = 0;
    for (int s : datum.weyl().reduced_word(datum.weyl().translation(neg)).word)
      k += chi.q_nodes[static_cast<std::size_t>(s)] ? datum.d(s) : -datum.d(s);
    out.exponents.push_back(k);
    if (k >= 0) out.discrete = false;
  }
  return out;
}

}  // namespace hecke_lab
