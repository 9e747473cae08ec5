#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke_lab/fin_module.hpp"
#include "hecke_lab/root_datum.hpp"

namespace hecke_lab {

enum class CharMode { Generic, ModP };

/// One-dimensional character. Over the generic ring each T_s acts by q_s or
/// -1 (constant on conjugacy classes); in characteristic p by 0 or -1.
struct Character {
  CharMode mode = CharMode::Generic;
  std::vector<bool> q_nodes;      // per node: q_s (0 mod p) when true, -1 when false
  std::vector<int> omega_values;  // +-1 per decorated Omega element; empty for a character of H

  bool is_special() const;  // every T_s acts by -1
  bool is_trivial() const;  // every T_s acts by q_s
  friend bool operator==(const Character&, const Character&) = default;
};

/// "(-1,q,q^2)" over classes for generic characters, "(0,-1,-1)" over nodes
/// in characteristic p.
std::string character_label(const RootDatum& datum, const Character& chi);

Character character_from_classes(const RootDatum& datum, const std::vector<bool>& q_classes);

/// All characters of H: 2^m generic ones, 2^|S| mod p. Ordered
/// lexicographically with -1 first; the special character comes first.
std::vector<Character> enumerate_characters(const DatumPtr& datum, CharMode mode);

GenericModule character_module(const DatumPtr& datum, const Character& chi);
ModPModule character_module_mod_p(const DatumPtr& datum, const Character& chi, std::int64_t p);

/// chi composed with the diagram automorphism of the i-th decorated Omega element.
Character twist_character(const RootDatum& datum, const Character& chi, int omega_index);

/// chi is constant on the orbits of the decorated Omega group on S.
bool character_extends(const RootDatum& datum, const Character& chi);
/// Every extension with Omega-values in {+1, -1}; empty when chi does not extend.
std::vector<Character> character_extensions(const RootDatum& datum, const Character& chi);
/// The extension with all Omega-values 1.
Character trivial_extension(const RootDatum& datum, const Character& chi);

/// Two-dimensional module induced from the trivial extension of chi to the
/// index-two subgroup of Omega fixing chi. Its restriction to H is
/// chi + chi', chi' the twist by the other coset.
GenericModule induce_character(const DatumPtr& datum, const Character& chi);

/// chi(theta_lambda) = +-v^k(lambda) for each dominant generator lambda;
/// discrete when every k(lambda) < 0.
struct DiscretenessResult {
  bool discrete = false;
  std::vector<IntVec> generators;
  std::vector<std::int64_t> exponents;
};
DiscretenessResult discreteness(const RootDatum& datum, const Character& chi);
inline bool is_discrete_character(const RootDatum& datum, const Character& chi) {
  return discreteness(datum, chi).discrete;
}

}  // namespace hecke_lab
