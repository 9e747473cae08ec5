#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke_lab/characters.hpp"
#include "hecke_lab/fin_module.hpp"
#include "hecke_lab/supersingular.hpp"

namespace hecke_lab {

enum class Verdict { Character1Dim, Induced2Dim, ReflectionTwist, ExcludedTypeA };
std::string to_string(Verdict v);

struct CharacterDiscreteness {
  Character character;
  std::string label;
  DiscretenessResult result;
  bool extends = false;
};

struct KeyResult {
  Verdict verdict = Verdict::ExcludedTypeA;
  int dimension = 0;
  std::int64_t p = 0;
  std::optional<Character> character;  // the discrete character behind cases a and b
  std::optional<GenericModule> module;
  bool relations_pass = false;
  /// "exponent-table" (recomputed) or "cited-lusztig" (reflection module).
  std::string discrete_method;
  std::vector<CharacterDiscreteness> table;
  std::optional<SupersingularReport> supersingular;
  /// Reflection case: characters of the v = 0 reduction and their reports.
  std::vector<Character> components;
  std::vector<SupersingularReport> component_reports;
};

struct SearchOptions {
  std::int64_t p = 3;
  bool exhaustive = false;
};

/// Case split for the existence of a discrete simple module with
/// supersingular reduction (Lambda = P^vee):
///  type A with equal parameters          -> ExcludedTypeA
///  a discrete non-special character extends -> Character1Dim
///  discrete non-special ones exist, none extends -> Induced2Dim
///  only the special one, type D or E       -> ReflectionTwist
/// Anything else raises UnhandledCase.
KeyResult key_result_search(const DatumPtr& datum, const SearchOptions& options = {});

/// Discreteness and extension data for every generic character.
std::vector<CharacterDiscreteness> discreteness_table(const DatumPtr& datum);

}  // namespace hecke_lab
