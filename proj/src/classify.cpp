#include "hecke_lab/classify.hpp"

#include "hecke_lab/errors.hpp"
#include "hecke_lab/reflection_module.hpp"

namespace hecke_lab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Character1Dim: return "Character1Dim";
    case Verdict::Induced2Dim: return "Induced2Dim";
    case Verdict::ReflectionTwist: return "ReflectionTwist";
    case Verdict::ExcludedTypeA: return "ExcludedTypeA";
  }
  return "?";
}

std::vector<CharacterDiscreteness> discreteness_table(const DatumPtr& datum) {
  std::vector<CharacterDiscreteness> out;
  for (auto& chi : enumerate_characters(datum, CharMode::Generic)) {
    CharacterDiscreteness row;
    row.label = character_label(*datum, chi);
    row.result = discreteness(*datum, chi);
    row.extends = character_extends(*datum, chi);
    row.character = std::move(chi);
    out.push_back(std::move(row));
  }
  return out;
}

KeyResult key_result_search(const DatumPtr& datum, const SearchOptions& options) {
  if (!datum->is_coweight_lattice())
    fail(ErrorCode::InvalidInput, "the case analysis assumes the coweight lattice (adjoint datum)");
  if (!is_prime(options.p)) fail(ErrorCode::InvalidInput, std::to_string(options.p) + " is not prime");
  KeyResult res;
  res.p = options.p;
  if (datum->type() == 'A' && datum->equal_parameters()) {
    res.verdict = Verdict::ExcludedTypeA;
    return res;
  }
  res.table = discreteness_table(datum);
  const CharacterDiscreteness* extending = nullptr;
  const CharacterDiscreteness* other = nullptr;
  for (const auto& row : res.table) {
    if (row.character.is_special() || !row.result.discrete) continue;
    if (row.extends && !extending) extending = &row;
    if (!row.extends && !other) other = &row;
  }
  const SupersingularOptions ss{options.exhaustive};
  if (extending || other) {
    res.discrete_method = "exponent-table";
    if (extending) {
      res.verdict = Verdict::Character1Dim;
      res.character = extending->character;
      res.module = character_module(datum, trivial_extension(*datum, extending->character));
    } else {
      res.verdict = Verdict::Induced2Dim;
      res.character = other->character;
      res.module = induce_character(datum, other->character);
    }
  } else if (datum->type() == 'D' || datum->type() == 'E') {
    res.verdict = Verdict::ReflectionTwist;
    res.discrete_method = "cited-lusztig";
    res.module = star_twist(reflection_module(datum));
    const ModPModule reduced = reduce_mod_p(*res.module, options.p);
    res.components = decompose_at_v0(reduced);
    std::vector<ModPModule> parts;
    for (const auto& chi : res.components) parts.push_back(character_module_mod_p(datum, chi, options.p));
    res.component_reports = supersingularity(parts, ss);
  } else {
    fail(ErrorCode::UnhandledCase, datum->label() + " with these parameters falls outside the case analysis");
  }
  res.dimension = static_cast<int>(res.module->dim);
  res.relations_pass = check_relations(*res.module).ok;
  if (!res.relations_pass) fail(ErrorCode::RelationsFail, "constructed module violates the relations");
  res.supersingular = supersingularity(reduce_mod_p(*res.module, options.p), ss);
  return res;
}

}  // namespace hecke_lab
