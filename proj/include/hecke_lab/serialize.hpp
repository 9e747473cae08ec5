#pragma once

#include <json.hpp>

#include "hecke_lab/characters.hpp"
#include "hecke_lab/classify.hpp"
#include "hecke_lab/fin_module.hpp"
#include "hecke_lab/hecke.hpp"
#include "hecke_lab/root_datum.hpp"
#include "hecke_lab/supersingular.hpp"

namespace hecke_lab {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);

/// {"translation": [...], "matrix": [[...]]}
Json to_json(const ExtWeylElt& w);
/// Inverse of to_json; rejects matrices outside W_0 and lattice violations.
ExtWeylElt ext_weyl_from_json(const RootDatum& datum, const Json& j);

/// {"-1": 2, "0": 1}: v-exponent to coefficient.
Json to_json(const Laurent& c);
Laurent laurent_from_json(const Json& j);

/// [{"w": ..., "coeff": ...}, ...] in basis order.
Json to_json(const HeckeElt& x);
HeckeElt hecke_from_json(const HeckeAlgebra& algebra, const Json& j);

Json to_json(const RootDatum& datum, const Character& chi);
Json to_json(const GenericModule& m);
Json to_json(const ModPModule& m);
Json to_json(const SupersingularReport& r);
Json to_json(const DiscretenessResult& r);

/// Datum summary: type, rank, classes, decoration, Omega groups, lattice.
Json datum_summary(const RootDatum& datum);

/// {"case", "dimension", "relations", "supersingular_mod_p", "discrete", ...}
Json certificate(const RootDatum& datum, const KeyResult& r);

}  // namespace hecke_lab
