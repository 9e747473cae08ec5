#include "hecke_lab/serialize.hpp"

#include <string>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"

namespace hecke_lab {

namespace {

std::string value_string(const Laurent& c) {
  if (c == Laurent(-1)) return "-1";
  const auto mono = c.as_monomial();
  if (mono && mono->first == 1 && mono->second % 2 == 0) {
    const int d = mono->second / 2;
    return d == 1 ? "q" : "q^" + std::to_string(d);
  }
  return c.to_string();
}

Json omega_json(const OmegaGroup& g) {
  Json perms = Json::array();
  for (const auto& u : g.elements()) perms.push_back(u.perm);
  return {{"order", g.size()}, {"structure", g.structure()}, {"permutations", perms}};
}

template <class T, class F>
Json matrix_json(const Matrix<T>& m, F entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class F>
Json module_json(const FinModule<T>& m, F entry) {
  Json s = Json::array(), om = Json::array();
  for (const auto& x : m.s) s.push_back(matrix_json(x, entry));
  for (const auto& x : m.omega) om.push_back(matrix_json(x, entry));
  const RelationCheck rc = check_relations(m);
  Json out{{"dim", m.dim}, {"s", s}, {"relations", rc.ok ? "pass" : "fail"}};
  if (m.has_omega()) out["omega"] = om;
  if (!rc.ok) out["relation_failure"] = rc.failure;
  return out;
}

}  // namespace

Json to_json(const IntVec& v) { return Json(v); }

Json to_json(const IntMatrix& m) { return Json(m); }

Json to_json(const ExtWeylElt& w) {
  const auto l = static_cast<std::size_t>(w.rank());
  IntMatrix rows(l, IntVec(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) rows[i][j] = w.matrix[i * l + j];
  return {{"translation", w.translation}, {"matrix", rows}};
}

ExtWeylElt ext_weyl_from_json(const RootDatum& datum, const Json& j) {
  IntVec lambda;
  IntMatrix mat;
  try {
    lambda = j.at("translation").get<IntVec>();
    mat = j.at("matrix").get<IntMatrix>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed Weyl element: ") + e.what());
  }
  const auto l = static_cast<std::size_t>(datum.rank());
  if (mat.size() != l) fail(ErrorCode::InvalidInput, "matrix has the wrong size");
  for (const auto& row : mat)
    if (row.size() != l) fail(ErrorCode::InvalidInput, "matrix has the wrong size");
  const auto& roots = datum.roots();
  // Peel simple reflections off the right until the identity remains.
  IntMatrix cur = mat;
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    for (; i < l; ++i) {
      IntVec col(l);
      for (std::size_t r = 0; r < l; ++r) col[r] = cur[r][i];
      if (!is_positive_root(col)) break;
    }
    if (i == l) break;
    if (word.size() > roots.positive_roots().size()) fail(ErrorCode::InvalidInput, "matrix is not in the Weyl group");
    IntVec alpha(l, 0);
    alpha[i] = 1;
    cur = multiply(cur, roots.reflection_matrix(alpha));
    word.push_back(static_cast<int>(i));
  }
  if (cur != identity_matrix(l)) fail(ErrorCode::InvalidInput, "matrix is not in the Weyl group");
  ExtWeylElt w = translation(datum, lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = datum.weyl().mul_generator(w, *it + 1);
  if (to_json(w) != Json{{"translation", lambda}, {"matrix", mat}})
    fail(ErrorCode::InvalidInput, "matrix is not in the Weyl group");
  return w;
}

Json to_json(const Laurent& c) {
  Json out = Json::object();
  for (const auto& [e, a] : c.terms()) out[std::to_string(e)] = a;
  return out;
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "coefficient must be an object of exponent: integer");
  std::map<int, std::int64_t> terms;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || !v.is_number_integer()) fail(ErrorCode::InvalidInput, "bad coefficient entry '" + k + "'");
    terms[e] += v.get<std::int64_t>();
  }
  return Laurent::from_map(terms);
}

Json to_json(const HeckeElt& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms) out.push_back({{"w", to_json(w)}, {"coeff", to_json(c)}});
  return out;
}

HeckeElt hecke_from_json(const HeckeAlgebra& algebra, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "Hecke element must be an array of terms");
  HeckeElt out = algebra.zero();
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("w") || !term.contains("coeff"))
      fail(ErrorCode::InvalidInput, "term needs \"w\" and \"coeff\"");
    out += algebra.basis(ext_weyl_from_json(algebra.datum(), term["w"]), laurent_from_json(term["coeff"]));
  }
  return out;
}

Json to_json(const RootDatum& datum, const Character& chi) {
  Json nodes = Json::array();
  for (int s = 0; s < datum.num_nodes(); ++s) {
    const bool q = chi.q_nodes[static_cast<std::size_t>(s)];
    if (chi.mode == CharMode::ModP)
      nodes.push_back(q ? "0" : "-1");
    else
      nodes.push_back(q ? value_string(Laurent::q_power(datum.d(s))) : "-1");
  }
  Json out{{"label", character_label(datum, chi)},
           {"mode", chi.mode == CharMode::Generic ? "generic" : "mod_p"},
           {"nodes", nodes},
           {"special", chi.is_special()},
           {"trivial", chi.is_trivial()}};
  if (!chi.omega_values.empty()) out["omega"] = chi.omega_values;
  return out;
}

Json to_json(const GenericModule& m) {
  return module_json(m, [](const Laurent& c) { return to_json(c); });
}

Json to_json(const ModPModule& m) {
  Json out = module_json(m, [](const ModInt& c) { return c.value; });
  out["p"] = m.one.modulus;
  return out;
}

Json to_json(const SupersingularReport& r) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"orbit", o.generator}, {"orbit_size", o.orbit_size}, {"nilpotency_degree", o.nilpotency_degree}});
  return {{"supersingular", r.supersingular}, {"sampled", r.sampled}, {"orbits", orbits}};
}

Json to_json(const DiscretenessResult& r) {
  return {{"discrete", r.discrete}, {"generators", r.generators}, {"exponents", r.exponents}};
}

Json datum_summary(const RootDatum& datum) {
  Json lattice{{"basis", datum.lattice_basis()},
               {"effective_basis", datum.effective_lattice_basis()},
               {"invariants", datum.lattice_invariants()}};
  switch (datum.lattice_kind()) {
    case LatticeKind::Coroot: lattice["kind"] = "coroot"; break;
    case LatticeKind::Coweight: lattice["kind"] = "coweight"; break;
    case LatticeKind::Explicit: lattice["kind"] = "explicit"; break;
  }
  return {{"label", datum.label()},
          {"type", std::string(1, datum.type())},
          {"rank", datum.rank()},
          {"cartan", datum.cartan()},
          {"m", datum.num_classes()},
          {"classes", datum.classes()},
          {"decoration", datum.class_decoration()},
          {"node_decoration", datum.decoration()},
          {"equal_parameters", datum.equal_parameters()},
          {"lattice", lattice},
          {"omega", omega_json(datum.omega())},
          {"decorated_omega", omega_json(datum.decorated_omega())},
          {"graph_automorphisms", datum.graph_automorphisms().size()}};
}

Json certificate(const RootDatum& datum, const KeyResult& r) {
  Json out{{"case", to_string(r.verdict)}, {"dimension", r.dimension}};
  if (r.verdict == Verdict::ExcludedTypeA) {
    out["relations"] = "not applicable";
    return out;
  }
  out["relations"] = r.relations_pass ? "pass" : "fail";
  Json ss = r.supersingular ? to_json(*r.supersingular) : Json::object();
  ss["p"] = r.p;
  out["supersingular_mod_p"] = ss;
  Json table = Json::object();
  for (const auto& row : r.table) {
    Json entry = to_json(row.result);
    entry["extends"] = row.extends;
    table[row.label] = entry;
  }
  Json discrete{{"method", r.discrete_method}, {"table", table}};
  if (r.discrete_method == "cited-lusztig") discrete["note"] = "cited, not recomputed";
  out["discrete"] = discrete;
  if (r.character) out["character"] = to_json(datum, *r.character);
  if (r.module) out["module"] = to_json(*r.module);
  if (!r.components.empty()) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      Json c = to_json(datum, r.components[i]);
      if (i < r.component_reports.size()) c["supersingular_mod_p"] = to_json(r.component_reports[i]);
      comps.push_back(std::move(c));
    }
    out["components"] = comps;
  }
  return out;
}

}  // namespace hecke_lab
