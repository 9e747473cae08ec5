#pragma once

#include <vector>

#include "hecke_lab/characters.hpp"
#include "hecke_lab/fin_module.hpp"

namespace hecke_lab {

/// Module on the basis (e_s) of S for a simply-laced datum with equal
/// parameters. Left action, converted to right matrices by w -> w^{-1}:
///   T_s e_s = -e_s,  T_s e_t = q e_t (m_st = 2),  q e_t + q^{1/2} e_s (m_st = 3),
///   T_u e_t = e_{u(t)}.
GenericModule reflection_module(const DatumPtr& datum);

/// Image under T_w -> (-1)^l(w) T*_w: M_s -> -M_s + (q_s - 1), Omega unchanged.
GenericModule star_twist(const GenericModule& m);

/// Requires every T_s matrix diagonal with entries 0 or -1; returns the
/// characters of H on each basis line (Omega is ignored).
std::vector<Character> decompose_at_v0(const ModPModule& m);

}  // namespace hecke_lab
