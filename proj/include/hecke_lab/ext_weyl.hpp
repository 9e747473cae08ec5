#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hecke_lab/root_datum.hpp"
#include "hecke_lab/weyl_element.hpp"

namespace hecke_lab {

/// Translation t_lambda; lambda must lie in the declared lattice.
ExtWeylElt translation(const RootDatum& datum, const IntVec& lambda);

/// Exponent w_d with q_w = v^(2 w_d): sum of d(s) over a reduced word.
std::int64_t weighted_length(const RootDatum& datum, const ExtWeylElt& w);

/// <alpha_i, lambda> >= 0 for every simple root.
bool is_dominant(const IntVec& lambda);

/// W_0-orbit, sorted lexicographically.
std::vector<IntVec> orbit(const FiniteRootSystem& roots, const IntVec& lambda);
inline std::vector<IntVec> orbit(const RootDatum& datum, const IntVec& lambda) { return orbit(datum.roots(), lambda); }
/// Orbit enumeration that gives up (returns empty) past `cap` elements.
std::vector<IntVec> orbit_capped(const FiniteRootSystem& roots, const IntVec& lambda, std::size_t cap);

IntVec dominant_rep(const FiniteRootSystem& roots, const IntVec& lambda);
IntVec dominant_rep(const FiniteRootSystem& roots, const std::vector<IntVec>& orbit);

/// Hilbert basis of the monoid of dominant points of the lattice spanned by
/// `lattice_hnf` (which must contain Q^vee). `max_points` bounds the box
/// enumeration; HilbertBasisOverflow when exceeded.
std::vector<IntVec> hilbert_basis(const FiniteRootSystem& roots, const IntMatrix& lattice_hnf,
                                  std::size_t max_points = 4'000'000);

/// Monoid generators of the dominant part of the declared lattice.
std::vector<IntVec> dominant_generators(const RootDatum& datum, std::size_t max_points = 4'000'000);
/// Same for the lattice the Hecke algebra is built on.
std::vector<IntVec> effective_dominant_generators(const RootDatum& datum, std::size_t max_points = 4'000'000);

/// t_lambda = omega s_1 ... s_n read as an alcove walk: step k is starred
/// when the finite part of omega s_1 ... s_{k-1} sends the affine simple root
/// of s_k to a negative finite root. Then E_lambda = T_omega prod_k X_k with
/// X_k = T*_{s_k} for starred steps and T_{s_k} otherwise.
struct AlcoveWalk {
  ExtWeylElt omega;
  std::vector<int> nodes;
  std::vector<bool> starred;
};
AlcoveWalk bernstein_walk(const RootDatum& datum, const IntVec& lambda);

}  // namespace hecke_lab
