#pragma once

#include <cstddef>
#include <vector>

#include "hecke_lab/fin_module.hpp"

namespace hecke_lab {

struct OrbitCertificate {
  IntVec generator;
  std::size_t orbit_size = 0;
  int nilpotency_degree = -1;  // -1: z does not act nilpotently
};

struct SupersingularReport {
  bool supersingular = false;
  bool sampled = false;  // only part of the generator orbits were checked
  std::vector<OrbitCertificate> orbits;
};

struct SupersingularOptions {
  /// Check every generator orbit even for E_7 and E_8.
  bool exhaustive = false;
};

/// Matrix of E_lambda on a module over F_p (so q_s = 0 and T*_s = T_s + 1).
Matrix<ModInt> bernstein_action(const ModPModule& m, const IntVec& lambda);

/// z_O = sum of E_lambda over a W_0-orbit, acting on the module.
Matrix<ModInt> central_action(const ModPModule& m, const std::vector<IntVec>& orbit);

/// Every z over the orbit of a dominant monoid generator acts nilpotently.
/// Modules over Omega use the generators of the Hecke algebra's lattice;
/// modules over H alone use those of the coroot lattice. Without
/// `exhaustive`, E_7 and E_8 are checked on their smallest generator orbit.
SupersingularReport supersingularity(const ModPModule& m, const SupersingularOptions& options = {});
/// Same test for several modules over one datum, sharing the alcove walks.
std::vector<SupersingularReport> supersingularity(const std::vector<ModPModule>& modules,
                                                  const SupersingularOptions& options = {});
inline bool is_supersingular(const ModPModule& m, const SupersingularOptions& options = {}) {
  return supersingularity(m, options).supersingular;
}

}  // namespace hecke_lab
