#include "hecke_lab/supersingular.hpp"

#include <algorithm>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"

namespace hecke_lab {

namespace {

Matrix<ModInt> walk_action(const ModPModule& m, const AlcoveWalk& walk, std::size_t rank) {
  const RootDatum& datum = *m.datum;
  Matrix<ModInt> acc = m.identity();
  if (!walk.omega.is_translation() || walk.omega.translation != IntVec(rank, 0)) {
    if (!m.has_omega()) fail(ErrorCode::InvalidInput, "E_lambda involves Omega but the module is over H only");
    const int idx = datum.decorated_omega().find(walk.omega);
    if (idx < 0) fail(ErrorCode::NotInLattice, "translation outside the lattice of the Hecke algebra");
    acc = m.omega[static_cast<std::size_t>(idx)];
  }
  const Matrix<ModInt> id = m.identity();
  for (std::size_t k = 0; k < walk.nodes.size(); ++k) {
    const auto& ms = m.s[static_cast<std::size_t>(walk.nodes[k])];
    acc = acc * (walk.starred[k] ? ms + id : ms);
  }
  return acc;
}

int nilpotency_degree(const Matrix<ModInt>& z, std::size_t dim) {
  Matrix<ModInt> power = z;
  for (std::size_t k = 1; k <= std::max<std::size_t>(dim, 1); ++k) {
    if (power.is_zero()) return static_cast<int>(k);
    power = power * z;
  }
  return -1;
}

}  // namespace

Matrix<ModInt> bernstein_action(const ModPModule& m, const IntVec& lambda) {
  return walk_action(m, bernstein_walk(*m.datum, lambda), lambda.size());
}

Matrix<ModInt> central_action(const ModPModule& m, const std::vector<IntVec>& orb) {
  Matrix<ModInt> z(m.dim, m.dim, m.zero);
  for (const auto& lambda : orb) z = z + bernstein_action(m, lambda);
  return z;
}

std::vector<SupersingularReport> supersingularity(const std::vector<ModPModule>& modules,
                                                  const SupersingularOptions& options) {
  if (modules.empty()) return {};
  const RootDatum& datum = *modules.front().datum;
  const bool over_omega = modules.front().has_omega();
  for (const auto& m : modules) {
    if (m.datum->id() != datum.id()) fail(ErrorCode::DatumMismatch, "modules over different data");
    if (m.has_omega() != over_omega) fail(ErrorCode::InvalidInput, "mixing H- and extended modules");
    require_relations(m);
  }
  std::vector<IntVec> gens = over_omega ? effective_dominant_generators(datum)
                                        : hilbert_basis(datum.roots(), hermite_basis(datum.cartan()));
  bool sampled = false;
  if (!options.exhaustive && datum.type() == 'E' && datum.rank() >= 7) {
    // Keep only the smallest orbit; larger ones are abandoned early.
    std::size_t best = 5000;
    IntVec pick;
    for (const auto& g : gens) {
      const auto orb = orbit_capped(datum.roots(), g, best);
      if (!orb.empty() && (pick.empty() || orb.size() < best)) {
        best = orb.size();
        pick = g;
      }
    }
    if (!pick.empty()) {
      sampled = gens.size() > 1;
      gens = {pick};
    }
  }
  std::vector<SupersingularReport> reports(modules.size());
  for (auto& r : reports) {
    r.supersingular = true;
    r.sampled = sampled;
  }
  const auto rank = static_cast<std::size_t>(datum.rank());
  for (const auto& g : gens) {
    const auto orb = orbit(datum.roots(), g);
    std::vector<Matrix<ModInt>> z;
    for (const auto& m : modules) z.emplace_back(m.dim, m.dim, m.zero);
    for (const auto& lambda : orb) {
      const AlcoveWalk walk = bernstein_walk(datum, lambda);
      for (std::size_t i = 0; i < modules.size(); ++i) z[i] = z[i] + walk_action(modules[i], walk, rank);
    }
    for (std::size_t i = 0; i < modules.size(); ++i) {
      OrbitCertificate cert;
      cert.generator = g;
      cert.orbit_size = orb.size();
      cert.nilpotency_degree = nilpotency_degree(z[i], modules[i].dim);
      if (cert.nilpotency_degree < 0) reports[i].supersingular = false;
      reports[i].orbits.push_back(std::move(cert));
    }
  }
  return reports;
}

SupersingularReport supersingularity(const ModPModule& m, const SupersingularOptions& options) {
  return supersingularity(std::vector<ModPModule>{m}, options).front();
}

}  // namespace hecke_lab
