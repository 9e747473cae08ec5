#include "hecke_lab/ext_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hecke_lab/errors.hpp"

namespace hecke_lab {

namespace {

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

ExtWeylElt translation(const RootDatum& datum, const IntVec& lambda) {
  if (static_cast<int>(lambda.size()) != datum.rank())
    fail(ErrorCode::InvalidInput, "coweight " + vec_str(lambda) + " has wrong dimension");
  if (!datum.in_lattice(lambda)) fail(ErrorCode::NotInLattice, vec_str(lambda) + " is not in the lattice");
  return datum.weyl().translation(lambda);
}

std::int64_t weighted_length(const RootDatum& datum, const ExtWeylElt& w) {
  std::int64_t total = 0;
  for (int s : datum.weyl().reduced_word(w).word) total += datum.d(s);
  return total;
}

bool is_dominant(const IntVec& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](std::int64_t x) { return x >= 0; });
}

std::vector<IntVec> orbit_capped(const FiniteRootSystem& roots, const IntVec& lambda, std::size_t cap) {
  std::set<IntVec> seen{lambda};
  std::vector<IntVec> queue{lambda};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int i = 0; i < roots.rank(); ++i) {
      if (queue[k][static_cast<std::size_t>(i)] == 0) continue;
      IntVec next = roots.reflect_coweight(i, queue[k]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) return {};
        queue.push_back(std::move(next));
      }
    }
  return {seen.begin(), seen.end()};
}

std::vector<IntVec> orbit(const FiniteRootSystem& roots, const IntVec& lambda) {
  return orbit_capped(roots, lambda, static_cast<std::size_t>(-1));
}

IntVec dominant_rep(const FiniteRootSystem& roots, const IntVec& lambda) {
  IntVec cur = lambda;
  while (true) {
    auto it = std::find_if(cur.begin(), cur.end(), [](std::int64_t x) { return x < 0; });
    if (it == cur.end()) return cur;
    cur = roots.reflect_coweight(static_cast<int>(it - cur.begin()), cur);
  }
}

IntVec dominant_rep(const FiniteRootSystem& roots, const std::vector<IntVec>& orb) {
  if (orb.empty()) fail(ErrorCode::InvalidInput, "empty orbit");
  const IntVec rep = dominant_rep(roots, orb.front());
  if (std::find(orb.begin(), orb.end(), rep) == orb.end())
    fail(ErrorCode::NotAFullOrbit, "dominant member missing from orbit");
  return rep;
}

std::vector<IntVec> hilbert_basis(const FiniteRootSystem& roots, const IntMatrix& lattice_hnf, std::size_t max_points) {
  const auto l = static_cast<std::size_t>(roots.rank());
  const IntVec inv = smith_invariants(lattice_hnf);
  // N = exponent of P^vee / Lambda; N * varpi_i is in Lambda, so every
  // irreducible point lies in the box [0, N]^l.
  const std::int64_t n = inv.empty() ? 1 : inv.back();
  double count = 1;
  for (std::size_t i = 0; i < l; ++i) count *= static_cast<double>(n + 1);
  if (count > static_cast<double>(max_points))
    fail(ErrorCode::HilbertBasisOverflow, "box [0," + std::to_string(n) + "]^" + std::to_string(l) +
                                              " exceeds " + std::to_string(max_points) + " points");
  std::vector<IntVec> points;
  IntVec x(l, 0);
  while (true) {
    std::size_t i = 0;
    while (i < l && x[i] == n) x[i++] = 0;
    if (i == l) break;
    ++x[i];
    if (lattice_contains(lattice_hnf, x)) points.push_back(x);
  }
  auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(points.begin(), points.end(), [&](const IntVec& a, const IntVec& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  std::vector<IntVec> basis;
  for (const auto& p : points) {
    bool reducible = false;
    for (const auto& h : basis) {
      bool below = true;
      IntVec diff(l);
      for (std::size_t j = 0; j < l && below; ++j) {
        diff[j] = p[j] - h[j];
        below = diff[j] >= 0;
      }
      if (below && lattice_contains(lattice_hnf, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

std::vector<IntVec> dominant_generators(const RootDatum& datum, std::size_t max_points) {
  if (datum.is_coweight_lattice()) {
    std::vector<IntVec> out;
    for (const auto& row : identity_matrix(static_cast<std::size_t>(datum.rank()))) out.push_back(row);
    return out;
  }
  return hilbert_basis(datum.roots(), datum.lattice_basis(), max_points);
}

std::vector<IntVec> effective_dominant_generators(const RootDatum& datum, std::size_t max_points) {
  if (datum.effective_lattice_basis() == datum.lattice_basis()) return dominant_generators(datum, max_points);
  return hilbert_basis(datum.roots(), datum.effective_lattice_basis(), max_points);
}

AlcoveWalk bernstein_walk(const RootDatum& datum, const IntVec& lambda) {
  const auto& weyl = datum.weyl();
  auto red = weyl.reduced_word(translation(datum, lambda));
  AlcoveWalk walk;
  walk.omega = red.omega;
  ExtWeylElt x = red.omega;
  const auto& affine = datum.roots().affine_simple_roots();
  for (int s : red.word) {
    const IntVec img = weyl.act_root(x, affine[static_cast<std::size_t>(s)].root);
    walk.nodes.push_back(s);
    walk.starred.push_back(!is_positive_root(img));
    x = weyl.mul_generator(x, s);
  }
  return walk;
}

}  // namespace hecke_lab
