#include "hecke_lab/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hecke_lab/errors.hpp"

namespace hecke_lab {

bool is_positive_root(const IntVec& root) {
  bool nonzero = false;
  for (auto c : root) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool is_positive(const AffineRoot& a) {
  if (a.level != 0) return a.level > 0;
  return !is_positive_root(a.root);
}

FiniteRootSystem::FiniteRootSystem(char type, int rank) : type_(type), rank_(rank) {
  const bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) || (type == 'C' && rank >= 2) ||
                  (type == 'D' && rank >= 3) || (type == 'E' && rank >= 6 && rank <= 8) ||
                  (type == 'F' && rank == 4) || (type == 'G' && rank == 2);
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D' && type != 'E' && type != 'F' && type != 'G')
    fail(ErrorCode::InvalidType, std::string("unknown type '") + type + "'");
  if (!ok) fail(ErrorCode::InvalidRank, "rank " + std::to_string(rank) + " not admissible for type " + type);
  build_cartan();
  build_roots();
  build_affine();
}

void FiniteRootSystem::build_cartan() {
  const auto l = static_cast<std::size_t>(rank_);
  cartan_ = IntMatrix(l, IntVec(l, 0));
  auto link = [&](std::size_t i, std::size_t j) { cartan_[i][j] = cartan_[j][i] = -1; };
  for (std::size_t i = 0; i < l; ++i) cartan_[i][i] = 2;
  switch (type_) {
    case 'A':
    case 'B':
    case 'C':
      for (std::size_t i = 0; i + 1 < l; ++i) link(i, i + 1);
      if (type_ == 'B') cartan_[l - 1][l - 2] = -2;  // alpha_l short
      if (type_ == 'C') cartan_[l - 2][l - 1] = -2;  // alpha_l long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      link(2, 3);
      for (std::size_t i = 3; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      cartan_[2][1] = -2;  // <alpha_2, alpha_3^vee>, alpha_3 short
      cartan_[1][2] = -1;
      break;
    case 'G':
      cartan_[0][1] = -3;  // alpha_1 short
      cartan_[1][0] = -1;
      break;
  }
  // Symmetrizer: norms_[j] * cartan[j][i] == norms_[i] * cartan[i][j].
  norms_.assign(l, 0);
  norms_[0] = 6;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        if (norms_[i] != 0 && norms_[j] == 0 && cartan_[i][j] != 0) {
          norms_[j] = norms_[i] * cartan_[i][j] / cartan_[j][i];
          changed = true;
        }
  }
  const std::int64_t g = std::accumulate(norms_.begin(), norms_.end(), std::int64_t{0},
                                         [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); });
  for (auto& n : norms_) n /= g;
}

std::int64_t FiniteRootSystem::norm2(const IntVec& root) const {
  std::int64_t acc = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) acc += root[i] * root[j] * cartan_[i][j] * norms_[i];
  return acc;
}

IntVec FiniteRootSystem::coroot(const IntVec& root) const {
  const std::int64_t n = norm2(root);
  IntVec out(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < rank_; ++j) acc += root[j] * cartan_[i][j] * norms_[i];
    out[i] = 2 * acc / n;
  }
  return out;
}

std::int64_t FiniteRootSystem::pairing(const IntVec& root, const IntVec& coweight) const {
  std::int64_t acc = 0;
  for (int i = 0; i < rank_; ++i) acc += root[i] * coweight[i];
  return acc;
}

bool FiniteRootSystem::is_long(const IntVec& root) const {
  std::int64_t best = 0;
  for (int i = 0; i < rank_; ++i) {
    IntVec e(static_cast<std::size_t>(rank_), 0);
    e[i] = 1;
    best = std::max(best, norm2(e));
  }
  return norm2(root) == best;
}

IntMatrix FiniteRootSystem::reflection_matrix(const IntVec& root) const {
  // beta -> beta - <beta, root^vee> root
  const IntVec cr = coroot(root);
  IntMatrix m = identity_matrix(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] -= root[i] * cr[j];
  return m;
}

IntVec FiniteRootSystem::reflect_coweight(int i, const IntVec& lambda) const {
  IntVec out = lambda;
  const std::int64_t c = lambda[i];
  if (c == 0) return out;
  for (int k = 0; k < rank_; ++k) out[k] -= c * cartan_[i][k];
  return out;
}

void FiniteRootSystem::build_roots() {
  const auto l = static_cast<std::size_t>(rank_);
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < l; ++i) {
    IntVec e(l, 0);
    e[i] = 1;
    positive_.push_back(e);
    seen.insert(e);
  }
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const IntVec a = positive_[k];
    for (std::size_t i = 0; i < l; ++i) {
      std::int64_t p = 0;
      for (std::size_t j = 0; j < l; ++j) p += a[j] * cartan_[i][j];
      IntVec b = a;
      b[i] -= p;
      if (is_positive_root(b) && !seen.count(b)) {
        seen.insert(b);
        positive_.push_back(b);
      }
    }
  }
  auto height = [](const IntVec& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
  std::stable_sort(positive_.begin(), positive_.end(), [&](const IntVec& a, const IntVec& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  highest_ = positive_.back();
  highest_coroot_ = coroot(highest_);
}

void FiniteRootSystem::build_affine() {
  const auto l = static_cast<std::size_t>(rank_);
  affine_simple_.push_back({highest_, 1});
  for (std::size_t i = 0; i < l; ++i) {
    IntVec r(l, 0);
    r[i] = -1;
    affine_simple_.push_back({r, 0});
  }
  const std::size_t n = l + 1;
  coxeter_.assign(n, std::vector<int>(n, 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& ra = affine_simple_[a].root;
      const auto& rb = affine_simple_[b].root;
      const std::int64_t p = pairing(ra, coroot(rb)) * pairing(rb, coroot(ra));
      int m = 0;
      switch (p) {
        case 0: m = 2; break;
        case 1: m = 3; break;
        case 2: m = 4; break;
        case 3: m = 6; break;
        default: m = 0; break;  // infinite bond (affine A1)
      }
      coxeter_[a][b] = m;
    }
}

std::int64_t FiniteRootSystem::node_norm(int node) const {
  return norm2(affine_simple_[static_cast<std::size_t>(node)].root);
}

}  // namespace hecke_lab
