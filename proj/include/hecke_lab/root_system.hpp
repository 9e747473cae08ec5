#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke_lab/int_matrix.hpp"

namespace hecke_lab {

/// Affine root x -> <root, x> + level on the apartment.
struct AffineRoot {
  IntVec root;  // simple-root coordinates
  std::int64_t level = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// Irreducible reduced finite root system with Bourbaki node numbering.
///
/// Coordinate frames:
///  - roots are written in the basis of simple roots alpha_1..alpha_l;
///  - coweights (and all translation vectors) in the basis of fundamental
///    coweights, so <alpha_i, lambda> is simply lambda[i] and the simple
///    coroot alpha_i^vee is row i of the Cartan matrix.
///
/// cartan[i][j] = <alpha_j, alpha_i^vee>.
///
/// The base alcove sits in the anti-dominant chamber:
///   C = { x : -1 < <alpha, x> < 0 for every positive root alpha }.
/// An affine root is positive when it is positive on C, i.e. level > 0, or
/// level == 0 and the finite root is negative. Node 0 is the affine node
/// (affine root (theta, 1), theta the highest root); node i >= 1 has affine
/// simple root (-alpha_i, 0).
class FiniteRootSystem {
 public:
  FiniteRootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const IntMatrix& cartan() const { return cartan_; }

  /// Positive roots, simple roots first, then by height.
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  const IntVec& highest_root() const { return highest_; }
  const IntVec& highest_coroot() const { return highest_coroot_; }
  /// Squared lengths of the simple roots, normalized so the gcd is 1.
  const IntVec& simple_root_norms() const { return norms_; }

  std::int64_t norm2(const IntVec& root) const;  // scaled by 2 relative to norms_
  IntVec coroot(const IntVec& root) const;        // in coweight coordinates
  std::int64_t pairing(const IntVec& root, const IntVec& coweight) const;
  bool is_long(const IntVec& root) const;

  /// Root-frame matrix of the reflection in `root`.
  IntMatrix reflection_matrix(const IntVec& root) const;
  IntVec reflect_coweight(int i, const IntVec& lambda) const;  // simple reflection s_i, 0-based

  const std::vector<AffineRoot>& affine_simple_roots() const { return affine_simple_; }
  /// Coxeter matrix of the completed Dynkin diagram; 0 encodes infinity.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  int num_nodes() const { return rank_ + 1; }

  /// Squared-norm order of every affine node (long nodes get the larger value).
  std::int64_t node_norm(int node) const;

 private:
  void build_cartan();
  void build_roots();
  void build_affine();

  char type_;
  int rank_;
  IntMatrix cartan_;
  IntVec norms_;
  std::vector<IntVec> positive_;
  IntVec highest_;
  IntVec highest_coroot_;
  std::vector<AffineRoot> affine_simple_;
  std::vector<std::vector<int>> coxeter_;
};

bool is_positive(const AffineRoot& a);
bool is_positive_root(const IntVec& root);  // finite root with nonnegative coordinates

}  // namespace hecke_lab
