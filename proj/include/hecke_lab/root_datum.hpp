#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecke_lab/int_matrix.hpp"
#include "hecke_lab/root_system.hpp"
#include "hecke_lab/weyl_element.hpp"

namespace hecke_lab {

enum class LatticeKind { Coroot, Coweight, Explicit };

struct LatticeChoice {
  LatticeKind kind = LatticeKind::Coweight;
  IntMatrix basis;  // rows in fundamental-coweight coordinates, Explicit only

  static LatticeChoice coroot() { return {LatticeKind::Coroot, {}}; }
  static LatticeChoice coweight() { return {LatticeKind::Coweight, {}}; }
  static LatticeChoice explicit_basis(IntMatrix rows) { return {LatticeKind::Explicit, std::move(rows)}; }
};

/// A length-zero element of the extended affine Weyl group.
struct OmegaElement {
  ExtWeylElt element;
  IntVec coweight;        // some lambda with t_lambda in element * W
  std::vector<int> perm;  // element(a_s) = a_{perm[s]}
};

/// Finite abelian group of length-zero elements with its action on S.
class OmegaGroup {
 public:
  OmegaGroup() = default;
  /// elements[0] must be the identity; table[i][j] is the index of i*j.
  OmegaGroup(std::vector<OmegaElement> elements, std::vector<std::vector<int>> table);

  std::size_t size() const { return elements_.size(); }
  const OmegaElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<OmegaElement>& elements() const { return elements_; }
  int product(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int inverse(int i) const;
  int order(int i) const;
  /// Index of the element, or -1.
  int find(const ExtWeylElt& w) const;

  /// Invariant factors, e.g. "Z/4Z", "Z/2Z x Z/2Z", "{1}".
  std::string structure() const;

 private:
  std::vector<OmegaElement> elements_;
  std::vector<std::vector<int>> table_;
};

/// Irreducible root datum with a translation lattice between Q^vee and P^vee
/// and a parameter decoration d on the affine nodes.
///
/// Besides the declared lattice, the datum carries an effective lattice: Q^vee
/// plus the cosets whose length-zero part preserves d. The Hecke algebra is
/// built on the effective lattice; it equals the declared one except when the
/// decoration breaks a diagram symmetry (A_1 with d_1 != d_2, C_l with
/// d_2 != d_3).
class RootDatum {
 public:
  /// `decoration` is per class (length m), per node (length l+1) or empty
  /// for all ones.
  RootDatum(char type, int rank, const std::vector<int>& decoration, const LatticeChoice& lattice = {});

  const FiniteRootSystem& roots() const { return *roots_; }
  const WeylArithmetic& weyl() const { return *weyl_; }
  char type() const { return roots_->type(); }
  int rank() const { return roots_->rank(); }
  std::string label() const { return roots_->label(); }
  int num_nodes() const { return roots_->num_nodes(); }
  const IntMatrix& cartan() const { return roots_->cartan(); }
  IntMatrix simple_roots() const;    // identity in root coordinates
  IntMatrix simple_coroots() const;  // rows of the Cartan matrix
  std::uint64_t id() const { return id_; }

  LatticeKind lattice_kind() const { return lattice_kind_; }
  const IntMatrix& lattice_basis() const { return lattice_; }
  const IntMatrix& effective_lattice_basis() const { return effective_; }
  bool is_coweight_lattice() const { return lattice_index_in_pcoweight_ == 1; }
  bool in_lattice(const IntVec& lambda) const { return lattice_contains(lattice_, lambda); }
  bool in_effective_lattice(const IntVec& lambda) const { return lattice_contains(effective_, lambda); }
  bool in_coroot_lattice(const IntVec& lambda) const { return lattice_contains(coroot_lattice_, lambda); }
  /// Smith invariants of Lambda / Q^vee.
  IntVec lattice_invariants() const;

  /// Conjugacy classes S_1, ..., S_m of affine simple reflections.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int node) const { return class_of_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& decoration() const { return decoration_; }  // per node
  int d(int node) const { return decoration_[static_cast<std::size_t>(node)]; }
  std::vector<int> class_decoration() const;
  bool equal_parameters() const;

  /// Length-zero elements coming from the declared lattice.
  const OmegaGroup& omega() const { return omega_; }
  /// Those preserving the decoration; these are the Omega of the Hecke algebra.
  const OmegaGroup& decorated_omega() const { return decorated_omega_; }
  /// Every permutation of S preserving the Coxeter matrix.
  const std::vector<std::vector<int>>& graph_automorphisms() const { return graph_auts_; }

 private:
  void build_lattice(const LatticeChoice& lattice);
  void build_classes(const std::vector<int>& decoration);
  void build_omega();

  std::shared_ptr<const FiniteRootSystem> roots_;
  std::unique_ptr<WeylArithmetic> weyl_;
  std::uint64_t id_ = 0;
  LatticeKind lattice_kind_ = LatticeKind::Coweight;
  IntMatrix lattice_;
  IntMatrix coroot_lattice_;
  IntMatrix effective_;
  std::int64_t lattice_index_in_pcoweight_ = 1;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> decoration_;
  OmegaGroup omega_;
  OmegaGroup decorated_omega_;
  std::vector<std::vector<int>> graph_auts_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

DatumPtr build_root_datum(char type, int rank, const std::vector<int>& decoration = {},
                          const LatticeChoice& lattice = {});

/// Classes of nodes joined by odd bonds, largest first; ties put short
/// classes before long ones and the class of s_0 last.
std::vector<std::vector<int>> conjugacy_classes(const FiniteRootSystem& roots);
inline const std::vector<std::vector<int>>& conjugacy_classes(const RootDatum& datum) { return datum.classes(); }

inline const OmegaGroup& aut_group(const RootDatum& datum) { return datum.omega(); }
inline const OmegaGroup& decorated_aut_group(const RootDatum& datum) { return datum.decorated_omega(); }

/// All permutations of 0..n-1 preserving a symmetric Coxeter matrix.
std::vector<std::vector<int>> coxeter_automorphisms(const std::vector<std::vector<int>>& coxeter);

}  // namespace hecke_lab
