#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hecke_lab/root_system.hpp"

namespace hecke_lab {

/// Element t_lambda * w of the extended affine Weyl group Lambda x| W_0.
///
/// Acts on the apartment by x -> lambda + w(x). The finite part is kept as an
/// integer matrix on simple-root coordinates (w(alpha) = matrix * alpha),
/// together with its inverse so that inversion and coweight actions stay
/// integral and cheap. `datum` tags the element with the root datum it
/// belongs to; equality ignores the cached inverse.
struct ExtWeylElt {
  std::uint64_t datum = 0;
  IntVec translation;
  IntVec matrix;   // rank x rank, row-major
  IntVec inverse;  // rank x rank, row-major

  int rank() const { return static_cast<int>(translation.size()); }
  bool is_translation() const;

  friend bool operator==(const ExtWeylElt& a, const ExtWeylElt& b) {
    return a.datum == b.datum && a.translation == b.translation && a.matrix == b.matrix;
  }
  friend bool operator!=(const ExtWeylElt& a, const ExtWeylElt& b) { return !(a == b); }
  friend bool operator<(const ExtWeylElt& a, const ExtWeylElt& b) {
    if (a.translation != b.translation) return a.translation < b.translation;
    return a.matrix < b.matrix;
  }
};

struct ExtWeylHash {
  std::size_t operator()(const ExtWeylElt& e) const noexcept;
};

/// Group law, geometric action and descent combinatorics for one root
/// system. Stateless apart from precomputed generators; safe to share.
class WeylArithmetic {
 public:
  WeylArithmetic(std::shared_ptr<const FiniteRootSystem> roots, std::uint64_t datum);

  const FiniteRootSystem& roots() const { return *roots_; }
  std::uint64_t datum() const { return datum_; }
  int rank() const { return roots_->rank(); }

  ExtWeylElt identity() const;
  ExtWeylElt translation(const IntVec& lambda) const;
  /// Simple affine reflection for node 0..rank (node 0 is affine).
  const ExtWeylElt& generator(int node) const { return generators_[static_cast<std::size_t>(node)]; }

  /// (lambda, w)(lambda', w') = (lambda + w lambda', w w').
  ExtWeylElt mul(const ExtWeylElt& a, const ExtWeylElt& b) const;
  ExtWeylElt inv(const ExtWeylElt& a) const;
  ExtWeylElt mul_generator(const ExtWeylElt& a, int node) const;

  IntVec act_root(const ExtWeylElt& w, const IntVec& root) const;          // finite part only
  IntVec act_coweight(const ExtWeylElt& w, const IntVec& lambda) const;    // finite part only
  AffineRoot act(const ExtWeylElt& w, const AffineRoot& a) const;

  /// ws < w, i.e. w sends the affine simple root of s to a negative root.
  bool is_right_descent(const ExtWeylElt& w, int node) const;
  bool is_left_descent(const ExtWeylElt& w, int node) const;

  /// Number of affine hyperplanes separating C and wC.
  std::int64_t length(const ExtWeylElt& w) const;

  struct Reduced {
    ExtWeylElt omega;        // length-zero part
    std::vector<int> word;   // nodes s_1..s_n with w = omega s_1 ... s_n
  };
  /// Strip right descents (lowest node first) until length zero.
  Reduced reduced_word(const ExtWeylElt& w) const;

  ExtWeylElt from_word(const ExtWeylElt& omega, const std::vector<int>& word) const;

 private:
  void check(const ExtWeylElt& a) const;

  std::shared_ptr<const FiniteRootSystem> roots_;
  std::uint64_t datum_;
  std::vector<ExtWeylElt> generators_;
};

}  // namespace hecke_lab
