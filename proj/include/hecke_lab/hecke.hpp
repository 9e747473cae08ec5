#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "hecke_lab/laurent.hpp"
#include "hecke_lab/root_datum.hpp"
#include "hecke_lab/weyl_element.hpp"

namespace hecke_lab {

using Rational = boost::multiprecision::cpp_rational;

/// Finite combination sum c_w T_w with coefficients in Z[v, 1/v].
struct HeckeElt {
  std::uint64_t datum = 0;
  std::map<ExtWeylElt, Laurent> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  Laurent coeff(const ExtWeylElt& w) const;
  void add_term(const ExtWeylElt& w, const Laurent& c);
  /// True when every coefficient is a polynomial in v.
  bool is_integral() const;
  /// True when every coefficient lies in Z[v^2, v^-2].
  bool is_in_q() const;

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const Laurent& c, const HeckeElt& x);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.datum == b.datum && a.terms == b.terms; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }
};

/// The extended affine Hecke algebra of a decorated root datum, with
/// q_s = v^(2 d(s)). Built on the datum's effective lattice.
///
/// Products are computed by right multiplication with generators along
/// reduced words: T_w T_s = T_ws if ws > w, else q_s T_ws + (q_s - 1) T_w;
/// T_w T_u = T_wu for length-zero u.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(DatumPtr datum);

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }

  HeckeElt zero() const;
  HeckeElt one() const;
  HeckeElt basis(const ExtWeylElt& w, const Laurent& coeff = 1) const;
  HeckeElt generator(int node) const;
  /// T_u for the i-th element of the decorated Omega group.
  HeckeElt omega(int index) const;

  Laurent q(int node) const { return Laurent::q_power(datum_->d(node)); }
  Laurent q_of(const ExtWeylElt& w) const;

  HeckeElt mul(const HeckeElt& x, const HeckeElt& y) const;
  HeckeElt mul_node(const HeckeElt& x, int node) const;
  HeckeElt mul_length_zero(const HeckeElt& x, const ExtWeylElt& u) const;

  /// T*_w = T_u T*_{s_1} ... T*_{s_n}, T*_s = T_s - (q_s - 1).
  HeckeElt star_basis(const ExtWeylElt& w) const;
  HeckeElt star(const HeckeElt& x) const;
  /// T_w -> (-1)^l(w) T*_w, an algebra automorphism of order two.
  HeckeElt sign_star(const HeckeElt& x) const;

  /// E_lambda for any lambda of the effective lattice.
  HeckeElt bernstein(const IntVec& lambda) const;
  /// v^(w(t_lambda) - w(t_lambda1) - w(t_lambda2)) T*_{t_lambda1} T_{t_-lambda2}
  /// for dominant lambda1, lambda2 with lambda = lambda1 - lambda2.
  HeckeElt bernstein_split(const IntVec& lambda1, const IntVec& lambda2) const;
  /// Same element, assembled from the alcove walk of t_lambda.
  HeckeElt bernstein_walk(const IntVec& lambda) const;

  /// Sum of E_lambda over a full W_0-orbit.
  HeckeElt central_z(const std::vector<IntVec>& orbit) const;

 private:
  void check(const HeckeElt& x) const;
  ExtWeylElt checked_translation(const IntVec& lambda) const;

  DatumPtr datum_;
};

std::map<ExtWeylElt, std::int64_t> specialize_mod_p(const HeckeElt& x, std::int64_t p);
std::map<ExtWeylElt, double> specialize_real(const HeckeElt& x, double v);
std::map<ExtWeylElt, Rational> specialize_rational(const HeckeElt& x, const Rational& v);

Rational evaluate(const Laurent& c, const Rational& v);
/// Value at v = 0 reduced into [0, p).
std::int64_t reduce_at_zero(const Laurent& c, std::int64_t p);

}  // namespace hecke_lab
