#include "hecke_lab/hecke.hpp"

#include <algorithm>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/ext_weyl.hpp"

namespace hecke_lab {

// ------------------------------------------------------------------ HeckeElt

Laurent HeckeElt::coeff(const ExtWeylElt& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Laurent{} : it->second;
}

void HeckeElt::add_term(const ExtWeylElt& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

bool HeckeElt::is_integral() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_polynomial(); });
}

bool HeckeElt::is_in_q() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_in_q(); });
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  if (datum != other.datum) fail(ErrorCode::DatumMismatch, "adding elements of different Hecke algebras");
  for (const auto& [w, c] : other.terms) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  if (datum != other.datum) fail(ErrorCode::DatumMismatch, "subtracting elements of different Hecke algebras");
  for (const auto& [w, c] : other.terms) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const Laurent& c, const HeckeElt& x) {
  HeckeElt out;
  out.datum = x.datum;
  if (c.is_zero()) return out;
  for (const auto& [w, a] : x.terms) out.terms.emplace(w, c * a);
  return out;
}

// -------------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(DatumPtr datum) : datum_(std::move(datum)) {
  if (!datum_) fail(ErrorCode::InvalidInput, "null root datum");
}

void HeckeAlgebra::check(const HeckeElt& x) const {
  if (x.datum != datum_->id()) fail(ErrorCode::DatumMismatch, "element belongs to another Hecke algebra");
}

ExtWeylElt HeckeAlgebra::checked_translation(const IntVec& lambda) const {
  if (!datum_->in_effective_lattice(lambda))
    fail(ErrorCode::NotInLattice, "translation outside the lattice of the Hecke algebra");
  return datum_->weyl().translation(lambda);
}

HeckeElt HeckeAlgebra::zero() const {
  HeckeElt x;
  x.datum = datum_->id();
  return x;
}

HeckeElt HeckeAlgebra::one() const { return basis(datum_->weyl().identity()); }

HeckeElt HeckeAlgebra::basis(const ExtWeylElt& w, const Laurent& coeff) const {
  if (w.datum != datum_->id()) fail(ErrorCode::DatumMismatch, "Weyl element belongs to another datum");
  if (!datum_->in_effective_lattice(w.translation))
    fail(ErrorCode::NotInLattice, "element outside the extended Weyl group of the Hecke algebra");
  HeckeElt x = zero();
  x.add_term(w, coeff);
  return x;
}

HeckeElt HeckeAlgebra::generator(int node) const { return basis(datum_->weyl().generator(node)); }

HeckeElt HeckeAlgebra::omega(int index) const {
  return basis(datum_->decorated_omega()[static_cast<std::size_t>(index)].element);
}

Laurent HeckeAlgebra::q_of(const ExtWeylElt& w) const {
  return Laurent::monomial(1, static_cast<int>(2 * weighted_length(*datum_, w)));
}

HeckeElt HeckeAlgebra::mul_node(const HeckeElt& x, int node) const {
  const auto& weyl = datum_->weyl();
  const Laurent qs = q(node);
  const Laurent qs1 = qs - 1;
  HeckeElt out = zero();
  for (const auto& [w, c] : x.terms) {
    const ExtWeylElt ws = weyl.mul_generator(w, node);
    if (!weyl.is_right_descent(w, node)) {
      out.add_term(ws, c);
    } else {
      out.add_term(ws, qs * c);
      out.add_term(w, qs1 * c);
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_length_zero(const HeckeElt& x, const ExtWeylElt& u) const {
  HeckeElt out = zero();
  for (const auto& [w, c] : x.terms) out.terms.emplace(datum_->weyl().mul(w, u), c);
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& x, const HeckeElt& y) const {
  check(x);
  check(y);
  HeckeElt out = zero();
  for (const auto& [w, c] : y.terms) {
    const auto red = datum_->weyl().reduced_word(w);
    HeckeElt acc = mul_length_zero(x, red.omega);
    for (int s : red.word) acc = mul_node(acc, s);
    out += c * acc;
  }
  return out;
}

HeckeElt HeckeAlgebra::star_basis(const ExtWeylElt& w) const {
  const auto red = datum_->weyl().reduced_word(w);
  HeckeElt acc = basis(red.omega);
  for (int s : red.word) acc = mul_node(acc, s) - (q(s) - 1) * acc;
  return acc;
}

HeckeElt HeckeAlgebra::star(const HeckeElt& x) const {
  check(x);
  HeckeElt out = zero();
  for (const auto& [w, c] : x.terms) out += c * star_basis(w);
  return out;
}

HeckeElt HeckeAlgebra::sign_star(const HeckeElt& x) const {
  check(x);
  HeckeElt out = zero();
  for (const auto& [w, c] : x.terms) {
    const Laurent sign = datum_->weyl().length(w) % 2 == 0 ? 1 : -1;
    out += (sign * c) * star_basis(w);
  }
  return out;
}

HeckeElt HeckeAlgebra::bernstein_split(const IntVec& lambda1, const IntVec& lambda2) const {
  if (!is_dominant(lambda1) || !is_dominant(lambda2))
    fail(ErrorCode::InvalidInput, "Bernstein decomposition needs dominant parts");
  IntVec lambda = lambda1;
  IntVec neg2 = lambda2;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    lambda[i] -= lambda2[i];
    neg2[i] = -neg2[i];
  }
  const ExtWeylElt t = checked_translation(lambda);
  const ExtWeylElt t1 = checked_translation(lambda1);
  const ExtWeylElt t2 = checked_translation(lambda2);
  const std::int64_t e =
      weighted_length(*datum_, t) - weighted_length(*datum_, t1) - weighted_length(*datum_, t2);
  const HeckeElt prod = mul(star_basis(t1), basis(checked_translation(neg2)));
  return Laurent::monomial(1, static_cast<int>(e)) * prod;
}

HeckeElt HeckeAlgebra::bernstein(const IntVec& lambda) const {
  checked_translation(lambda);
  IntVec plus = lambda, minus = lambda;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    plus[i] = std::max<std::int64_t>(lambda[i], 0);
    minus[i] = std::max<std::int64_t>(-lambda[i], 0);
  }
  if (datum_->in_effective_lattice(plus)) return bernstein_split(plus, minus);
  // Fall back to lambda = (lambda + 2k rho^vee) - 2k rho^vee; 2 rho^vee is in Q^vee.
  std::int64_t k = 0;
  for (auto x : lambda) k = std::max<std::int64_t>(k, (-x + 1) / 2);
  IntVec shift(lambda.size(), 2 * k);
  for (std::size_t i = 0; i < lambda.size(); ++i) plus[i] = lambda[i] + shift[i];
  return bernstein_split(plus, shift);
}

HeckeElt HeckeAlgebra::bernstein_walk(const IntVec& lambda) const {
  checked_translation(lambda);
  const AlcoveWalk walk = hecke_lab::bernstein_walk(*datum_, lambda);
  HeckeElt acc = basis(walk.omega);
  for (std::size_t k = 0; k < walk.nodes.size(); ++k) {
    const int s = walk.nodes[k];
    HeckeElt next = mul_node(acc, s);
    if (walk.starred[k]) next -= (q(s) - 1) * acc;
    acc = std::move(next);
  }
  return acc;
}

HeckeElt HeckeAlgebra::central_z(const std::vector<IntVec>& orb) const {
  if (orb.empty()) fail(ErrorCode::NotAFullOrbit, "empty orbit");
  std::vector<IntVec> given = orb;
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (given != orbit(datum_->roots(), given.front()))
    fail(ErrorCode::NotAFullOrbit, "input is not a full W_0-orbit");
  HeckeElt out = zero();
  for (const auto& lambda : given) out += bernstein(lambda);
  return out;
}

// ------------------------------------------------------------ specialization

Rational evaluate(const Laurent& c, const Rational& v) {
  Rational acc = 0;
  for (const auto& [e, a] : c.terms()) {
    if (v == 0 && e < 0) fail(ErrorCode::NegativePowersPresent, "negative power of v at v = 0");
    Rational term = a;
    const Rational base = e >= 0 ? v : Rational(1) / v;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) term *= base;
    acc += term;
  }
  return acc;
}

std::int64_t reduce_at_zero(const Laurent& c, std::int64_t p) {
  const std::int64_t x = c.at_zero() % p;
  return x < 0 ? x + p : x;
}

std::map<ExtWeylElt, std::int64_t> specialize_mod_p(const HeckeElt& x, std::int64_t p) {
  if (p < 2) fail(ErrorCode::InvalidInput, "modulus must be at least 2");
  std::map<ExtWeylElt, std::int64_t> out;
  for (const auto& [w, c] : x.terms) {
    const std::int64_t r = reduce_at_zero(c, p);
    if (r != 0) out.emplace(w, r);
  }
  return out;
}

std::map<ExtWeylElt, double> specialize_real(const HeckeElt& x, double v) {
  std::map<ExtWeylElt, double> out;
  for (const auto& [w, c] : x.terms) out.emplace(w, c.evaluate(v));
  return out;
}

std::map<ExtWeylElt, Rational> specialize_rational(const HeckeElt& x, const Rational& v) {
  std::map<ExtWeylElt, Rational> out;
  for (const auto& [w, c] : x.terms) {
    Rational r = evaluate(c, v);
    if (r != 0) out.emplace(w, std::move(r));
  }
  return out;
}

}  // namespace hecke_lab
