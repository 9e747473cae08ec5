#include "hecke_lab/fin_module.hpp"

#include "hecke_lab/hecke.hpp"

namespace hecke_lab {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

ModPModule reduce_mod_p(const GenericModule& m, std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidInput, std::to_string(p) + " is not prime");
  const ModInt zero(0, p), one(1, p);
  auto f = [p](const Laurent& c) { return ModInt(reduce_at_zero(c, p), p); };
  ModPModule out{m.datum, m.dim, zero, one, {}, {}};
  for (const auto& x : m.s) out.s.push_back(x.map(f, zero));
  for (const auto& x : m.omega) out.omega.push_back(x.map(f, zero));
  return out;
}

GenericModule galois_conjugate(const GenericModule& m) {
  auto f = [](const Laurent& c) {
    Laurent r;
    for (const auto& [e, a] : c.terms()) r += Laurent::monomial(e % 2 == 0 ? a : -a, e);
    return r;
  };
  GenericModule out{m.datum, m.dim, m.zero, m.one, {}, {}};
  for (const auto& x : m.s) out.s.push_back(x.map(f, Laurent{}));
  for (const auto& x : m.omega) out.omega.push_back(x.map(f, Laurent{}));
  return out;
}

}  // namespace hecke_lab
