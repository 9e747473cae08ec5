#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke_lab/dense_matrix.hpp"
#include "hecke_lab/laurent.hpp"
#include "hecke_lab/mod_int.hpp"
#include "hecke_lab/root_datum.hpp"

namespace hecke_lab {

/// Finite-dimensional right module: row vectors, x . T_w = x * M(w), so
/// M(w w') = M(w) M(w').
///
/// `s[node]` is the matrix of T_s. `omega[i]` is the matrix of T_u for the
/// i-th element of the datum's decorated Omega group; an empty `omega` means
/// the module is only over the affine Hecke algebra H, not over its
/// extension by Omega.
template <class T>
struct FinModule {
  DatumPtr datum;
  std::size_t dim = 0;
  T zero{}, one{};
  std::vector<Matrix<T>> s;
  std::vector<Matrix<T>> omega;

  bool has_omega() const { return !omega.empty(); }
  Matrix<T> identity() const { return Matrix<T>::identity(dim, zero, one); }
};

using GenericModule = FinModule<Laurent>;  // coefficients in Z[v, 1/v]
using ModPModule = FinModule<ModInt>;      // coefficients in F_p, q_s = 0

inline Laurent param_q(const GenericModule& m, int node) { return Laurent::q_power(m.datum->d(node)); }
inline ModInt param_q(const ModPModule& m, int) { return m.zero; }

struct RelationCheck {
  bool ok = true;
  std::string failure;  // first violated relation
};

/// Quadratic relations, braid relations for every pair with finite m_st,
/// T_u T_s = T_{u(s)} T_u, and the group law on Omega.
template <class T>
RelationCheck check_relations(const FinModule<T>& m) {
  RelationCheck out;
  auto bad = [&](std::string why) {
    out.ok = false;
    out.failure = std::move(why);
    return out;
  };
  const auto& datum = *m.datum;
  const int n = datum.num_nodes();
  if (static_cast<int>(m.s.size()) != n) return bad("wrong number of generator matrices");
  const Matrix<T> id = m.identity();
  for (int a = 0; a < n; ++a) {
    const auto& ma = m.s[static_cast<std::size_t>(a)];
    if (ma.rows() != m.dim || ma.cols() != m.dim) return bad("matrix of T_" + std::to_string(a) + " has wrong shape");
    const T qa = param_q(m, a);
    if (!((ma - Matrix<T>::scalar(m.dim, m.zero, qa)) * (ma + id)).is_zero())
      return bad("quadratic relation for s_" + std::to_string(a));
  }
  const auto& cox = datum.roots().coxeter_matrix();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int mab = cox[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (mab == 0) continue;
      const auto& ma = m.s[static_cast<std::size_t>(a)];
      const auto& mb = m.s[static_cast<std::size_t>(b)];
      Matrix<T> left = id, right = id;
      for (int k = 0; k < mab; ++k) {
        left = left * (k % 2 == 0 ? ma : mb);
        right = right * (k % 2 == 0 ? mb : ma);
      }
      if (left != right) return bad("braid relation for s_" + std::to_string(a) + ", s_" + std::to_string(b));
    }
  if (!m.has_omega()) return out;
  const auto& om = datum.decorated_omega();
  if (m.omega.size() != om.size()) return bad("wrong number of Omega matrices");
  if (m.omega[0] != id) return bad("identity of Omega acts nontrivially");
  for (std::size_t i = 0; i < om.size(); ++i) {
    for (std::size_t j = 0; j < om.size(); ++j)
      if (m.omega[i] * m.omega[j] != m.omega[static_cast<std::size_t>(om.product(static_cast<int>(i), static_cast<int>(j)))])
        return bad("Omega group law");
    for (int a = 0; a < n; ++a) {
      const int image = om[i].perm[static_cast<std::size_t>(a)];
      if (m.omega[i] * m.s[static_cast<std::size_t>(a)] != m.s[static_cast<std::size_t>(image)] * m.omega[i])
        return bad("T_u T_s = T_u(s) T_u for s_" + std::to_string(a));
    }
  }
  return out;
}

/// Throws RelationsFail with the first violated relation.
template <class T>
void require_relations(const FinModule<T>& m) {
  const RelationCheck c = check_relations(m);
  if (!c.ok) fail(ErrorCode::RelationsFail, c.failure);
}

/// Entries evaluated at v = 0 and read in F_p.
ModPModule reduce_mod_p(const GenericModule& m, std::int64_t p);
/// v -> -v on every entry.
GenericModule galois_conjugate(const GenericModule& m);

template <class T>
FinModule<T> direct_sum(const FinModule<T>& a, const FinModule<T>& b) {
  if (a.datum->id() != b.datum->id()) fail(ErrorCode::DatumMismatch, "direct sum of modules over different data");
  if (a.has_omega() != b.has_omega()) fail(ErrorCode::InvalidInput, "direct sum of H- and extended modules");
  FinModule<T> out{a.datum, a.dim + b.dim, a.zero, a.one, {}, {}};
  auto block = [&](const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> r(out.dim, out.dim, a.zero);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) r(i, j) = x(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) r(a.dim + i, a.dim + j) = y(i, j);
    return r;
  };
  for (std::size_t k = 0; k < a.s.size(); ++k) out.s.push_back(block(a.s[k], b.s[k]));
  for (std::size_t k = 0; k < a.omega.size(); ++k) out.omega.push_back(block(a.omega[k], b.omega[k]));
  return out;
}

}  // namespace hecke_lab
