#include "hecke_lab/reflection_module.hpp"

#include "hecke_lab/errors.hpp"

namespace hecke_lab {

GenericModule reflection_module(const DatumPtr& datum) {
  const auto& cox = datum->roots().coxeter_matrix();
  const int n = datum->num_nodes();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && cox[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 2 &&
          cox[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 3)
        fail(ErrorCode::NotSimplyLaced, datum->label() + " has a bond with m_st not in {2, 3}");
  if (!datum->equal_parameters()) fail(ErrorCode::InvalidInput, "reflection module needs equal parameters");
  const int d = datum->d(0);
  const Laurent q = Laurent::q_power(d);
  const Laurent root_q = Laurent::monomial(1, d);

  const auto dim = static_cast<std::size_t>(n);
  GenericModule m{datum, dim, Laurent{}, Laurent{1}, {}, {}};
  // Row t of a right-action matrix is the image of e_t.
  for (int s = 0; s < n; ++s) {
    Matrix<Laurent> x(dim, dim, Laurent{});
    for (int t = 0; t < n; ++t) {
      const auto ut = static_cast<std::size_t>(t);
      if (t == s) {
        x(ut, ut) = -1;
        continue;
      }
      x(ut, ut) = q;
      if (cox[static_cast<std::size_t>(s)][ut] == 3) x(ut, static_cast<std::size_t>(s)) = root_q;
    }
    m.s.push_back(std::move(x));
  }
  const auto& om = datum->decorated_omega();
  for (std::size_t i = 0; i < om.size(); ++i) {
    const auto& inv_perm = om[static_cast<std::size_t>(om.inverse(static_cast<int>(i)))].perm;
    Matrix<Laurent> x(dim, dim, Laurent{});
    for (std::size_t t = 0; t < dim; ++t) x(t, static_cast<std::size_t>(inv_perm[t])) = 1;
    m.omega.push_back(std::move(x));
  }
  require_relations(m);
  return m;
}

GenericModule star_twist(const GenericModule& m) {
  GenericModule out = m;
  for (int s = 0; s < static_cast<int>(m.s.size()); ++s) {
    const Laurent c = param_q(m, s) - 1;
    out.s[static_cast<std::size_t>(s)] = Matrix<Laurent>::scalar(m.dim, Laurent{}, c) - m.s[static_cast<std::size_t>(s)];
  }
  require_relations(out);
  return out;
}

std::vector<Character> decompose_at_v0(const ModPModule& m) {
  std::vector<Character> out(m.dim);
  const ModInt minus_one = -m.one;
  for (auto& chi : out) chi.mode = CharMode::ModP;
  for (std::size_t s = 0; s < m.s.size(); ++s) {
    const auto& x = m.s[s];
    if (!x.is_diagonal()) fail(ErrorCode::NotSplitAtV0, "T_" + std::to_string(s) + " is not diagonal at v = 0");
    for (std::size_t k = 0; k < m.dim; ++k) {
      if (x(k, k) != m.zero && x(k, k) != minus_one)
        fail(ErrorCode::NotSplitAtV0, "diagonal entry is neither 0 nor -1");
      out[k].q_nodes.push_back(x(k, k) == m.zero);
    }
  }
  return out;
}

}  // namespace hecke_lab
