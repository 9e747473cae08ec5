#pragma once

#include <cstdint>
#include <vector>

// Small exact integer linear algebra for lattice bookkeeping.

namespace hecke_lab {

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;  // row-major, rows are vectors

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVec multiply(const IntMatrix& a, const IntVec& x);

/// Exact determinant by fraction-free elimination.
std::int64_t determinant(const IntMatrix& m);
/// adj(m) with m * adj(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the given rows.
/// Zero rows are dropped, so the result is a basis.
IntMatrix hermite_basis(IntMatrix rows);

/// Membership of x in the row lattice of an HNF basis.
bool lattice_contains(const IntMatrix& hnf, const IntVec& x);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
IntVec smith_invariants(IntMatrix m);

}  // namespace hecke_lab
