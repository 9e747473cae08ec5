#include "hecke_lab/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/laurent.hpp"

namespace hecke_lab {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, IntVec(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] = checked_add(c[i][j], checked_mul(a[i][l], b[l][j]));
    }
  return c;
}

IntVec multiply(const IntMatrix& a, const IntVec& x) {
  IntVec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = checked_add(y[i], checked_mul(a[i][j], x[j]));
  return y;
}

std::int64_t determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (checked_mul(m[i][j], m[k][k]) - checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n, IntVec(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const std::int64_t cof = determinant(minor) * (((i + j) % 2 == 0) ? 1 : -1);
      adj[j][i] = cof;
    }
  return adj;
}

IntMatrix hermite_basis(IntMatrix rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    // Euclid on column c among rows pivot_row.. until one nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool reduced = false;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const std::int64_t f = rows[r][c] / rows[pivot_row][c];
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = checked_add(rows[r][j], checked_mul(-f, rows[pivot_row][j]));
        if (rows[r][c] != 0) reduced = true;
      }
      if (!reduced) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    for (std::size_t r = 0; r < pivot_row; ++r) {
      std::int64_t f = rows[r][c] / rows[pivot_row][c];
      if (rows[r][c] - f * rows[pivot_row][c] < 0) --f;
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = checked_add(rows[r][j], checked_mul(-f, rows[pivot_row][j]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

bool lattice_contains(const IntMatrix& hnf, const IntVec& x) {
  IntVec rest = x;
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    for (std::size_t j = 0; j < c; ++j)
      if (rest[j] != 0) return false;
    if (rest[c] % row[c] != 0) return false;
    const std::int64_t f = rest[c] / row[c];
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = checked_add(rest[j], checked_mul(-f, row[j]));
  }
  return std::all_of(rest.begin(), rest.end(), [](std::int64_t v) { return v == 0; });
}

IntVec smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  IntVec diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find the smallest nonzero entry in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const std::int64_t f = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const std::int64_t f = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility into the trailing block.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace hecke_lab
