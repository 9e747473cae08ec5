#include "hecke_lab/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hecke_lab/errors.hpp"
#include "hecke_lab/hash.hpp"

namespace hecke_lab {

// ---------------------------------------------------------------- OmegaGroup

OmegaGroup::OmegaGroup(std::vector<OmegaElement> elements, std::vector<std::vector<int>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {}

int OmegaGroup::inverse(int i) const {
  for (int j = 0; j < static_cast<int>(size()); ++j)
    if (product(i, j) == 0) return j;
  fail(ErrorCode::RelationsFail, "omega element without inverse");
}

int OmegaGroup::order(int i) const {
  int k = 1, cur = i;
  while (cur != 0) {
    cur = product(cur, i);
    ++k;
  }
  return k;
}

int OmegaGroup::find(const ExtWeylElt& w) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].element == w) return static_cast<int>(i);
  return -1;
}

std::string OmegaGroup::structure() const {
  const int n = static_cast<int>(size());
  if (n <= 1) return "{1}";
  std::vector<int> orders(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) orders[static_cast<std::size_t>(i)] = order(i);
  // p-primary parts: the number of cyclic factors of order >= p^k is
  // log_p of |{x : x^{p^k} = 1}| / |{x : x^{p^{k-1}} = 1}|.
  std::map<int, std::vector<int>> exponents;  // prime -> exponents, descending
  int rest = n;
  for (int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> count_at_least;
    long pk = 1, prev = 1;
    while (true) {
      pk *= p;
      long c = 0;
      for (int o : orders)
        if (pk % o == 0) ++c;
      if (c == prev) break;
      int factors = 0;
      for (long r = c / prev; r > 1; r /= p) ++factors;
      count_at_least.push_back(factors);
      prev = c;
    }
    // count_at_least[k-1] = #factors with exponent >= k
    std::vector<int> ex;
    for (int f = count_at_least.empty() ? 0 : count_at_least[0]; f > 0; --f) {
      int e = 0;
      for (int c : count_at_least)
        if (c >= f) ++e;
      ex.push_back(e);
    }
    std::sort(ex.rbegin(), ex.rend());
    exponents[p] = ex;
  }
  std::size_t nf = 0;
  for (const auto& [p, ex] : exponents) nf = std::max(nf, ex.size());
  std::vector<long> invariants(nf, 1);
  for (const auto& [p, ex] : exponents)
    for (std::size_t i = 0; i < ex.size(); ++i)
      for (int e = 0; e < ex[i]; ++e) invariants[i] *= p;
  std::sort(invariants.begin(), invariants.end());
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(invariants[i]) + "Z";
  }
  return out;
}

// ------------------------------------------------------------------- classes

std::vector<std::vector<int>> conjugacy_classes(const FiniteRootSystem& roots) {
  const auto& cox = roots.coxeter_matrix();
  const int n = roots.num_nodes();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int m = cox[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (m % 2 == 1) parent[static_cast<std::size_t>(find(a))] = find(b);
    }
  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < n; ++s) groups[find(s)].push_back(s);

  std::int64_t longest = 0;
  for (int s = 0; s < n; ++s) longest = std::max(longest, roots.node_norm(s));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  auto key = [&](const std::vector<int>& c) {
    const bool is_long = roots.node_norm(c.front()) == longest;
    const bool has_zero = c.front() == 0;
    return std::make_tuple(-static_cast<int>(c.size()), is_long, has_zero, c.front());
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

std::vector<std::vector<int>> coxeter_automorphisms(const std::vector<std::vector<int>>& cox) {
  const int n = static_cast<int>(cox.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> extend = [&](int k) {
    if (k == n) {
      out.push_back(perm);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = cox[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] ==
             cox[static_cast<std::size_t>(t)][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      if (!ok) continue;
      perm[static_cast<std::size_t>(k)] = t;
      used[static_cast<std::size_t>(t)] = true;
      extend(k + 1);
      used[static_cast<std::size_t>(t)] = false;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------- RootDatum

RootDatum::RootDatum(char type, int rank, const std::vector<int>& decoration, const LatticeChoice& lattice)
    : roots_(std::make_shared<FiniteRootSystem>(type, rank)) {
  build_classes(decoration);
  build_lattice(lattice);
  // The id is needed by the arithmetic, so hash the declared data first.
  std::string tag = label() + "|";
  for (int x : decoration_) tag += std::to_string(x) + ",";
  tag += "|";
  for (const auto& row : lattice_) {
    for (auto x : row) tag += std::to_string(x) + ",";
    tag += ";";
  }
  id_ = fnv1a64(tag);
  weyl_ = std::make_unique<WeylArithmetic>(roots_, id_);
  build_omega();
  graph_auts_ = coxeter_automorphisms(roots_->coxeter_matrix());
}

IntMatrix RootDatum::simple_roots() const { return identity_matrix(static_cast<std::size_t>(rank())); }

IntMatrix RootDatum::simple_coroots() const { return cartan(); }

std::vector<int> RootDatum::class_decoration() const {
  std::vector<int> out;
  for (const auto& c : classes_) out.push_back(d(c.front()));
  return out;
}

bool RootDatum::equal_parameters() const {
  return std::all_of(decoration_.begin(), decoration_.end(), [&](int x) { return x == decoration_.front(); });
}

void RootDatum::build_classes(const std::vector<int>& decoration) {
  classes_ = conjugacy_classes(*roots_);
  const auto n = static_cast<std::size_t>(num_nodes());
  class_of_.assign(n, 0);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (int s : classes_[i]) class_of_[static_cast<std::size_t>(s)] = static_cast<int>(i);

  for (int x : decoration)
    if (x <= 0) fail(ErrorCode::InvalidInput, "decoration values must be positive integers");
  decoration_.assign(n, 1);
  if (decoration.empty()) return;
  if (decoration.size() == classes_.size()) {
    for (std::size_t s = 0; s < n; ++s) decoration_[s] = decoration[static_cast<std::size_t>(class_of_[s])];
    return;
  }
  if (decoration.size() == n) {
    for (std::size_t s = 0; s < n; ++s)
      if (decoration[s] != decoration[static_cast<std::size_t>(classes_[static_cast<std::size_t>(class_of_[s])].front())])
        fail(ErrorCode::DecorationNotClassConstant,
             "per-node decoration differs inside class S_" + std::to_string(class_of_[s] + 1) + " of " + label());
    decoration_ = decoration;
    return;
  }
  fail(ErrorCode::DecorationNotClassConstant, label() + " has " + std::to_string(classes_.size()) +
                                                  " classes and " + std::to_string(n) + " nodes, got " +
                                                  std::to_string(decoration.size()) + " decoration values");
}

void RootDatum::build_lattice(const LatticeChoice& choice) {
  const auto l = static_cast<std::size_t>(rank());
  coroot_lattice_ = hermite_basis(cartan());
  lattice_kind_ = choice.kind;
  switch (choice.kind) {
    case LatticeKind::Coweight:
      lattice_ = identity_matrix(l);
      break;
    case LatticeKind::Coroot:
      lattice_ = coroot_lattice_;
      break;
    case LatticeKind::Explicit: {
      for (const auto& row : choice.basis)
        if (row.size() != l) fail(ErrorCode::LatticeNotIntermediate, "basis vector of wrong dimension");
      lattice_ = hermite_basis(choice.basis);
      if (lattice_.size() != l) fail(ErrorCode::LatticeNotIntermediate, "basis does not have full rank");
      for (const auto& coroot : cartan())
        if (!lattice_contains(lattice_, coroot))
          fail(ErrorCode::LatticeNotIntermediate, "lattice does not contain the coroot lattice");
      break;
    }
  }
  lattice_index_in_pcoweight_ = std::llabs(determinant(lattice_));
}

IntVec RootDatum::lattice_invariants() const {
  // Coroots expressed in the lattice basis: C = A * B^{-1}.
  const std::int64_t det = determinant(lattice_);
  const IntMatrix prod = multiply(cartan(), adjugate(lattice_));
  IntMatrix c = prod;
  for (auto& row : c)
    for (auto& x : row) x /= det;
  IntVec out;
  for (auto x : smith_invariants(c))
    if (x != 1) out.push_back(x);
  return out;
}

void RootDatum::build_omega() {
  // Coset representatives of Lambda / Q^vee: lambda lies in Q^vee iff
  // adj(A^T) lambda vanishes mod det A.
  const IntMatrix adj = adjugate(transpose(cartan()));
  const std::int64_t det = std::llabs(determinant(cartan()));
  auto key = [&](const IntVec& lambda) {
    IntVec k = multiply(adj, lambda);
    for (auto& x : k) x = ((x % det) + det) % det;
    return k;
  };
  std::vector<IntVec> reps{IntVec(static_cast<std::size_t>(rank()), 0)};
  std::set<IntVec> seen{key(reps[0])};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& b : lattice_) {
      IntVec next = reps[i];
      for (std::size_t j = 0; j < next.size(); ++j) next[j] += b[j];
      if (seen.insert(key(next)).second) reps.push_back(next);
    }

  const auto& affine = roots_->affine_simple_roots();
  std::vector<OmegaElement> elems;
  for (const auto& lambda : reps) {
    OmegaElement e;
    e.coweight = lambda;
    e.element = weyl_->reduced_word(weyl_->translation(lambda)).omega;
    for (const auto& a : affine) {
      const AffineRoot img = weyl_->act(e.element, a);
      const auto it = std::find(affine.begin(), affine.end(), img);
      if (it == affine.end()) fail(ErrorCode::RelationsFail, "length-zero element does not permute simple roots");
      e.perm.push_back(static_cast<int>(it - affine.begin()));
    }
    elems.push_back(std::move(e));
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExtWeylElt p = weyl_->mul(elems[i].element, elems[j].element);
      for (std::size_t k = 0; k < n; ++k)
        if (elems[k].element == p) table[i][j] = static_cast<int>(k);
      if (table[i][j] < 0) fail(ErrorCode::RelationsFail, "omega is not closed under multiplication");
    }
  omega_ = OmegaGroup(elems, table);

  std::vector<int> keep;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (int s = 0; s < num_nodes(); ++s)
      if (d(s) != d(elems[i].perm[static_cast<std::size_t>(s)])) ok = false;
    if (ok) keep.push_back(static_cast<int>(i));
  }
  std::vector<OmegaElement> sub;
  std::vector<std::vector<int>> subtable(keep.size(), std::vector<int>(keep.size()));
  for (int i : keep) sub.push_back(elems[static_cast<std::size_t>(i)]);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      const int p = table[static_cast<std::size_t>(keep[a])][static_cast<std::size_t>(keep[b])];
      subtable[a][b] = static_cast<int>(std::find(keep.begin(), keep.end(), p) - keep.begin());
    }
  decorated_omega_ = OmegaGroup(sub, subtable);

  IntMatrix gens = cartan();
  for (const auto& e : sub) gens.push_back(e.coweight);
  effective_ = hermite_basis(gens);
}

DatumPtr build_root_datum(char type, int rank, const std::vector<int>& decoration, const LatticeChoice& lattice) {
  return std::make_shared<const RootDatum>(type, rank, decoration, lattice);
}

}  // namespace hecke_lab
