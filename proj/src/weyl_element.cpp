#include "hecke_lab/weyl_element.hpp"

#include <cstdlib>

#include "hecke_lab/errors.hpp"

namespace hecke_lab {

namespace {

IntVec flatten(const IntMatrix& m) {
  IntVec out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

IntVec matmul(const IntVec& a, const IntVec& b, int n) {
  IntVec c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::int64_t x = a[static_cast<std::size_t>(i * n + k)];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += x * b[static_cast<std::size_t>(k * n + j)];
    }
  return c;
}

}  // namespace

bool ExtWeylElt::is_translation() const {
  const int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (matrix[static_cast<std::size_t>(i * n + j)] != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t ExtWeylHash::operator()(const ExtWeylElt& e) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ e.datum;
  auto mix = [&](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto v : e.translation) mix(v);
  for (auto v : e.matrix) mix(v);
  return static_cast<std::size_t>(h);
}

WeylArithmetic::WeylArithmetic(std::shared_ptr<const FiniteRootSystem> roots, std::uint64_t datum)
    : roots_(std::move(roots)), datum_(datum) {
  const int l = roots_->rank();
  // Node 0: reflection in <theta, x> + 1 = 0, i.e. x -> -theta^vee + s_theta(x).
  {
    ExtWeylElt s0;
    s0.datum = datum_;
    s0.translation = roots_->highest_coroot();
    for (auto& v : s0.translation) v = -v;
    s0.matrix = flatten(roots_->reflection_matrix(roots_->highest_root()));
    s0.inverse = s0.matrix;
    generators_.push_back(std::move(s0));
  }
  for (int i = 0; i < l; ++i) {
    IntVec e(static_cast<std::size_t>(l), 0);
    e[static_cast<std::size_t>(i)] = 1;
    ExtWeylElt si;
    si.datum = datum_;
    si.translation.assign(static_cast<std::size_t>(l), 0);
    si.matrix = flatten(roots_->reflection_matrix(e));
    si.inverse = si.matrix;
    generators_.push_back(std::move(si));
  }
}

void WeylArithmetic::check(const ExtWeylElt& a) const {
  if (a.datum != datum_) fail(ErrorCode::DatumMismatch, "element belongs to a different root datum");
}

ExtWeylElt WeylArithmetic::identity() const { return translation(IntVec(static_cast<std::size_t>(rank()), 0)); }

ExtWeylElt WeylArithmetic::translation(const IntVec& lambda) const {
  const int l = rank();
  if (static_cast<int>(lambda.size()) != l) fail(ErrorCode::InvalidInput, "translation vector has wrong dimension");
  ExtWeylElt t;
  t.datum = datum_;
  t.translation = lambda;
  t.matrix = flatten(identity_matrix(static_cast<std::size_t>(l)));
  t.inverse = t.matrix;
  return t;
}

IntVec WeylArithmetic::act_root(const ExtWeylElt& w, const IntVec& root) const {
  const int n = rank();
  IntVec out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += w.matrix[static_cast<std::size_t>(i * n + j)] * root[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

IntVec WeylArithmetic::act_coweight(const ExtWeylElt& w, const IntVec& lambda) const {
  // <alpha_i, w lambda> = <w^{-1} alpha_i, lambda>
  const int n = rank();
  IntVec out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n; ++j) acc += w.inverse[static_cast<std::size_t>(j * n + i)] * lambda[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

AffineRoot WeylArithmetic::act(const ExtWeylElt& w, const AffineRoot& a) const {
  AffineRoot out;
  out.root = act_root(w, a.root);
  out.level = a.level - roots_->pairing(out.root, w.translation);
  return out;
}

ExtWeylElt WeylArithmetic::mul(const ExtWeylElt& a, const ExtWeylElt& b) const {
  check(a);
  check(b);
  const int n = rank();
  ExtWeylElt c;
  c.datum = datum_;
  c.translation = act_coweight(a, b.translation);
  for (int i = 0; i < n; ++i) c.translation[static_cast<std::size_t>(i)] += a.translation[static_cast<std::size_t>(i)];
  c.matrix = matmul(a.matrix, b.matrix, n);
  c.inverse = matmul(b.inverse, a.inverse, n);
  return c;
}

ExtWeylElt WeylArithmetic::mul_generator(const ExtWeylElt& a, int node) const {
  return mul(a, generators_[static_cast<std::size_t>(node)]);
}

ExtWeylElt WeylArithmetic::inv(const ExtWeylElt& a) const {
  check(a);
  ExtWeylElt b;
  b.datum = datum_;
  b.matrix = a.inverse;
  b.inverse = a.matrix;
  b.translation = act_coweight(b, a.translation);
  for (auto& v : b.translation) v = -v;
  return b;
}

bool WeylArithmetic::is_right_descent(const ExtWeylElt& w, int node) const {
  return !is_positive(act(w, roots_->affine_simple_roots()[static_cast<std::size_t>(node)]));
}

bool WeylArithmetic::is_left_descent(const ExtWeylElt& w, int node) const {
  // w^{-1}(alpha, k) = (u^{-1} alpha, k + <alpha, lambda>)
  const auto& a = roots_->affine_simple_roots()[static_cast<std::size_t>(node)];
  const int n = rank();
  AffineRoot img;
  img.root.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      img.root[static_cast<std::size_t>(i)] += w.inverse[static_cast<std::size_t>(i * n + j)] * a.root[static_cast<std::size_t>(j)];
  img.level = a.level + roots_->pairing(a.root, w.translation);
  return !is_positive(img);
}

std::int64_t WeylArithmetic::length(const ExtWeylElt& w) const {
  check(w);
  const int n = rank();
  std::int64_t total = 0;
  for (const auto& alpha : roots_->positive_roots()) {
    const std::int64_t p = roots_->pairing(alpha, w.translation);
    // sign of u^{-1} alpha
    bool positive = true;
    for (int i = 0; i < n && positive; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < n; ++j) acc += w.inverse[static_cast<std::size_t>(i * n + j)] * alpha[static_cast<std::size_t>(j)];
      if (acc < 0) positive = false;
    }
    total += positive ? std::llabs(p) : std::llabs(p + 1);
  }
  return total;
}

WeylArithmetic::Reduced WeylArithmetic::reduced_word(const ExtWeylElt& w) const {
  check(w);
  Reduced r;
  ExtWeylElt cur = w;
  std::vector<int> reversed;
  const int nodes = roots_->num_nodes();
  while (true) {
    int found = -1;
    for (int s = 0; s < nodes; ++s)
      if (is_right_descent(cur, s)) {
        found = s;
        break;
      }
    if (found < 0) break;
    cur = mul_generator(cur, found);
    reversed.push_back(found);
  }
  r.omega = std::move(cur);
  r.word.assign(reversed.rbegin(), reversed.rend());
  return r;
}

ExtWeylElt WeylArithmetic::from_word(const ExtWeylElt& omega, const std::vector<int>& word) const {
  ExtWeylElt cur = omega;
  for (int s : word) cur = mul_generator(cur, s);
  return cur;
}

}  // namespace hecke_lab
