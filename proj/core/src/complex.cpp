#include "hhc/complex.hpp"

#include <algorithm>

#include "hhc/errors.hpp"
#include "hhc/solver.hpp"

namespace hhc {

Complex::Complex(std::shared_ptr<const Algebra> A) : A_(std::move(A)) {}
Complex::~Complex() = default;

int Complex::add_generator(std::string label, int degree, int internal) {
  if (degree > 1) throw Error(ErrorKind::DegreeMismatch, "generator '" + label + "' above degree 1");
  if (by_label_.count(label)) throw Error(ErrorKind::ParseError, "duplicate generator '" + label + "'");
  int id = num_generators();
  by_label_[label] = id;
  gens_.push_back({std::move(label), degree, internal});
  by_degree_[degree].push_back(id);
  d_.emplace_back(1);
  mu_.emplace_back(0);
  if (degree < lo_) lo_ = degree;
  return id;
}

void Complex::set_d(int g, Tensor v) {
  v.normalize();
  d_.at(g) = std::move(v);
}

void Complex::set_mu(int g, Tensor v) {
  if (gens_.at(g).degree != 1) throw Error(ErrorKind::DegreeMismatch, "augmentation on generator outside degree 1");
  v.normalize();
  mu_.at(g) = std::move(v);
  augmented_ = true;
}

int Complex::find(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? -1 : it->second;
}

const std::vector<int>& Complex::in_degree(int deg) const {
  static const std::vector<int> none;
  auto it = by_degree_.find(deg);
  return it == by_degree_.end() ? none : it->second;
}

int Complex::key_degree(const Key& k) const {
  int s = 0;
  for (std::size_t i = 1; i < k.size(); i += 2) s += gens_[k[i]].degree;
  return s;
}

int Complex::key_internal(const Key& k) const {
  int s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i % 2) ? gens_[k[i]].internal : A_->degree(k[i]);
  return s;
}

namespace {

struct BasisWalker {
  const Complex& P;
  int n;
  std::optional<int> t;
  const std::function<void(const Key&)>& fn;
  Key key;
  int maxdeg;

  // Fill algebra slots once generators are fixed.
  void algebra_slots(int slot, int budget) {
    const Algebra& A = P.algebra();
    if (slot > n) {
      if (!t || budget == 0) fn(key);
      return;
    }
    for (int a = 0; a < A.dim(); ++a) {
      int da = A.degree(a);
      if (t && da > budget) continue;
      key[2 * slot] = a;
      algebra_slots(slot + 1, t ? budget - da : 0);
    }
  }

  void generators(int pos, int remaining, int internal) {
    if (pos > n) {
      if (remaining != 0) return;
      if (t && internal > *t) return;
      algebra_slots(0, t ? *t - internal : 0);
      return;
    }
    int left = n - pos;  // factors after this one, each of degree in [lo, 1]
    for (int deg = 1; deg >= P.lo(); --deg) {
      int rest = remaining - deg;
      if (rest > left || rest < left * P.lo()) continue;
      for (int g : P.in_degree(deg)) {
        int gi = P.gen(g).internal;
        if (t && internal + gi > *t) continue;
        key[2 * pos - 1] = g;
        generators(pos + 1, rest, internal + gi);
      }
    }
  }
};

}  // namespace

void Complex::for_each_basis(int n, int j, std::optional<int> t, const std::function<void(const Key&)>& fn) const {
  if (!graded()) t.reset();
  if (n == 0) {
    if (j != 0) return;
    Key k{0};
    for (int a = 0; a < A_->dim(); ++a) {
      if (t && A_->degree(a) != *t) continue;
      k[0] = a;
      fn(k);
    }
    return;
  }
  BasisWalker w{*this, n, t, fn, Key(2 * n + 1, 0), A_->max_degree()};
  w.generators(1, j, 0);
}

std::vector<Key> Complex::basis(int n, int j, std::optional<int> t) const {
  std::vector<Key> out;
  for_each_basis(n, j, t, [&](const Key& k) { out.push_back(k); });
  std::sort(out.begin(), out.end());
  return out;
}

SolveCache& Complex::cache() const {
  if (!cache_) cache_ = std::make_unique<SolveCache>();
  return *cache_;
}

Tensor left_multiply(const Algebra& A, int a, const Tensor& x) {
  Tensor r(x.arity());
  for (auto& t : x.terms()) {
    for (auto& [b, c] : A.product(a, t.key[0])) {
      Key k = t.key;
      k[0] = b;
      r.push(std::move(k), t.c * c);
    }
  }
  r.normalize();
  return r;
}

Tensor right_multiply(const Algebra& A, const Tensor& x, int b) {
  Tensor r(x.arity());
  for (auto& t : x.terms()) {
    for (auto& [e, c] : A.product(t.key.back(), b)) {
      Key k = t.key;
      k.back() = e;
      r.push(std::move(k), t.c * c);
    }
  }
  r.normalize();
  return r;
}

Tensor bimodule_term(int a, int g, int b, const Scalar& c) {
  Tensor r(1);
  if (!c.is_zero()) r.push(Key{a, g, b}, c);
  return r;
}

Tensor algebra_tensor(int b, const Scalar& c) {
  Tensor r(0);
  if (!c.is_zero()) r.push(Key{b}, c);
  return r;
}

}  // namespace hhc
