#pragma once

#include "hhc/scalar.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hhc {

// Basis tuple (a0, g1, a1, ..., gn, an) of P^{(x)n}: algebra basis indices at even
// positions, generator ids at odd positions. Arity 0 is the single slot (b) of A.
using Key = boost::container::small_vector<std::int32_t, 9>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = k.size();
    for (auto v : k) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline int key_arity(const Key& k) { return static_cast<int>(k.size() / 2); }

struct Term {
  Key key;
  Scalar c;
};

// Sparse element of P^{(x)_A n}; terms sorted by key, no zero coefficients.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Appends without canonicalizing; normalize() must run before the value is read.
  void push(Key k, Scalar c) { terms_.push_back({std::move(k), std::move(c)}); }
  void normalize();

  void add_scaled(const Tensor& o, const Scalar& c);
  Tensor scaled(const Scalar& c) const;
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  Scalar coefficient(const Key& k) const;

 private:
  int arity_ = 0;
  std::vector<Term> terms_;
};

// Dense numbering of keys, used as row/column ids for the linear solver.
class KeyIndex {
 public:
  int id(const Key& k) {
    auto [it, fresh] = ids_.emplace(k, static_cast<int>(keys_.size()));
    if (fresh) keys_.push_back(k);
    return it->second;
  }
  int find(const Key& k) const {
    auto it = ids_.find(k);
    return it == ids_.end() ? -1 : it->second;
  }
  const Key& key(int id) const { return keys_[id]; }
  int size() const { return static_cast<int>(keys_.size()); }

 private:
  std::unordered_map<Key, int, KeyHash> ids_;
  std::vector<Key> keys_;
};

}  // namespace hhc
