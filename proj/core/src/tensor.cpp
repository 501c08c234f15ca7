#include "hhc/tensor.hpp"

#include <algorithm>

namespace hhc {

void Tensor::normalize() {
  if (terms_.empty()) return;
  bool sorted = true;
  for (std::size_t i = 1; i < terms_.size() && sorted; ++i) sorted = terms_[i - 1].key < terms_[i].key;
  if (sorted) {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.c.is_zero(); }), terms_.end());
    return;
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].key == terms_[i].key; ++j) terms_[i].c += terms_[j].c;
    if (!terms_[i].c.is_zero()) {
      if (out != i) terms_[out] = std::move(terms_[i]);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

void Tensor::add_scaled(const Tensor& o, const Scalar& c) {
  if (c.is_zero() || o.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      merged.push_back({b->key, b->c * c});
      ++b;
    } else {
      Scalar s = a->c + b->c * c;
      if (!s.is_zero()) merged.push_back({std::move(a->key), s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor r(arity_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  r += o;
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor r = *this;
  r -= o;
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!o.terms_.empty()) add_scaled(o, Scalar::one(o.terms_.front().c.field()));
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (!o.terms_.empty()) add_scaled(o, -Scalar::one(o.terms_.front().c.field()));
  return *this;
}

bool Tensor::operator==(const Tensor& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].key != o.terms_[i].key || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Scalar Tensor::coefficient(const Key& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, const Key& key) { return t.key < key; });
  if (it != terms_.end() && it->key == k) return it->c;
  return Scalar();
}

}  // namespace hhc
