#include "hhc/linalg.hpp"

#include <algorithm>

namespace hhc {

void normalize_sparse(SparseVec& v) {
  if (v.empty()) return;
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < v.size();) {
    int r = v[i].first;
    Scalar c = v[i].second;
    size_t j = i + 1;
    for (; j < v.size() && v[j].first == r; ++j) c += v[j].second;
    if (!c.is_zero()) v[out++] = {r, c};
    i = j;
  }
  v.resize(out);
}

namespace {

void axpy(std::map<int, Scalar>& acc, const Scalar& a, const SparseVec& v) {
  for (auto& [r, c] : v) {
    Scalar t = a * c;
    auto it = acc.find(r);
    if (it == acc.end()) {
      acc.emplace(r, t);
    } else {
      it->second += t;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

void accumulate(std::map<int, Scalar>& m, const SparseVec& v) {
  for (auto& [r, c] : v) {
    if (c.is_zero()) continue;
    auto [it, fresh] = m.emplace(r, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }
}

SparseVec to_vec(const std::map<int, Scalar>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (auto& [r, c] : m) v.push_back({r, c});
  return v;
}

}  // namespace

void Echelon::reduce_into(std::map<int, Scalar>& v, std::map<int, Scalar>* comb) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivot_at_row_.find(it->first);
    if (p == pivot_at_row_.end()) {
      ++it;
      continue;
    }
    const Pivot& piv = pivots_[p->second];
    int row = it->first;
    Scalar coef = -it->second;
    axpy(v, coef, piv.vec);
    if (comb) axpy(*comb, coef, piv.comb);
    it = v.lower_bound(row);
  }
}

bool Echelon::add_column(const SparseVec& col) {
  int id = ncols_++;
  std::map<int, Scalar> v;
  accumulate(v, col);
  std::map<int, Scalar> comb;
  if (track_) comb.emplace(id, Scalar::one(f_));
  reduce_into(v, track_ ? &comb : nullptr);
  if (v.empty()) {
    if (track_) kernel_.push_back(to_vec(comb));
    return false;
  }
  Scalar inv = v.begin()->second.inverse();
  Pivot piv;
  piv.vec = to_vec(v);
  for (auto& [r, c] : piv.vec) c *= inv;
  if (track_) {
    piv.comb = to_vec(comb);
    for (auto& [r, c] : piv.comb) c *= inv;
  }
  pivot_at_row_[piv.vec.front().first] = static_cast<int>(pivots_.size());
  pivots_.push_back(std::move(piv));
  pivot_cols_.push_back(id);
  return true;
}

SparseVec Echelon::reduce(const SparseVec& rhs) const {
  std::map<int, Scalar> v;
  accumulate(v, rhs);
  reduce_into(v, nullptr);
  return to_vec(v);
}

std::optional<SparseVec> Echelon::solve(const SparseVec& rhs, SparseVec* residual) const {
  std::map<int, Scalar> v;
  accumulate(v, rhs);
  std::map<int, Scalar> comb;
  reduce_into(v, &comb);
  if (!v.empty()) {
    if (residual) *residual = to_vec(v);
    return std::nullopt;
  }
  // v_original = -(sum of subtracted multiples): negate the tracked combination
  SparseVec x = to_vec(comb);
  for (auto& [c, s] : x) s.negate();
  return x;
}

int sparse_rank(const Field& f, const std::vector<SparseVec>& cols) {
  Echelon e(f, false);
  for (auto& c : cols) e.add_column(c);
  return e.rank();
}

}  // namespace hhc
