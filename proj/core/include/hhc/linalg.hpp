#pragma once

#include "hhc/scalar.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hhc {

// Sparse vector over integer coordinates, sorted, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

void normalize_sparse(SparseVec& v);

// Incremental column echelon form over an exact field.
// Columns are reduced in insertion order against earlier pivots (pivot row = smallest
// row index of the reduced column), so solutions put zero on every column that is
// dependent on earlier ones.
class Echelon {
 public:
  explicit Echelon(Field f, bool track = true) : f_(f), track_(track) {}

  // Returns true when the column is independent of the earlier ones.
  bool add_column(const SparseVec& col);
  int num_columns() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  // Coefficients x with sum x_c col_c = rhs, or nullopt (residual filled if requested).
  std::optional<SparseVec> solve(const SparseVec& rhs, SparseVec* residual = nullptr) const;
  // Reduced form of v modulo the column span (zero iff v lies in the span).
  SparseVec reduce(const SparseVec& v) const;

  // One kernel vector per dependent column, in the order they were found.
  const std::vector<SparseVec>& kernel() const { return kernel_; }
  // Column ids that became pivots.
  const std::vector<int>& pivot_columns() const { return pivot_cols_; }

 private:
  struct Pivot {
    SparseVec vec;   // leading entry is 1
    SparseVec comb;  // vec = sum comb_c col_c
  };
  void reduce_into(std::map<int, Scalar>& v, std::map<int, Scalar>* comb) const;

  Field f_;
  bool track_;
  int ncols_ = 0;
  std::vector<Pivot> pivots_;
  std::vector<int> pivot_cols_;
  std::unordered_map<int, int> pivot_at_row_;
  std::vector<SparseVec> kernel_;
};

// Rank of a matrix given by sparse columns.
int sparse_rank(const Field& f, const std::vector<SparseVec>& cols);

}  // namespace hhc
