#pragma once

#include "hhc/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hhc {

// Sparse linear combination of basis indices; sorted by index, no zero coefficients.
using Terms = std::vector<std::pair<int, Scalar>>;

struct AlgebraDescriptor {
  Field field;
  std::vector<std::string> basis;
  std::string unit;
  struct Product {
    int i = 0;
    int j = 0;
    Terms value;
  };
  // Products not listed are zero.
  std::vector<Product> mul;
  std::optional<std::vector<int>> grading;
  std::optional<int> truncation;
};

class AlgebraElement;

class Algebra {
 public:
  Algebra() = default;

  const Field& field() const { return field_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int unit() const { return unit_; }
  const std::string& label(int i) const { return labels_.at(i); }
  int index_of(const std::string& label) const;

  // basis_i * basis_j
  const Terms& product(int i, int j) const { return table_[static_cast<size_t>(i) * labels_.size() + j]; }

  bool graded() const { return !degrees_.empty(); }
  int degree(int i) const { return degrees_.empty() ? 0 : degrees_[i]; }
  std::optional<int> truncation() const { return truncation_; }
  int max_degree() const;

  AlgebraDescriptor descriptor() const;

  friend Algebra make_algebra(const AlgebraDescriptor& d);

 private:
  Field field_;
  std::vector<std::string> labels_;
  int unit_ = 0;
  std::vector<Terms> table_;
  std::vector<int> degrees_;
  std::optional<int> truncation_;
};

// Validates exhaustively: associativity on all basis triples, unit, grading.
Algebra make_algebra(const AlgebraDescriptor& d);

// k[x]/(x^n); with n empty, k[x] truncated at internal degree D.
Algebra truncated_polynomial_algebra(const Field& f, std::optional<int> n, std::optional<int> D = std::nullopt);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Terms t);
  static AlgebraElement basis(const Algebra& A, int i);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

AlgebraElement multiply(const Algebra& A, const AlgebraElement& a, const AlgebraElement& b);

// Canonicalize: sort by index, merge duplicates, drop zeros.
void normalize_terms(Terms& t);

// Pure tensors a (x) b in A (x) A^op with coefficients.
struct BimoduleScalar {
  struct Term {
    int a;
    int b;
    Scalar c;
  };
  std::vector<Term> terms;
  void normalize();
};

}  // namespace hhc
