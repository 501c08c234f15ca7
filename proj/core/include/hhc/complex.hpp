#pragma once

#include "hhc/algebra.hpp"
#include "hhc/tensor.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hhc {

struct Generator {
  std::string label;
  int degree = 0;
  int internal = 0;
};

struct SolveCache;

// Shifted free bimodule complex: top degree 1, differential of degree +1 given on
// generators, generators listed completely for degrees in [lo, 1].
class Complex {
 public:
  explicit Complex(std::shared_ptr<const Algebra> A);
  ~Complex();

  const Algebra& algebra() const { return *A_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return A_; }
  const Field& field() const { return A_->field(); }
  bool graded() const { return A_->graded(); }

  int add_generator(std::string label, int degree, int internal = 0);
  void set_d(int g, Tensor v);
  void set_mu(int g, Tensor v);
  void set_lo(int lo) { lo_ = lo; }

  int lo() const { return lo_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int g) const { return gens_[g]; }
  int find(const std::string& label) const;
  const std::vector<int>& in_degree(int deg) const;
  const Tensor& d(int g) const { return d_[g]; }
  const Tensor& mu(int g) const { return mu_[g]; }
  bool augmented() const { return augmented_; }

  // Degree and internal degree of a basis tuple.
  int key_degree(const Key& k) const;
  int key_internal(const Key& k) const;

  // Basis tuples of (P^{(x)n})_j, optionally only those of internal degree t.
  // Tuples are produced in lexicographic order.
  void for_each_basis(int n, int j, std::optional<int> t, const std::function<void(const Key&)>& fn) const;
  std::vector<Key> basis(int n, int j, std::optional<int> t = std::nullopt) const;

  // Whether (P^{(x)n})_j is fully present in the window.
  bool tensor_degree_complete(int n, int j) const { return j - (n - 1) >= lo_; }

  std::string name;
  SolveCache& cache() const;

 private:
  std::shared_ptr<const Algebra> A_;
  std::vector<Generator> gens_;
  std::map<int, std::vector<int>> by_degree_;
  std::unordered_map<std::string, int> by_label_;
  std::vector<Tensor> d_;
  std::vector<Tensor> mu_;
  bool augmented_ = false;
  int lo_ = 1;
  mutable std::unique_ptr<SolveCache> cache_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

// Left/right multiplication of every term by an algebra basis element.
Tensor left_multiply(const Algebra& A, int a, const Tensor& x);
Tensor right_multiply(const Algebra& A, const Tensor& x, int b);

// Single free-module term a (x) g (x) b.
Tensor bimodule_term(int a, int g, int b, const Scalar& c);
// Element (b) of A as an arity-0 tensor.
Tensor algebra_tensor(int b, const Scalar& c);

}  // namespace hhc
