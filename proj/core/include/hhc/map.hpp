#pragma once

#include "hhc/complex.hpp"

#include <set>
#include <vector>

namespace hhc {

// Homogeneous bimodule map P -> Q^{(x)n} (n = arity; arity 0 means P -> A) stored by
// its values on generators of P. Q is P unless a target is given. Values are certified
// for generators of degree >= lo(); nothing is stored below.
class Map {
 public:
  Map() = default;
  Map(ComplexPtr P, int arity, int degree, ComplexPtr target = nullptr);

  static Map identity(ComplexPtr P);
  static Map differential(ComplexPtr P);
  static Map augmentation(ComplexPtr P);

  const Complex& complex() const { return *P_; }
  const ComplexPtr& complex_ptr() const { return P_; }
  const Complex& target() const { return *T_; }
  const ComplexPtr& target_ptr() const { return T_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  int lo() const { return lo_; }
  bool certified(int g) const { return P_->gen(g).degree >= lo_; }

  // Raises the certified bottom, erasing values below it.
  void restrict_lo(int lo);

  const Tensor& at(int g) const;
  void set(int g, Tensor v);
  void add(int g, const Tensor& v);

  bool is_zero() const;
  // Internal-degree shifts occurring in the values (graded complexes only).
  std::set<int> internal_shifts() const;

  Map& operator+=(const Map& o);
  Map& operator-=(const Map& o);
  Map operator+(const Map& o) const;
  Map operator-(const Map& o) const;
  Map operator-() const;
  Map scaled(const Scalar& c) const;
  // Equal on the common certified range.
  bool operator==(const Map& o) const;
  bool operator!=(const Map& o) const { return !(*this == o); }

 private:
  void check_shape(const Map& o) const;

  ComplexPtr P_;
  ComplexPtr T_;
  int arity_ = 1;
  int degree_ = 0;
  int lo_ = 1;
  std::vector<Tensor> values_;
};

// Operator f_1 (x) ... (x) f_n acting on P^{(x)n}; a null entry is the identity.
// The tensor x lives over P, the source of every non-null f_j.
using Ops = std::vector<const Map*>;

// (f_1 (x) ... (x) f_n)(x) with the Koszul sign (-1)^{|f_j| (|x_1| + ... + |x_{j-1}|)}.
// Returns false (leaving out untouched) when some factor generator lies below the
// certified range of the operator applied to it.
bool apply_ops(const Complex& P, const Ops& ops, const Tensor& x, Tensor& out);
Tensor apply_ops(const Complex& P, const Ops& ops, const Tensor& x);

// 1^{(x)r} (x) f (x) 1^{(x)t}
Ops amplified(int r, const Map* f, int t);

// ops o g, certified where every factor could be evaluated.
Map compose(const Ops& ops, const Map& g);
inline Map compose(const Map& f, const Map& g) { return compose(Ops{&f}, g); }

// Differential of P^{(x)n}: sum over factors of 1^{(x)i} (x) d (x) 1^{(x)(n-1-i)}.
Tensor tensor_differential(const Complex& P, const Tensor& x);

// d f - (-1)^{|f|} f d
Map hom_differential(const Map& f);

// "label -> value" for the topmost nonzero certified value, empty when zero.
std::string first_nonzero(const Map& f);

}  // namespace hhc
