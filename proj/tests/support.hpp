#pragma once

#include "hhc/coderivation.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/koszul.hpp"
#include "hhc/resolutions.hpp"

#include <random>
#include <string>

namespace hhc::testing {

Tensor term0(const Algebra& A, const std::string& b, long long c = 1);
Tensor term1(const Complex& P, const std::string& a, const std::string& g, const std::string& b, long long c = 1);

// Cochain P -> A sending one generator to a basis element.
Map cochain(const ComplexPtr& P, int n, const std::string& gen, const std::string& value, long long c = 1);

bool tuple_is_zero(const Tuple& t);
// Components 0..min(max_n) agree.
bool tuples_agree(const Tuple& a, const Tuple& b);
bool tuples_equal(const Tuple& a, const Tuple& b);

// Rank of a dense matrix by plain row reduction.
int dense_rank(std::vector<std::vector<Scalar>> rows);

// Random maps P -> P^{(x)n} of one degree with sparse small coefficients.
class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}
  Scalar scalar(const Field& F);
  Map map(const ComplexPtr& P, int n, int degree, double density = 0.35);
  // components 0..max_n, exact tail
  Tuple tuple(const ComplexPtr& P, int degree, int max_n, double density = 0.35);
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Explicit coderivation families on k[x]/(x^n).
Tuple euler_family(const AinftyStructure& S, int n);   // alpha_0(e1) = x
Tuple beta_family(const AinftyStructure& S);           // beta_0(e2) = x
Tuple char3_family(const AinftyStructure& S);          // alpha_0(e1) = x^2 over F3

}  // namespace hhc::testing
