#pragma once

#include "hhc/coderivation.hpp"
#include "hhc/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hhc {

// V with a basis of degree-1 generators and relations R in V (x) V; the coordinate of
// v_i (x) v_j is i * dim V + j.
struct QuadraticData {
  Field field;
  std::vector<std::string> generators;
  std::vector<SparseVec> relations;
};

// Words of length i are numbered lexicographically, first letter most significant.
struct KoszulComplex {
  QuadraticData Q;
  int D = 0;  // internal truncation of the algebra
  std::shared_ptr<const Algebra> A;
  ComplexPtr P;
  // K[i]: basis of K_i' in word coordinates; gens[i][t]: generator carrying K[i][t].
  std::vector<std::vector<SparseVec>> K;
  std::vector<std::vector<int>> gens;
  // Algebra basis element of each standard word, by length; -1 for non-standard words.
  std::vector<std::vector<int>> standard;
  // Word of each algebra basis element.
  std::vector<std::vector<int>> word_of;
  // Span of the two-sided ideal in each word length, pivots on lexicographically greatest words.
  std::vector<std::shared_ptr<Echelon>> ideal;

  int dim_v() const { return static_cast<int>(Q.generators.size()); }
  // Normal form in A of a word of V.
  Terms reduce_word(const std::vector<int>& w) const;
};

// T(V)/(R) truncated at internal degree D (untruncated when it is finite-dimensional).
std::shared_ptr<const Algebra> quadratic_algebra(const QuadraticData& Q, int D);

// K_i' for i <= N and the complex they span; validated within the window.
KoszulComplex koszul_resolution(const QuadraticData& Q, int N, int D);
// Restriction of the bar diagonal; delta_{>=3} = 0.
AinftyStructure koszul_delta2(const KoszulComplex& K);

// Closed-form lift on P_{1-n}, zero above, extended below inside P_{<=0}^{(x)k}.
Tuple koszul_lift(const KoszulComplex& K, const AinftyStructure& S, const Map& f, int max_n);

// alpha_k(P) inside P_{<=0}^{(x)k}, homogeneity of internal degree p - n, alpha_k = 0 for
// k > p and alpha_k = 0 above P_{1-n}.
Report check_pleq0(const Tuple& alpha);

// Presets: "k[x]", "k[x]/(x^2)", "k[x,y]".
QuadraticData quadratic_preset(const std::string& name, const Field& f);

}  // namespace hhc
