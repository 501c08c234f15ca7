#pragma once

#include "hhc/coderivation.hpp"
#include "hhc/linalg.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hhc {

// A class in HH^n is represented by a cocycle P -> A of map degree n - 1.
inline int cochain_degree(int n) { return n - 1; }

struct HHBasis {
  ComplexPtr P;
  int n = 0;
  std::vector<Map> reps;
  int dim() const { return static_cast<int>(reps.size()); }

  // Coboundary columns first, then the representatives.
  std::shared_ptr<Echelon> ech;
  std::vector<int> col_rep;  // representative index per column, -1 otherwise
};

// Basis of cocycles modulo coboundaries in Hom^{n-1}(P, A); needs degrees 1 - n and -n.
HHBasis hh_basis(const ComplexPtr& P, int n);
// Coordinates of a cocycle's class in the basis; throws NotACocycle.
std::vector<Scalar> hh_coordinates(const HHBasis& B, const Map& f);
// Whether two cocycles of one degree are cohomologous.
bool same_class(const Map& a, const Map& b);
inline bool is_coboundary(const Map& a) { return same_class(a, Map(a.complex_ptr(), 0, a.degree())); }

// f (alpha_g)_1 - (-1)^{|f||g|} g (alpha_f)_1 from lifts through component lift_depth.
Map gb_bracket(const AinftyStructure& S, const Map& f, const Map& g, int lift_depth = 2);
// (f (x) g) delta_2
Map gb_cup(const AinftyStructure& S, const Map& f, const Map& g);

// Classical formulas on the bar complex, with cochains read on words.
Map bar_oracle_bracket(const ComplexPtr& bar, const Map& f, const Map& g);
Map bar_oracle_cup(const ComplexPtr& bar, const Map& f, const Map& g);
// Bar cochain in HH^n from its values on words of length n.
Map bar_cochain(const ComplexPtr& bar, int n, const std::function<AlgebraElement(const std::vector<int>&)>& value);

}  // namespace hhc
