#pragma once

#include "hhc/linalg.hpp"
#include "hhc/map.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

namespace hhc {

// Matrix of the tensor differential (P^{(x)n})_j -> (P^{(x)n})_{j+1} at one internal degree.
struct DiffSystem {
  KeyIndex cols;
  KeyIndex rows;
  std::unique_ptr<Echelon> ech;
};

// Matrix of the Hom differential Hom^k(P, A) -> Hom^{k+1}(P, A); column (h, b) is the
// cochain sending generator h to basis element b.
struct HomSystem {
  int degree = 0;
  std::vector<std::pair<int, int>> cols;
  std::map<std::pair<int, int>, int> col_id;
  KeyIndex rows;  // keys (generator, basis)
  std::unique_ptr<Echelon> ech;
  std::vector<SparseVec> raw;  // unreduced columns
  bool complete = true;  // every equation row lies inside the window
};

struct SolveCache {
  std::map<std::tuple<int, int, int, int>, DiffSystem> diff;
  std::map<std::pair<int, int>, HomSystem> hom;
  std::map<int, std::optional<Tensor>> unit_lift;
};

struct SolveOptions {
  // Only tuples accepted by the predicate may appear in the solution.
  std::function<bool(const Key&)> allowed;
  // Distinguishes cached systems for different predicates; 0 disables caching.
  int allowed_tag = 0;
  // Generators of degree >= prescribed_from take their value from *prescribed.
  const Map* prescribed = nullptr;
  int prescribed_from = 2;
};

struct BoundaryResult {
  bool ok = false;
  Map phi;
  int failed_degree = 0;
  std::string witness;
};

// phi with d phi - (-1)^{|phi|} phi d = psi on the certified range. The range of phi shrinks
// (phi.lo() rises) where the window cannot decide solvability; ok = false only when a
// complete degree has no solution.
BoundaryResult try_solve_boundary(const Map& psi, const SolveOptions& opts = {});
// Throws NotACoboundary on failure.
Map solve_boundary(const Map& psi, const SolveOptions& opts = {});

struct HomotopyResult {
  bool yes = false;
  Map h;
  std::string residual;
};
HomotopyResult homotopic(const Map& f, const Map& g);

// s in (P_1)^{(x)n} with mu^{(x)n}(s) = 1, if one exists.
const std::optional<Tensor>& unit_lift(const ComplexPtr& P, int n);

// Throws WindowExhausted unless f is certified down to degree lo.
void require_certified(const Map& f, int lo, const std::string& what);

// Hom(P, A) in coordinates.
HomSystem& hom_system(const ComplexPtr& P, int degree);
SparseVec hom_coordinates(HomSystem& sys, const Map& f);
Map hom_from_coordinates(const ComplexPtr& P, const HomSystem& sys, const SparseVec& v);

}  // namespace hhc
