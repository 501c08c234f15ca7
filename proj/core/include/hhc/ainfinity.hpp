#pragma once

#include "hhc/map.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hhc {

// delta_1 = d, delta_2, ..., delta_{max_n}, each of degree 1, with weak counit mu.
// With exact_tail the higher delta_n are known to vanish; otherwise they are unknown.
struct AinftyStructure {
  ComplexPtr P;
  std::vector<Map> deltas;  // deltas[n], index 0 unused
  int max_n = 1;
  bool exact_tail = false;
  Map mu;

  AinftyStructure() = default;
  AinftyStructure(ComplexPtr P, int max_n, bool exact_tail);

  // nullptr when delta_n is known to be zero; throws WindowExhausted when unknown.
  const Map* delta(int n) const;
  Map& set(int n, Map m);
};

struct Report {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

// Builds delta_2, ..., delta_{max_n} on an augmented resolution.
AinftyStructure construct_delta(const ComplexPtr& P, int max_n);

// (delta o delta)_m for m = 1..N; index 0 unused.
std::vector<Map> ainfty_defect(const AinftyStructure& S, int N);
// Convenience: every residual through N vanishes on its certified range.
Report check_ainfty(const AinftyStructure& S, int N);

// (mu (x) mu) delta_2 = mu and mu^{(x)n} delta_n = 0 for 2 < n <= max_n.
Report check_weak_counit(const AinftyStructure& S);

// Component lookup for families of maps indexed by arity; nullptr means zero.
using Family = std::function<const Map*(int)>;

// Sum over r + s + t = N of (1^r (x) f_s (x) 1^t) g_{r+t+1}, a map P -> P^{(x)N}
// (P -> A for N = 0) of the given degree.
Map circ_component(const ComplexPtr& P, int N, int degree, const Family& f, const Family& g);

}  // namespace hhc
