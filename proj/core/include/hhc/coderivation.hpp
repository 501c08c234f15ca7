#pragma once

#include "hhc/ainfinity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hhc {

// Maps f_n: P -> P^{(x)n} for 0 <= n <= max_n (f_0 lands in A), all of one degree.
// With exact_tail the components above max_n are zero, otherwise they are unknown.
class Tuple {
 public:
  Tuple() = default;
  Tuple(ComplexPtr P, int degree, int max_n, bool exact_tail = false);
  static Tuple from_structure(const AinftyStructure& S);

  const ComplexPtr& complex_ptr() const { return P_; }
  int degree() const { return degree_; }
  int max_n() const { return static_cast<int>(comps_.size()) - 1; }
  bool exact_tail() const { return exact_tail_; }
  // Largest arity that can be asked for; -1 for unbounded.
  int limit() const { return exact_tail_ ? -1 : max_n(); }

  // nullptr when known to vanish; throws WindowExhausted when unknown.
  const Map* comp(int n) const;
  Map& operator[](int n) { return comps_.at(n); }
  const Map& operator[](int n) const { return comps_.at(n); }
  Family family() const;

  // Lowest certified degree over all components.
  int lo() const;
  // Keeps components 0..n.
  Tuple truncated(int n) const;

  Tuple operator+(const Tuple& o) const;
  Tuple operator-(const Tuple& o) const;
  Tuple scaled(const Scalar& c) const;

 private:
  ComplexPtr P_;
  int degree_ = 0;
  bool exact_tail_ = false;
  std::vector<Map> comps_;
};

// (f o g)_i = sum over r+s+t=i of (1^r (x) f_s (x) 1^t) g_{r+t+1}, for i <= cap (cap < 0:
// as far as the inputs allow).
Tuple circ(const Tuple& f, const Tuple& g, int cap = -1);
// f o g - (-1)^{|f||g|} g o f
Tuple bracket(const Tuple& f, const Tuple& g, int cap = -1);
// m_l(f_1, ..., f_l) with the sign (-1)^{sum (i-1)|f_i|}; cup(f, g) = m_l({f, g}).
Tuple m_l(const AinftyStructure& S, const std::vector<const Tuple*>& fs, int cap = -1);
Tuple cup(const AinftyStructure& S, const Tuple& f, const Tuple& g, int cap = -1);
// m_l with h in place of delta and no sign.
Tuple m_l_h(const std::vector<const Tuple*>& fs, const Tuple& h, int cap = -1);

// [delta, f], whose vanishing through N is the coderivation equation.
Tuple delta_bracket(const AinftyStructure& S, const Tuple& f, int cap = -1);
// Component i of [delta, a] with a_n for n >= i treated as zero.
Map partial_delta_bracket(const AinftyStructure& S, const Tuple& a, int i);
std::vector<Map> coderivation_defect(const AinftyStructure& S, const Tuple& f, int N);
Report check_coderivation(const AinftyStructure& S, const Tuple& f, int N);

// Lift of a cocycle f: P -> A to a coderivation with alpha_0 = f, components 0..max_n.
Tuple lift_cocycle(const AinftyStructure& S, const Map& f, int max_n);

struct InnerResult {
  bool yes = false;
  Tuple beta;
  std::string witness;
};
// Decides whether a coderivation is [delta, beta]; beta is verified through alpha.max_n().
InnerResult is_inner(const AinftyStructure& S, const Tuple& alpha);

// psi_t^r, a map P -> P of degree 1 - t.
Map psi(const AinftyStructure& S, int t, int r);
// phi_1, ..., phi_t; index 0 unused.
std::vector<Map> phi_family(const AinftyStructure& S, int t);
// psi_2^2 - (1 (x) mu + mu (x) 1) delta_2 u with d u = (1 (x) mu - mu (x) 1) delta_2 - 2.
Map named_phi(const AinftyStructure& S);

// d phi_f = (f (x) 1 + 1 (x) f) delta_2 and mu phi_f + f phi ~ 0.
Report homotopy_lifting_check(const AinftyStructure& S, const Map& f, const Map& phi_f);

}  // namespace hhc
