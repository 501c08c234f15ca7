#include "identities.hpp"

namespace hhc::testing {

Scalar sign(const Field& F, long long e) { return e % 2 ? -Scalar::one(F) : Scalar::one(F); }

bool pre_lie(const Tuple& f, const Tuple& g, const Tuple& h, int K) {
  const Field& F = f.complex_ptr()->field();
  Tuple lhs = circ(circ(f, g, K + 1), h, K) - circ(f, circ(g, h, K + 1), K);
  Tuple rhs = circ(circ(g, f, K + 1), h, K) - circ(g, circ(f, h, K + 1), K);
  return tuples_equal(lhs, rhs.scaled(sign(F, f.degree() * g.degree())));
}

bool antisymmetry(const Tuple& f, const Tuple& g, int K) {
  const Field& F = f.complex_ptr()->field();
  return tuple_is_zero(bracket(f, g, K) + bracket(g, f, K).scaled(sign(F, f.degree() * g.degree())));
}

bool jacobi(const Tuple& f, const Tuple& g, const Tuple& h, int K) {
  const Field& F = f.complex_ptr()->field();
  Tuple lhs = bracket(f, bracket(g, h, K + 1), K);
  Tuple rhs = bracket(bracket(f, g, K + 1), h, K) +
              bracket(g, bracket(f, h, K + 1), K).scaled(sign(F, f.degree() * g.degree()));
  return tuples_equal(lhs, rhs);
}

bool delta_leibniz2(const AinftyStructure& S, const Tuple& f, const Tuple& g, int K) {
  const Field& F = S.P->field();
  Tuple df = delta_bracket(S, f, K + 1), dg = delta_bracket(S, g, K + 1);
  Tuple lhs = delta_bracket(S, m_l(S, {&f, &g}, K + 1), K);
  Tuple rhs = m_l(S, {&df, &g}, K) + m_l(S, {&f, &dg}, K).scaled(sign(F, f.degree() + 1));
  return tuples_equal(lhs, rhs);
}

bool delta_leibniz3(const AinftyStructure& S, const Tuple& f, const Tuple& g, const Tuple& h, int K) {
  const Field& F = S.P->field();
  int n = f.degree(), m = g.degree(), p = h.degree();
  Tuple df = delta_bracket(S, f, K + 1), dg = delta_bracket(S, g, K + 1), dh = delta_bracket(S, h, K + 1);
  Tuple fg = m_l(S, {&f, &g}, K + 1), gh = m_l(S, {&g, &h}, K + 1);
  Tuple lhs = delta_bracket(S, m_l(S, {&f, &g, &h}, K + 1), K);
  Tuple rhs = m_l(S, {&df, &g, &h}, K) + m_l(S, {&f, &dg, &h}, K).scaled(sign(F, n + 1)) +
              m_l(S, {&f, &g, &dh}, K).scaled(sign(F, n + m)) -
              (m_l(S, {&fg, &h}, K) - m_l(S, {&f, &gh}, K)).scaled(sign(F, n + m + p));
  return tuples_equal(lhs, rhs);
}

namespace {

Tuple graded_commutator(const AinftyStructure& S, const Tuple& f, const Tuple& g, int K) {
  const Field& F = S.P->field();
  return cup(S, f, g, K) - cup(S, g, f, K).scaled(sign(F, (g.degree() + 1) * (f.degree() + 1)));
}

}  // namespace

bool commutator_via_circ(const AinftyStructure& S, const Tuple& f, const Tuple& g, int K) {
  const Field& F = S.P->field();
  Tuple d = Tuple::from_structure(S);
  Tuple lhs = (circ(f, circ(g, d, K + 1), K) - circ(circ(f, g, K + 1), d, K)).scaled(sign(F, g.degree()));
  return tuples_equal(lhs, graded_commutator(S, f, g, K));
}

bool graded_commutative_up_to_inner(const AinftyStructure& S, const Tuple& f, const Tuple& g, int K) {
  const Field& F = S.P->field();
  Tuple rhs = delta_bracket(S, circ(f, g, K + 1), K).scaled(sign(F, f.degree()));
  return tuples_equal(graded_commutator(S, f, g, K), rhs);
}

namespace {

Tuple poisson_lhs(const AinftyStructure& S, const Tuple& f, const Tuple& g, const Tuple& h, int K) {
  const Field& F = S.P->field();
  Tuple fug = cup(S, f, g, K + 1), bgh = bracket(g, h, K + 1), bfh = bracket(f, h, K + 1);
  return bracket(fug, h, K) - cup(S, f, bgh, K) - cup(S, bfh, g, K).scaled(sign(F, (g.degree() + 1) * h.degree()));
}

}  // namespace

bool poisson_expansion(const AinftyStructure& S, const Tuple& f, const Tuple& g, const Tuple& h, int K) {
  const Field& F = S.P->field();
  int n = f.degree(), r = g.degree();
  Tuple df = delta_bracket(S, f, K + 1), dg = delta_bracket(S, g, K + 1), dh = delta_bracket(S, h, K + 1);
  Tuple mh = m_l_h({&f, &g}, h, K + 1);
  Tuple rhs = m_l_h({&f, &g}, dh, K).scaled(sign(F, r)) + m_l_h({&df, &g}, h, K).scaled(sign(F, n)) +
              m_l_h({&f, &dg}, h, K) - delta_bracket(S, mh, K).scaled(sign(F, n));
  return tuples_equal(poisson_lhs(S, f, g, h, K), rhs);
}

bool poisson_residual(const AinftyStructure& S, const Tuple& f, const Tuple& g, const Tuple& h, int K) {
  const Field& F = S.P->field();
  Tuple mh = m_l_h({&f, &g}, h, K + 1);
  return tuples_equal(poisson_lhs(S, f, g, h, K), delta_bracket(S, mh, K).scaled(sign(F, f.degree() + 1)));
}

bool psi_relation(const AinftyStructure& S, int t, int r) {
  const Field& F = S.P->field();
  Map lhs = hom_differential(psi(S, t, r));
  for (int s = 1; s < t; ++s) {
    Map a = psi(S, s, r), b = psi(S, t - s, r - s);
    lhs += compose(Ops{&a}, b).scaled(sign(F, s));
  }
  return lhs.is_zero();
}

CoderivationSampler::CoderivationSampler(const AinftyStructure& S, Random& R, int lift_depth)
    : S_(S), R_(R), depth_(lift_depth), lifts_(3) {
  for (int k = 0; k <= 2; ++k)
    for (auto& rep : hh_basis(S.P, k).reps) lifts_[k].push_back(lift_cocycle(S, rep, depth_));
}

Tuple CoderivationSampler::sample(int k) {
  Tuple t = delta_bracket(S_, R_.tuple(S_.P, k - 2, 2, 0.3), depth_);
  for (auto& l : lifts_[k]) t = t + l.scaled(Scalar(S_.P->field(), R_.uniform(-2, 2)));
  return t;
}

}  // namespace hhc::testing
