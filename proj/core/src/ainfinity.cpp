#include "hhc/ainfinity.hpp"

#include "hhc/errors.hpp"
#include "hhc/render.hpp"
#include "hhc/solver.hpp"

namespace hhc {

AinftyStructure::AinftyStructure(ComplexPtr P_, int max_n_, bool exact_tail_)
    : P(std::move(P_)), max_n(max_n_), exact_tail(exact_tail_) {
  if (max_n < 1) throw Error(ErrorKind::ShapeMismatch, "max_n must be at least 1");
  deltas.resize(max_n + 1);
  deltas[1] = Map::differential(P);
  for (int n = 2; n <= max_n; ++n) deltas[n] = Map(P, n, 1);
  if (P->augmented()) mu = Map::augmentation(P);
}

const Map* AinftyStructure::delta(int n) const {
  if (n < 1) return nullptr;
  if (n <= max_n) return &deltas[n];
  if (exact_tail) return nullptr;
  throw Error(ErrorKind::WindowExhausted, "delta_" + std::to_string(n) + " is beyond max_n = " + std::to_string(max_n));
}

Map& AinftyStructure::set(int n, Map m) {
  if (n < 2 || n > max_n) throw Error(ErrorKind::ShapeMismatch, "delta index out of range");
  if (m.arity() != n || m.degree() != 1 || m.complex_ptr() != P)
    throw Error(ErrorKind::ShapeMismatch, "delta_" + std::to_string(n) + " has the wrong shape");
  return deltas[n] = std::move(m);
}

Map circ_component(const ComplexPtr& P, int N, int degree, const Family& f, const Family& g) {
  Map out(P, N, degree);
  for (int s = 0; s <= N; ++s) {
    const Map* fs = f(s);
    if (!fs) continue;
    for (int r = 0; r + s <= N; ++r) {
      int t = N - s - r;
      const Map* gi = g(r + t + 1);
      if (!gi) continue;
      out += compose(amplified(r, fs, t), *gi);
    }
  }
  return out;
}

AinftyStructure construct_delta(const ComplexPtr& P, int max_n) {
  if (!P->augmented()) throw Error(ErrorKind::NotAugmented, "construct_delta needs an augmented complex");
  AinftyStructure S(P, max_n, false);
  if (max_n < 2) return S;
  const auto& s2 = unit_lift(P, 2);
  if (!s2) throw Error(ErrorKind::NotAugmented, "augmentation is not surjective on the top degree");
  Map top(P, 2, 1);
  for (int g : P->in_degree(1)) {
    Tensor v(2);
    for (auto& t : P->mu(g).terms()) v.add_scaled(left_multiply(P->algebra(), t.key[0], *s2), t.c);
    top.set(g, v);
  }
  SolveOptions opts;
  opts.prescribed = &top;
  opts.prescribed_from = 1;
  S.set(2, solve_boundary(Map(P, 2, 2), opts));
  for (int n = 3; n <= max_n; ++n) {
    Map psi(P, n, 2);
    for (int s = 2; s < n; ++s)
      for (int r = 0; r <= n - s; ++r) psi -= compose(amplified(r, S.delta(s), n - s - r), *S.delta(n - s + 1));
    Map dpsi = hom_differential(psi);
    if (!dpsi.is_zero())
      throw Error(ErrorKind::InternalInconsistency,
                  "right side for delta_" + std::to_string(n) + " is not a cocycle at " + first_nonzero(dpsi));
    S.set(n, solve_boundary(psi));
  }
  return S;
}

std::vector<Map> ainfty_defect(const AinftyStructure& S, int N) {
  Family d = [&](int n) { return S.delta(n); };
  std::vector<Map> out(N + 1);
  for (int m = 1; m <= N; ++m) out[m] = circ_component(S.P, m, 2, d, d);
  return out;
}

Report check_ainfty(const AinftyStructure& S, int N) {
  Report rep;
  auto res = ainfty_defect(S, N);
  for (int m = 1; m <= N; ++m)
    if (!res[m].is_zero()) rep.fail("N=" + std::to_string(m) + ": " + first_nonzero(res[m]));
  return rep;
}

Report check_weak_counit(const AinftyStructure& S) {
  Report rep;
  if (!S.P->augmented()) {
    rep.fail("complex has no augmentation");
    return rep;
  }
  if (S.max_n < 2) {
    rep.fail("delta_2 missing");
    return rep;
  }
  Map lhs = compose(Ops{&S.mu, &S.mu}, *S.delta(2)) - S.mu;
  if (!lhs.is_zero()) rep.fail("(mu⊗mu)delta_2 - mu: " + first_nonzero(lhs));
  for (int n = 3; n <= S.max_n; ++n) {
    Map r = compose(Ops(n, &S.mu), *S.delta(n));
    if (!r.is_zero()) rep.fail("mu^" + std::to_string(n) + " delta_" + std::to_string(n) + ": " + first_nonzero(r));
  }
  return rep;
}

}  // namespace hhc
