#include "hhc/coderivation.hpp"

#include "hhc/errors.hpp"
#include "hhc/solver.hpp"

#include <algorithm>
#include <climits>

namespace hhc {

namespace {

Scalar sign(const Field& f, long long e) { return parity_sign(e) == 1 ? Scalar::one(f) : -Scalar::one(f); }

constexpr int kUnbounded = INT_MAX / 4;

int bound(const Tuple& t) { return t.exact_tail() ? kUnbounded : t.max_n(); }

// Result size for a computation whose component n needs arities up to n + shift of t.
struct Top {
  int top = kUnbounded;
  bool exact = true;
  void need(const Tuple& t, int shift) {
    if (!t.exact_tail()) {
      exact = false;
      top = std::min(top, t.max_n() - shift);
    }
  }
  void need_structure(const AinftyStructure& S, int shift) {
    if (!S.exact_tail) {
      exact = false;
      top = std::min(top, S.max_n - shift);
    }
  }
  // natural: the last possibly nonzero component when every input is exact.
  int finish(int natural, int cap) {
    int t = exact ? natural : top;
    if (cap >= 0 && cap < t) {
      t = cap;
      exact = false;
    }
    return std::max(t, -1);
  }
};

// Every way of placing l operators among m slots with arities summing to total.
void for_each_placement(int m, int l, int total, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  std::vector<int> pos(l), ar(l);
  std::function<void(int, int)> arities = [&](int k, int left) {
    if (k == l - 1) {
      ar[k] = left;
      fn(pos, ar);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      ar[k] = x;
      arities(k + 1, left - x);
    }
  };
  std::function<void(int, int)> places = [&](int k, int from) {
    if (k == l) {
      arities(0, total);
      return;
    }
    for (int p = from; p <= m - (l - k); ++p) {
      pos[k] = p;
      places(k + 1, p + 1);
    }
  };
  places(0, 0);
}

// Component n of sum (1^{i0} (x) (f1)_{j1} (x) ... (x) (fl)_{jl} (x) 1^{il}) h_{sum i + l}.
Map placement_component(const ComplexPtr& P, int n, int degree, const std::vector<const Tuple*>& fs, const Family& h) {
  int l = static_cast<int>(fs.size());
  Map out(P, n, degree);
  for (int m = l; m <= n + l; ++m) {
    const Map* hm = h(m);
    if (!hm) continue;
    for_each_placement(m, l, n - (m - l), [&](const std::vector<int>& pos, const std::vector<int>& ar) {
      Ops ops(m, nullptr);
      for (int k = 0; k < l; ++k) {
        const Map* fk = fs[k]->comp(ar[k]);
        if (!fk) return;
        ops[pos[k]] = fk;
      }
      out += compose(ops, *hm);
    });
  }
  return out;
}

}  // namespace

Tuple::Tuple(ComplexPtr P, int degree, int max_n, bool exact_tail)
    : P_(std::move(P)), degree_(degree), exact_tail_(exact_tail) {
  for (int n = 0; n <= max_n; ++n) comps_.emplace_back(P_, n, degree_);
}

Tuple Tuple::from_structure(const AinftyStructure& S) {
  Tuple t(S.P, 1, S.max_n, S.exact_tail);
  for (int n = 1; n <= S.max_n; ++n) t.comps_[n] = S.deltas[n];
  return t;
}

const Map* Tuple::comp(int n) const {
  if (n < 0) return nullptr;
  if (n <= max_n()) {
    const Map& m = comps_[n];
    if (m.lo() == P_->lo() && m.is_zero()) return nullptr;
    return &m;
  }
  if (exact_tail_) return nullptr;
  throw Error(ErrorKind::WindowExhausted, "component " + std::to_string(n) + " is beyond max_n = " + std::to_string(max_n()));
}

Family Tuple::family() const {
  return [this](int n) { return comp(n); };
}

int Tuple::lo() const {
  int lo = P_->lo();
  for (auto& m : comps_) lo = std::max(lo, m.lo());
  return lo;
}

Tuple Tuple::truncated(int n) const {
  Tuple t(P_, degree_, std::min(n, max_n()), exact_tail_ && n >= max_n());
  for (int i = 0; i <= t.max_n(); ++i) t.comps_[i] = comps_[i];
  return t;
}

Tuple Tuple::operator+(const Tuple& o) const {
  if (P_ != o.P_ || degree_ != o.degree_) throw Error(ErrorKind::ShapeMismatch, "tuples differ in complex or degree");
  bool exact = exact_tail_ && o.exact_tail_;
  int top = exact ? std::max(max_n(), o.max_n()) : std::min(bound(*this), bound(o));
  Tuple r(P_, degree_, top, exact);
  for (int n = 0; n <= top; ++n) {
    if (n <= max_n()) r.comps_[n] += comps_[n];
    if (n <= o.max_n()) r.comps_[n] += o.comps_[n];
  }
  return r;
}

Tuple Tuple::scaled(const Scalar& c) const {
  Tuple r = *this;
  for (auto& m : r.comps_) m = m.scaled(c);
  return r;
}

Tuple Tuple::operator-(const Tuple& o) const { return *this + o.scaled(-Scalar::one(P_->field())); }

Tuple circ(const Tuple& f, const Tuple& g, int cap) {
  if (f.complex_ptr() != g.complex_ptr()) throw Error(ErrorKind::ShapeMismatch, "tuples live on different complexes");
  Top t;
  t.need(f, 0);
  t.need(g, f.comp(0) ? 1 : 0);
  int top = t.finish(f.max_n() + g.max_n() - 1, cap);
  Tuple r(f.complex_ptr(), f.degree() + g.degree(), std::max(top, 0), t.exact);
  for (int i = 0; i <= top; ++i) r[i] = circ_component(f.complex_ptr(), i, r.degree(), f.family(), g.family());
  return r;
}

Tuple bracket(const Tuple& f, const Tuple& g, int cap) {
  Scalar s = sign(f.complex_ptr()->field(), static_cast<long long>(f.degree()) * g.degree());
  return circ(f, g, cap) - circ(g, f, cap).scaled(s);
}

Tuple m_l_h(const std::vector<const Tuple*>& fs, const Tuple& h, int cap) {
  int l = static_cast<int>(fs.size());
  if (l < 2) throw Error(ErrorKind::ShapeMismatch, "m_l needs at least two arguments");
  int degree = h.degree();
  int natural = h.max_n() - l;
  Top t;
  for (auto* f : fs) {
    degree += f->degree();
    natural += f->max_n();
    t.need(*f, 0);
  }
  t.need(h, l);
  int top = t.finish(natural, cap);
  Tuple r(h.complex_ptr(), degree, std::max(top, 0), t.exact);
  for (int n = 0; n <= top; ++n) r[n] = placement_component(h.complex_ptr(), n, degree, fs, h.family());
  return r;
}

Tuple m_l(const AinftyStructure& S, const std::vector<const Tuple*>& fs, int cap) {
  Tuple r = m_l_h(fs, Tuple::from_structure(S), cap);
  long long e = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) e += static_cast<long long>(i) * fs[i]->degree();
  return parity_sign(e) == 1 ? r : r.scaled(-Scalar::one(S.P->field()));
}

Tuple cup(const AinftyStructure& S, const Tuple& f, const Tuple& g, int cap) { return m_l(S, {&f, &g}, cap); }

Map partial_delta_bracket(const AinftyStructure& S, const Tuple& a, int i) {
  Family d = [&](int n) { return S.delta(n); };
  Family part = [&](int n) -> const Map* { return n < i ? a.comp(n) : nullptr; };
  int deg = a.degree() + 1;
  Map r = circ_component(S.P, i, deg, d, part);
  r -= circ_component(S.P, i, deg, part, d).scaled(sign(S.P->field(), a.degree()));
  return r;
}

Tuple delta_bracket(const AinftyStructure& S, const Tuple& f, int cap) { return bracket(Tuple::from_structure(S), f, cap); }

std::vector<Map> coderivation_defect(const AinftyStructure& S, const Tuple& f, int N) {
  Tuple b = delta_bracket(S, f, N);
  if (b.max_n() < N && !b.exact_tail())
    throw Error(ErrorKind::WindowExhausted, "defect known only through N = " + std::to_string(b.max_n()));
  std::vector<Map> out;
  for (int n = 0; n <= N; ++n) out.push_back(n <= b.max_n() ? b[n] : Map(S.P, n, f.degree() + 1));
  return out;
}

Report check_coderivation(const AinftyStructure& S, const Tuple& f, int N) {
  Report rep;
  auto res = coderivation_defect(S, f, N);
  for (int n = 0; n <= N; ++n)
    if (!res[n].is_zero()) rep.fail("N=" + std::to_string(n) + ": " + first_nonzero(res[n]));
  return rep;
}

Tuple lift_cocycle(const AinftyStructure& S, const Map& f, int max_n) {
  if (f.arity() != 0 || f.complex_ptr() != S.P) throw Error(ErrorKind::ShapeMismatch, "lift expects a cochain P -> A");
  Map df = hom_differential(f);
  if (!df.is_zero()) throw Error(ErrorKind::NotACocycle, "d f != 0 at " + first_nonzero(df));
  Tuple a(S.P, f.degree(), max_n);
  a[0] = f;
  for (int i = 1; i <= max_n; ++i) {
    Map phi = partial_delta_bracket(S, a, i);
    if (i % 2 == 0) {
      a[i - 1] += compose(amplified(i - 1, &S.mu, 0), phi);
      phi = partial_delta_bracket(S, a, i);
    }
    a[i] = solve_boundary(-phi);
  }
  return a;
}

InnerResult is_inner(const AinftyStructure& S, const Tuple& alpha) {
  InnerResult res;
  int N = alpha.max_n();
  Tuple beta(S.P, alpha.degree() - 1, N);
  BoundaryResult b0 = try_solve_boundary(alpha[0]);
  if (!b0.ok) {
    res.witness = "alpha_0 is not a coboundary: " + b0.witness;
    return res;
  }
  beta[0] = b0.phi;
  for (int m = 1; m <= N; ++m) {
    Map r = alpha[m] - partial_delta_bracket(S, beta, m);
    if (m % 2 == 0) {
      beta[m - 1] -= compose(amplified(m - 1, &S.mu, 0), r);
      r = alpha[m] - partial_delta_bracket(S, beta, m);
    }
    BoundaryResult bm = try_solve_boundary(r);
    if (!bm.ok) {
      res.witness = "component " + std::to_string(m) + ": " + bm.witness;
      return res;
    }
    beta[m] = bm.phi;
  }
  Tuple check = delta_bracket(S, beta, N) - alpha;
  for (int m = 0; m <= N; ++m)
    if (!check[m].is_zero()) {
      res.witness = "[delta, beta] differs from alpha in component " + std::to_string(m) + ": " + first_nonzero(check[m]);
      return res;
    }
  res.yes = true;
  res.beta = std::move(beta);
  return res;
}

Map psi(const AinftyStructure& S, int t, int r) {
  if (t < 1) throw Error(ErrorKind::ShapeMismatch, "psi needs t >= 1");
  const Map* d = S.delta(t + 1);
  const Field& F = S.P->field();
  if (t == 1 && r % 2 != 0) {
    Map out = compose(Ops{nullptr, &S.mu}, *d) - compose(Ops{&S.mu, nullptr}, *d);
    return out - Map::identity(S.P);
  }
  Map out(S.P, 1, 1 - t);
  if (!d) return out;
  for (int u = 0; u <= t; ++u) {
    Ops ops(t + 1, &S.mu);
    ops[u] = nullptr;
    out += compose(ops, *d).scaled(sign(F, static_cast<long long>(r) * u));
  }
  return out;
}

std::vector<Map> phi_family(const AinftyStructure& S, int t) {
  std::vector<Map> phi(t + 1);
  for (int k = 1; k <= t; ++k) {
    Map rhs = psi(S, k, k - 1);
    for (int s = 1; s < k; ++s) rhs -= compose(psi(S, s, k - 1), phi[k - s]);
    phi[k] = solve_boundary(rhs);
  }
  return phi;
}

Map named_phi(const AinftyStructure& S) {
  Map u = solve_boundary(psi(S, 1, 1) - Map::identity(S.P));
  return psi(S, 2, 2) - compose(psi(S, 1, 0), u);
}

Report homotopy_lifting_check(const AinftyStructure& S, const Map& f, const Map& phi_f) {
  Report rep;
  const Map& d2 = *S.delta(2);
  Map want = compose(Ops{&f, nullptr}, d2) + compose(Ops{nullptr, &f}, d2);
  Map got = hom_differential(phi_f);
  Map diff = got - want;
  if (!diff.is_zero()) rep.fail("d phi_f != (f⊗1+1⊗f)delta_2 at " + first_nonzero(diff));
  Map phi = solve_boundary(psi(S, 1, 0));
  Map c = compose(S.mu, phi_f) + compose(f, phi);
  BoundaryResult h = try_solve_boundary(c);
  if (!h.ok) rep.fail("mu phi_f + f phi is not null-homotopic: " + h.witness);
  return rep;
}

}  // namespace hhc
