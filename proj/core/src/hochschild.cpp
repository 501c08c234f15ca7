#include "hhc/hochschild.hpp"

#include "hhc/errors.hpp"
#include "hhc/resolutions.hpp"
#include "hhc/solver.hpp"

namespace hhc {

namespace {

Scalar sign(const Field& f, long long e) { return parity_sign(e) == 1 ? Scalar::one(f) : -Scalar::one(f); }

int cochain_arity(const Map& f) { return f.degree() + 1; }

AlgebraElement eval_word(const Complex& bar, const Map& f, const std::vector<int>& w) {
  int g = bar_generator(bar, w);
  if (g < 0) throw Error(ErrorKind::WindowExhausted, "word outside the bar window");
  Terms t;
  for (auto& term : f.at(g).terms()) t.push_back({term.key[0], term.c});
  return AlgebraElement(std::move(t));
}

// f o_i g on a word, i counted from 1.
AlgebraElement insert_at(const Complex& bar, const Map& f, const Map& g, int i, const std::vector<int>& w) {
  int m = cochain_arity(g);
  std::vector<int> inner(w.begin() + (i - 1), w.begin() + (i - 1 + m));
  AlgebraElement x = eval_word(bar, g, inner);
  AlgebraElement out;
  for (auto& [b, c] : x.terms()) {
    std::vector<int> v(w.begin(), w.begin() + (i - 1));
    v.push_back(b);
    v.insert(v.end(), w.begin() + (i - 1 + m), w.end());
    out = out + eval_word(bar, f, v).scaled(c);
  }
  return out;
}

AlgebraElement circle(const Complex& bar, const Map& f, const Map& g, const std::vector<int>& w) {
  int n = cochain_arity(f), m = cochain_arity(g);
  const Field& F = bar.field();
  AlgebraElement out;
  for (int i = 1; i <= n; ++i)
    out = out + insert_at(bar, f, g, i, w).scaled(sign(F, static_cast<long long>(i - 1) * (m - 1)));
  return out;
}

}  // namespace

HHBasis hh_basis(const ComplexPtr& P, int n) {
  int k = cochain_degree(n);
  HHBasis B;
  B.P = P;
  B.n = n;
  if (1 - n > 1) return B;
  if (1 - n < P->lo() || -n < P->lo())
    throw Error(ErrorKind::WindowExhausted, "HH^" + std::to_string(n) + " needs degrees down to " + std::to_string(-n));
  HomSystem& sys = hom_system(P, k);
  HomSystem& prev = hom_system(P, k - 1);
  B.ech = std::make_shared<Echelon>(P->field());
  for (auto& col : prev.raw) {
    SparseVec v;
    for (auto& [row, c] : col) {
      const Key& key = prev.rows.key(row);
      v.push_back({sys.col_id.at({key[0], key[1]}), c});
    }
    normalize_sparse(v);
    B.ech->add_column(v);
    B.col_rep.push_back(-1);
  }
  for (auto& z : sys.ech->kernel()) {
    bool fresh = B.ech->add_column(z);
    B.col_rep.push_back(fresh ? B.dim() : -1);
    if (fresh) B.reps.push_back(hom_from_coordinates(P, sys, z));
  }
  return B;
}

std::vector<Scalar> hh_coordinates(const HHBasis& B, const Map& f) {
  Map df = hom_differential(f);
  if (!df.is_zero()) throw Error(ErrorKind::NotACocycle, "d f != 0 at " + first_nonzero(df));
  HomSystem& sys = hom_system(B.P, cochain_degree(B.n));
  auto sol = B.ech->solve(hom_coordinates(sys, f));
  if (!sol) throw Error(ErrorKind::InternalInconsistency, "cocycle outside the span of the HH basis");
  std::vector<Scalar> out(B.dim(), Scalar::zero(B.P->field()));
  for (auto& [c, v] : *sol)
    if (B.col_rep[c] >= 0) out[B.col_rep[c]] = v;
  return out;
}

bool same_class(const Map& a, const Map& b) { return try_solve_boundary(a - b).ok; }

Map gb_bracket(const AinftyStructure& S, const Map& f, const Map& g, int lift_depth) {
  Tuple af = lift_cocycle(S, f, lift_depth);
  Tuple ag = lift_cocycle(S, g, lift_depth);
  return bracket(af, ag, 0)[0];
}

Map gb_cup(const AinftyStructure& S, const Map& f, const Map& g) { return compose(Ops{&f, &g}, *S.delta(2)); }

Map bar_cochain(const ComplexPtr& bar, int n, const std::function<AlgebraElement(const std::vector<int>&)>& value) {
  if (1 - n < bar->lo()) throw Error(ErrorKind::WindowExhausted, "bar window too small for HH^" + std::to_string(n));
  Map out(bar, 0, cochain_degree(n));
  for (int g : bar->in_degree(1 - n)) {
    Tensor t(0);
    AlgebraElement v = value(bar_word(*bar, g));
    for (auto& [b, c] : v.terms()) t.push(Key{b}, c);
    out.set(g, std::move(t));
  }
  return out;
}

Map bar_oracle_bracket(const ComplexPtr& bar, const Map& f, const Map& g) {
  int n = cochain_arity(f), m = cochain_arity(g);
  Scalar s = sign(bar->field(), static_cast<long long>(n - 1) * (m - 1));
  return bar_cochain(bar, n + m - 1, [&](const std::vector<int>& w) {
    return circle(*bar, f, g, w) - circle(*bar, g, f, w).scaled(s);
  });
}

Map bar_oracle_cup(const ComplexPtr& bar, const Map& f, const Map& g) {
  int n = cochain_arity(f), m = cochain_arity(g);
  const Algebra& A = bar->algebra();
  return bar_cochain(bar, n + m, [&](const std::vector<int>& w) {
    std::vector<int> left(w.begin(), w.begin() + n), right(w.begin() + n, w.end());
    return multiply(A, eval_word(*bar, f, left), eval_word(*bar, g, right));
  });
}

}  // namespace hhc
