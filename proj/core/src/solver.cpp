#include "hhc/solver.hpp"

#include "hhc/errors.hpp"
#include "hhc/render.hpp"

#include <climits>

namespace hhc {

namespace {

Scalar sign_scalar(const Field& f, long long e) { return parity_sign(e) == 1 ? Scalar::one(f) : -Scalar::one(f); }

DiffSystem& diff_system(const Complex& P, int n, int j, std::optional<int> t, const SolveOptions& opts,
                        std::unique_ptr<DiffSystem>& scratch) {
  auto build = [&](DiffSystem& s) {
    s.ech = std::make_unique<Echelon>(P.field());
    P.for_each_basis(n, j, t, [&](const Key& k) {
      if (opts.allowed && !opts.allowed(k)) return;
      s.cols.id(k);
    });
    for (int c = 0; c < s.cols.size(); ++c) {
      Tensor x(n);
      x.push(s.cols.key(c), Scalar::one(P.field()));
      Tensor dx = tensor_differential(P, x);
      SparseVec col;
      for (auto& term : dx.terms()) col.push_back({s.rows.id(term.key), term.c});
      normalize_sparse(col);
      s.ech->add_column(col);
    }
  };
  if (opts.allowed && opts.allowed_tag == 0) {
    scratch = std::make_unique<DiffSystem>();
    build(*scratch);
    return *scratch;
  }
  auto key = std::make_tuple(n, j, t ? *t : INT_MIN, opts.allowed ? opts.allowed_tag : 0);
  auto& cache = P.cache().diff;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DiffSystem& s = cache[key];
  build(s);
  return s;
}

// x with D x = rhs in (P^{(x)n})_j, or nullopt with a residual description.
std::optional<Tensor> solve_tensor(const Complex& P, int n, int j, const Tensor& rhs, const SolveOptions& opts,
                                   std::string& residual) {
  Tensor x(n);
  if (rhs.is_zero()) return x;
  std::map<int, Tensor> pieces;
  for (auto& term : rhs.terms()) {
    int t = P.graded() ? P.key_internal(term.key) : 0;
    auto it = pieces.find(t);
    if (it == pieces.end()) it = pieces.emplace(t, Tensor(n)).first;
    it->second.push(term.key, term.c);
  }
  for (auto& [t, piece] : pieces) {
    piece.normalize();
    std::unique_ptr<DiffSystem> scratch;
    DiffSystem& s = diff_system(P, n, j, P.graded() ? std::optional<int>(t) : std::nullopt, opts, scratch);
    SparseVec v;
    for (auto& term : piece.terms()) v.push_back({s.rows.id(term.key), term.c});
    normalize_sparse(v);
    SparseVec res;
    auto sol = s.ech->solve(v, &res);
    if (!sol) {
      Tensor r(n);
      for (auto& [row, c] : res) r.push(s.rows.key(row), c);
      r.normalize();
      residual = render(P, r);
      return std::nullopt;
    }
    for (auto& [col, c] : *sol) x.push(s.cols.key(col), c);
  }
  x.normalize();
  return x;
}

}  // namespace

const std::optional<Tensor>& unit_lift(const ComplexPtr& P, int n) {
  auto& cache = P->cache().unit_lift;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const Algebra& A = P->algebra();
  Map mu = Map::augmentation(P);
  Ops ops(n, &mu);
  std::vector<Key> cands;
  const auto& top = P->in_degree(1);
  std::vector<int> idx(n, 0);
  while (!top.empty()) {
    Key k(2 * n + 1, A.unit());
    for (int i = 0; i < n; ++i) k[2 * i + 1] = top[idx[i]];
    cands.push_back(k);
    int p = n - 1;
    while (p >= 0 && ++idx[p] == static_cast<int>(top.size())) idx[p--] = 0;
    if (p < 0) break;
  }
  Echelon e(P->field());
  for (auto& k : cands) {
    Tensor x(n);
    x.push(k, Scalar::one(P->field()));
    Tensor m = apply_ops(*P, ops, x);
    SparseVec col;
    for (auto& t : m.terms()) col.push_back({t.key[0], t.c});
    e.add_column(col);
  }
  std::optional<Tensor> out;
  auto sol = e.solve({{A.unit(), Scalar::one(P->field())}});
  if (sol) {
    Tensor s(n);
    for (auto& [c, v] : *sol) s.push(cands[c], v);
    s.normalize();
    out = s;
  }
  return cache[n] = out;
}

namespace {

BoundaryResult solve_into_algebra(const Map& psi) {
  const ComplexPtr& P = psi.complex_ptr();
  int k = psi.degree() - 1;
  BoundaryResult res;
  res.phi = Map(P, 0, k);
  int src = -k;  // generators carrying phi
  int eq = -k - 1;
  if (src > 1) {
    // phi vanishes, so psi must.
    res.ok = psi.is_zero();
    if (!res.ok) {
      res.failed_degree = eq;
      res.witness = first_nonzero(psi);
    }
    return res;
  }
  if (src < P->lo()) {
    res.ok = true;
    return res;
  }
  if (eq < P->lo()) {
    // Nothing below constrains phi inside the window.
    res.ok = true;
    return res;
  }
  if (psi.lo() > eq) {
    res.ok = true;
    res.phi.restrict_lo(src + 1);
    return res;
  }
  HomSystem& sys = hom_system(P, k);
  SparseVec rhs;
  for (int e : P->in_degree(eq))
    for (auto& t : psi.at(e).terms()) rhs.push_back({sys.rows.id(Key{e, t.key[0]}), t.c});
  normalize_sparse(rhs);
  SparseVec residual;
  auto sol = sys.ech->solve(rhs, &residual);
  if (!sol) {
    res.ok = false;
    res.failed_degree = eq;
    std::string w;
    for (auto& [row, c] : residual) {
      const Key& key = sys.rows.key(row);
      w += (w.empty() ? "" : ", ") + P->gen(key[0]).label + ":" + P->algebra().label(key[1]) + "=" + c.str();
    }
    res.witness = w;
    return res;
  }
  res.phi = hom_from_coordinates(P, sys, *sol);
  res.ok = true;
  return res;
}

}  // namespace

HomSystem& hom_system(const ComplexPtr& P, int k) {
  auto& cache = P->cache().hom;
  auto key = std::make_pair(k, 0);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  HomSystem& s = cache[key];
  s.degree = k;
  s.ech = std::make_unique<Echelon>(P->field());
  const Algebra& A = P->algebra();
  int src = -k;
  int eq = -k - 1;
  s.complete = eq >= P->lo();
  if (src > 1 || src < P->lo()) return s;
  for (int h : P->in_degree(src))
    for (int b = 0; b < A.dim(); ++b) {
      s.col_id[{h, b}] = static_cast<int>(s.cols.size());
      s.cols.push_back({h, b});
    }
  std::vector<SparseVec> cols(s.cols.size());
  Scalar sg = -sign_scalar(P->field(), k);
  if (s.complete) {
    for (int e : P->in_degree(eq)) {
      for (auto& t : P->d(e).terms()) {
        int a = t.key[0], h = t.key[1], a2 = t.key[2];
        for (int b = 0; b < A.dim(); ++b) {
          SparseVec& col = cols[s.col_id.at({h, b})];
          for (auto& [ab, c1] : A.product(a, b))
            for (auto& [abc, c2] : A.product(ab, a2))
              col.push_back({s.rows.id(Key{e, abc}), sg * t.c * c1 * c2});
        }
      }
    }
  }
  for (auto& col : cols) {
    normalize_sparse(col);
    s.ech->add_column(col);
  }
  s.raw = std::move(cols);
  return s;
}

SparseVec hom_coordinates(HomSystem& sys, const Map& f) {
  SparseVec v;
  const Complex& P = f.complex();
  for (int h : P.in_degree(-sys.degree))
    for (auto& t : f.at(h).terms()) v.push_back({sys.col_id.at({h, t.key[0]}), t.c});
  normalize_sparse(v);
  return v;
}

Map hom_from_coordinates(const ComplexPtr& P, const HomSystem& sys, const SparseVec& v) {
  Map m(P, 0, sys.degree);
  std::map<int, Tensor> vals;
  for (auto& [c, s] : v) {
    auto [h, b] = sys.cols[c];
    auto it = vals.find(h);
    if (it == vals.end()) it = vals.emplace(h, Tensor(0)).first;
    it->second.push(Key{b}, s);
  }
  for (auto& [h, t] : vals) m.set(h, t);
  return m;
}

BoundaryResult try_solve_boundary(const Map& psi, const SolveOptions& opts) {
  if (psi.arity() == 0) {
    if (opts.prescribed || opts.allowed) throw Error(ErrorKind::ShapeMismatch, "options unsupported for maps into A");
    return solve_into_algebra(psi);
  }
  const ComplexPtr& S = psi.complex_ptr();
  const ComplexPtr& T = psi.target_ptr();
  const Field& F = S->field();
  int n = psi.arity();
  int k = psi.degree() - 1;
  BoundaryResult res;
  res.phi = Map(S, n, k, T);
  Map correction(S, n, k, T);

  // Remove the part of psi seen by mu^{(x)n}, which the greedy pass cannot absorb.
  Map mu = Map::augmentation(T);
  Map chi = compose(Ops(n, &mu), psi);
  if (!chi.is_zero()) {
    BoundaryResult eta = solve_into_algebra(chi.scaled(sign_scalar(F, n)));
    if (!eta.ok) {
      res.failed_degree = eta.failed_degree;
      res.witness = "mu-image not a coboundary: " + eta.witness;
      return res;
    }
    const auto& s1 = unit_lift(T, n);
    if (!s1) throw Error(ErrorKind::NotAugmented, "augmentation is not surjective on the top degree");
    correction.restrict_lo(eta.phi.lo());
    for (int g = 0; g < S->num_generators(); ++g) {
      if (!correction.certified(g)) continue;
      Tensor v(n);
      for (auto& t : eta.phi.at(g).terms()) v.add_scaled(left_multiply(S->algebra(), t.key[0], *s1), t.c);
      correction.set(g, v);
    }
  }
  Map target = psi - hom_differential(correction);

  Scalar sk = sign_scalar(F, k);
  Ops op{&res.phi};
  std::optional<int> cap = S->algebra().truncation();
  for (int deg = 1; deg >= S->lo(); --deg) {
    if (deg < target.lo()) {
      res.phi.restrict_lo(deg + 1);
      break;
    }
    int j = deg + k;
    bool stop = false;
    for (int g : S->in_degree(deg)) {
      if (opts.prescribed && deg >= opts.prescribed_from) {
        res.phi.set(g, opts.prescribed->at(g) - correction.at(g));
        continue;
      }
      Tensor rhs = target.at(g);
      rhs.add_scaled(apply_ops(*S, op, S->d(g)), sk);
      if (cap) {
        bool over = false;
        for (auto& t : rhs.terms()) over = over || T->key_internal(t.key) > *cap;
        if (over) {
          stop = true;
          break;
        }
      }
      std::string residual;
      auto x = solve_tensor(*T, n, j, rhs, opts, residual);
      if (!x) {
        if (!T->tensor_degree_complete(n, j)) {
          stop = true;
          break;
        }
        res.failed_degree = deg;
        res.witness = S->gen(g).label + ": " + residual;
        return res;
      }
      res.phi.set(g, std::move(*x));
    }
    if (stop) {
      res.phi.restrict_lo(deg + 1);
      break;
    }
  }
  res.phi += correction;
  res.ok = true;
  return res;
}

Map solve_boundary(const Map& psi, const SolveOptions& opts) {
  BoundaryResult r = try_solve_boundary(psi, opts);
  if (!r.ok)
    throw Error(ErrorKind::NotACoboundary,
                "no solution at degree " + std::to_string(r.failed_degree) + " (residual " + r.witness + ")");
  return r.phi;
}

HomotopyResult homotopic(const Map& f, const Map& g) {
  HomotopyResult out;
  BoundaryResult r = try_solve_boundary(f - g);
  out.yes = r.ok;
  if (r.ok)
    out.h = r.phi;
  else
    out.residual = "degree " + std::to_string(r.failed_degree) + ": " + r.witness;
  return out;
}

void require_certified(const Map& f, int lo, const std::string& what) {
  if (f.lo() > lo)
    throw Error(ErrorKind::WindowExhausted,
                what + " certified only down to degree " + std::to_string(f.lo()) + ", need " + std::to_string(lo));
}

}  // namespace hhc
