#include "hhc/resolutions.hpp"

#include "hhc/errors.hpp"
#include "hhc/linalg.hpp"
#include "hhc/serialize.hpp"
#include "hhc/solver.hpp"

#include <map>

namespace hhc {

namespace {

std::string bar_label(const Algebra& A, const std::vector<int>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + A.label(w[i]);
  return s + "]";
}

Scalar sign(const Field& f, long long e) { return parity_sign(e) == 1 ? Scalar::one(f) : -Scalar::one(f); }

}  // namespace

ComplexPtr bar_resolution(std::shared_ptr<const Algebra> A, int N) {
  if (N < 0) throw Error(ErrorKind::ShapeMismatch, "window must be nonnegative");
  if (A->truncation() && N > *A->truncation())
    throw Error(ErrorKind::WindowTooDeep, "window " + std::to_string(N) + " exceeds the internal truncation " +
                                              std::to_string(*A->truncation()));
  auto P = std::make_shared<Complex>(A);
  P->name = "bar";
  const Field& F = A->field();
  int one = A->unit();
  std::vector<std::vector<int>> words{{}};
  std::vector<std::vector<int>> level{{}};
  P->add_generator("[]", 1, 0);
  for (int m = 1; m <= N; ++m) {
    std::vector<std::vector<int>> next;
    for (auto& w : level)
      for (int a = 0; a < A->dim(); ++a) {
        auto v = w;
        v.push_back(a);
        int internal = 0;
        for (int b : v) internal += A->degree(b);
        P->add_generator(bar_label(*A, v), 1 - m, internal);
        next.push_back(std::move(v));
      }
    words.insert(words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  P->set_lo(1 - N);
  auto id = [&](const std::vector<int>& w) { return P->find(bar_label(*A, w)); };
  for (int g = 0; g < P->num_generators(); ++g) {
    const auto& w = words[g];
    int m = static_cast<int>(w.size());
    Tensor d(1);
    if (m > 0) {
      d.push(Key{w[0], id({w.begin() + 1, w.end()}), one}, Scalar::one(F));
      for (int i = 1; i < m; ++i) {
        for (auto& [ab, c] : A->product(w[i - 1], w[i])) {
          std::vector<int> v(w.begin(), w.begin() + i - 1);
          v.push_back(ab);
          v.insert(v.end(), w.begin() + i + 1, w.end());
          d.push(Key{one, id(v), one}, sign(F, i) * c);
        }
      }
      d.push(Key{one, id({w.begin(), w.end() - 1}), w[m - 1]}, sign(F, m));
    }
    P->set_d(g, std::move(d));
  }
  Tensor mu(0);
  mu.push(Key{one}, -Scalar::one(F));
  P->set_mu(0, std::move(mu));
  return P;
}

std::vector<int> bar_word(const Complex& bar, int g) {
  const Algebra& A = bar.algebra();
  const std::string& lab = bar.gen(g).label;
  std::vector<int> w;
  std::string inner = lab.substr(1, lab.size() - 2);
  if (inner.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    std::size_t cut = inner.find('|', pos);
    w.push_back(A.index_of(inner.substr(pos, cut == std::string::npos ? std::string::npos : cut - pos)));
    if (cut == std::string::npos) break;
    pos = cut + 1;
  }
  return w;
}

int bar_generator(const Complex& bar, const std::vector<int>& w) { return bar.find(bar_label(bar.algebra(), w)); }

AinftyStructure bar_structure(const ComplexPtr& P) {
  AinftyStructure S(P, 2, true);
  const Field& F = P->field();
  int one = P->algebra().unit();
  Map d2(P, 2, 1);
  for (int g = 0; g < P->num_generators(); ++g) {
    auto w = bar_word(*P, g);
    int m = static_cast<int>(w.size());
    auto id = [&](int from, int to) { return bar_generator(*P, {w.begin() + from, w.begin() + to}); };
    Tensor v(2);
    for (int i = 0; i <= m; ++i) v.push(Key{one, id(0, i), one, id(i, m), one}, sign(F, i));
    d2.set(g, std::move(v));
  }
  S.set(2, std::move(d2));
  return S;
}

Preset xn_resolution(const Field& f, int n, int N) {
  if (n < 2) throw Error(ErrorKind::ShapeMismatch, "xn preset needs n >= 2");
  if (N < 0) throw Error(ErrorKind::ShapeMismatch, "window must be nonnegative");
  auto A = std::make_shared<const Algebra>(truncated_polynomial_algebra(f, n));
  auto P = std::make_shared<Complex>(A);
  P->name = "xn:" + std::to_string(n);
  for (int i = 0; i <= N; ++i) P->add_generator("e" + std::to_string(i), 1 - i, (i / 2) * n + (i % 2));
  P->set_lo(1 - N);
  Scalar one = Scalar::one(f);
  auto e = [](int i) { return i; };
  for (int i = 1; i <= N; ++i) {
    Tensor d(1);
    if (i % 2) {
      d.push(Key{1, e(i - 1), 0}, one);
      d.push(Key{0, e(i - 1), 1}, -one);
    } else {
      for (int a = 0; a < n; ++a) d.push(Key{a, e(i - 1), n - 1 - a}, one);
    }
    P->set_d(i, std::move(d));
  }
  Tensor mu(0);
  mu.push(Key{0}, -one);
  P->set_mu(0, std::move(mu));

  AinftyStructure S(P, n, true);
  Map d2(P, 2, 1);
  for (int i = 0; i <= N; ++i) {
    Tensor v(2);
    if (i % 2 == 0) {
      int h = i / 2;
      for (int j = 0; j <= h; ++j) v.push(Key{0, e(2 * j), 0, e(2 * (h - j)), 0}, one);
      for (int j = 0; j <= h; ++j) {
        int l = h - j;
        if (l == 0) continue;  // e_{-1} = 0
        for (int a = 0; a <= n - 2; ++a)
          for (int b = 0; a + b <= n - 2; ++b) {
            int c = n - 2 - a - b;
            v.push(Key{a, e(2 * j + 1), b, e(2 * l - 1), c}, -one);
          }
      }
    } else {
      int h = i / 2;
      for (int j = 0; j <= h; ++j) {
        v.push(Key{0, e(2 * j), 0, e(2 * (h - j) + 1), 0}, one);
        v.push(Key{0, e(2 * j + 1), 0, e(2 * (h - j)), 0}, -one);
      }
    }
    d2.set(i, std::move(v));
  }
  S.set(2, std::move(d2));
  for (int m = 3; m <= n; ++m) {
    Map dm(P, m, 1);
    Scalar sg = sign(f, m + 1);
    for (int i = 0; 2 * i <= N; ++i) {
      if (i == 0) continue;
      Tensor v(m);
      // j_1 + ... + j_m = i - 1 and a_1 + ... + a_{m+1} = n - m
      std::vector<int> js(m, 0), as(m + 1, 0);
      std::function<void(int, int)> walk_a;
      std::function<void(int, int)> walk_j = [&](int k, int left) {
        if (k == m - 1) {
          js[k] = left;
          walk_a(0, n - m);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          js[k] = x;
          walk_j(k + 1, left - x);
        }
      };
      walk_a = [&](int k, int left) {
        if (k == m) {
          as[k] = left;
          Key key;
          for (int q = 0; q < m; ++q) {
            key.push_back(as[q]);
            key.push_back(e(2 * js[q] + 1));
          }
          key.push_back(as[m]);
          v.push(std::move(key), sg);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          as[k] = x;
          walk_a(k + 1, left - x);
        }
      };
      walk_j(0, i - 1);
      dm.set(2 * i, std::move(v));
    }
    S.set(m, std::move(dm));
  }
  return {P, std::move(S)};
}

ComplexPtr custom_resolution(const std::string& json_text, int N, const std::string& base_dir) {
  ComplexPtr P = parse_complex(json_text, N, base_dir);
  validate_complex(*P);
  return P;
}

void validate_complex(const Complex& P) {
  const Algebra& A = P.algebra();
  const Field& F = A.field();
  if (!P.augmented()) throw Error(ErrorKind::NotAugmented, "no augmentation given");
  Map d = Map::differential(std::shared_ptr<const Complex>(&P, [](const Complex*) {}));
  for (int g = 0; g < P.num_generators(); ++g) {
    Tensor dd = apply_ops(P, Ops{&d}, P.d(g));
    if (!dd.is_zero()) throw Error(ErrorKind::NotExact, "d∘d != 0 on '" + P.gen(g).label + "'");
  }
  for (int g : P.in_degree(0)) {
    Tensor m(0);
    for (auto& t : P.d(g).terms()) {
      const Tensor& mu = P.mu(t.key[1]);
      for (auto& u : mu.terms())
        for (auto& [ab, c1] : A.product(t.key[0], u.key[0]))
          for (auto& [abc, c2] : A.product(ab, t.key[2])) m.push(Key{abc}, t.c * u.c * c1 * c2);
    }
    m.normalize();
    if (!m.is_zero()) throw Error(ErrorKind::NotAugmented, "mu∘d != 0 on '" + P.gen(g).label + "'");
  }

  // Vector-space bases of each P_j split by internal degree.
  std::optional<int> cap = A.truncation();
  auto internal_of = [&](int a, int g, int b) { return P.graded() ? A.degree(a) + P.gen(g).internal + A.degree(b) : 0; };
  std::map<int, std::map<int, std::vector<Key>>> space;  // t -> degree -> triples
  for (int g = 0; g < P.num_generators(); ++g)
    for (int a = 0; a < A.dim(); ++a)
      for (int b = 0; b < A.dim(); ++b) {
        int t = internal_of(a, g, b);
        if (cap && t > *cap) continue;
        space[t][P.gen(g).degree].push_back(Key{a, g, b});
      }
  std::map<int, int> alg_dim;
  for (int a = 0; a < A.dim(); ++a) alg_dim[P.graded() ? A.degree(a) : 0]++;
  for (auto& [t, dim] : alg_dim)
    if (!space.count(t)) space[t];

  for (auto& [t, by_deg] : space) {
    // rank of the outgoing map from P_j (j = 1 uses mu)
    std::map<int, int> rank;
    for (int j = 1; j >= P.lo(); --j) {
      Echelon ech(F, false);
      KeyIndex rows;
      auto it = by_deg.find(j);
      if (it == by_deg.end()) {
        rank[j] = 0;
        continue;
      }
      for (const Key& k : it->second) {
        Tensor x(1);
        x.push(k, Scalar::one(F));
        Tensor img = j == 1 ? Tensor(0) : Tensor(1);
        if (j == 1) {
          for (auto& u : P.mu(k[1]).terms())
            for (auto& [ab, c1] : A.product(k[0], u.key[0]))
              for (auto& [abc, c2] : A.product(ab, k[2])) img.push(Key{abc}, u.c * c1 * c2);
          img.normalize();
        } else {
          img = right_multiply(A, left_multiply(A, k[0], P.d(k[1])), k[2]);
        }
        SparseVec col;
        for (auto& term : img.terms()) col.push_back({rows.id(term.key), term.c});
        normalize_sparse(col);
        ech.add_column(col);
      }
      rank[j] = ech.rank();
    }
    int adim = alg_dim.count(t) ? alg_dim[t] : 0;
    if (rank[1] != adim)
      throw Error(ErrorKind::NotExact, "augmentation not surjective at internal degree " + std::to_string(t));
    for (int j = 1; j > P.lo(); --j) {
      int dimj = by_deg.count(j) ? static_cast<int>(by_deg[j].size()) : 0;
      int h = dimj - rank[j] - rank[j - 1];
      if (h != 0)
        throw Error(ErrorKind::NotExact, "homology of dimension " + std::to_string(h) + " in degree " + std::to_string(j) +
                                             (P.graded() ? ", internal degree " + std::to_string(t) : ""));
    }
  }
}

Map comparison_map(const ComplexPtr& P, const ComplexPtr& Q) {
  if (!P->augmented() || !Q->augmented()) throw Error(ErrorKind::NotAugmented, "comparison needs augmentations");
  if (P->algebra_ptr() != Q->algebra_ptr())
    throw Error(ErrorKind::ShapeMismatch, "complexes over different algebras");
  const auto& s1 = unit_lift(Q, 1);
  if (!s1) throw Error(ErrorKind::NotAugmented, "augmentation of the target is not surjective");
  Map top(P, 1, 0, Q);
  for (int g : P->in_degree(1)) {
    Tensor v(1);
    for (auto& t : P->mu(g).terms()) v.add_scaled(left_multiply(P->algebra(), t.key[0], *s1), t.c);
    top.set(g, v);
  }
  SolveOptions opts;
  opts.prescribed = &top;
  opts.prescribed_from = 1;
  BoundaryResult r = try_solve_boundary(Map(P, 1, 1, Q), opts);
  if (!r.ok) throw Error(ErrorKind::InternalInconsistency, "comparison map failed at degree " + std::to_string(r.failed_degree));
  return r.phi;
}

Map transport(const Map& f, const Map& F) {
  if (f.arity() != 0) throw Error(ErrorKind::ShapeMismatch, "transport expects a cochain into A");
  return compose(f, F);
}

}  // namespace hhc
