#include "hhc/koszul.hpp"

#include "hhc/errors.hpp"
#include "hhc/resolutions.hpp"
#include "hhc/solver.hpp"

#include <functional>

namespace hhc {

namespace {

Scalar sign(const Field& f, long long e) { return parity_sign(e) == 1 ? Scalar::one(f) : -Scalar::one(f); }

long long ipow(int b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int word_index(const std::vector<int>& w, int dim) {
  long long id = 0;
  for (int v : w) id = id * dim + v;
  return static_cast<int>(id);
}

std::vector<int> word_at(long long id, int len, int dim) {
  std::vector<int> w(len);
  for (int i = len - 1; i >= 0; --i) {
    w[i] = static_cast<int>(id % dim);
    id /= dim;
  }
  return w;
}

std::string word_label(const QuadraticData& Q, const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s += Q.generators[w[i]];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

// Row of a word in the ideal echelon: reversed so that pivots fall on the greatest word.
int ideal_row(long long id, long long size) { return static_cast<int>(size - 1 - id); }

struct Quotient {
  std::vector<std::shared_ptr<Echelon>> ideal;
  std::vector<std::vector<int>> standard;
  std::vector<std::vector<int>> word_of;
  std::shared_ptr<const Algebra> A;
};

Quotient build_quotient(const QuadraticData& Q, int D) {
  int dim = static_cast<int>(Q.generators.size());
  const Field& F = Q.field;
  for (auto& r : Q.relations)
    for (auto& [c, v] : r)
      if (c < 0 || c >= dim * dim) throw Error(ErrorKind::RelationNotQuadratic, "relation coordinate outside V⊗V");
  Quotient q;
  bool finite = false;
  for (int d = 0; d <= D; ++d) {
    long long size = ipow(dim, d);
    auto ech = std::make_shared<Echelon>(F, false);
    if (d >= 2) {
      for (int j = 0; j + 2 <= d; ++j) {
        int l = d - 2 - j;
        for (long long u = 0; u < ipow(dim, j); ++u)
          for (long long w = 0; w < ipow(dim, l); ++w)
            for (auto& r : Q.relations) {
              SparseVec col;
              for (auto& [c, v] : r) {
                long long id = (u * dim * dim + c) * ipow(dim, l) + w;
                col.push_back({ideal_row(id, size), v});
              }
              normalize_sparse(col);
              ech->add_column(col);
            }
      }
    }
    std::vector<int> stdw(size, -1);
    int count = 0;
    for (long long id = 0; id < size; ++id) {
      SparseVec e{{ideal_row(id, size), Scalar::one(F)}};
      if (ech->reduce(e) == e) {
        stdw[id] = static_cast<int>(q.word_of.size());
        q.word_of.push_back(word_at(id, d, dim));
        ++count;
      }
    }
    q.ideal.push_back(ech);
    q.standard.push_back(std::move(stdw));
    if (count == 0) {
      finite = true;
      break;
    }
  }
  int top = static_cast<int>(q.standard.size()) - 1;
  AlgebraDescriptor desc;
  desc.field = F;
  std::vector<int> grading;
  for (auto& w : q.word_of) {
    desc.basis.push_back(word_label(Q, w));
    grading.push_back(static_cast<int>(w.size()));
  }
  desc.unit = "1";
  desc.grading = grading;
  if (!finite) desc.truncation = D;
  int n = static_cast<int>(q.word_of.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> w = q.word_of[a];
      w.insert(w.end(), q.word_of[b].begin(), q.word_of[b].end());
      int d = static_cast<int>(w.size());
      if (d > top) continue;
      long long size = ipow(dim, d);
      SparseVec red = q.ideal[d]->reduce({{ideal_row(word_index(w, dim), size), Scalar::one(F)}});
      Terms t;
      for (auto& [row, c] : red) t.push_back({q.standard[d][size - 1 - row], c});
      normalize_terms(t);
      if (!t.empty()) desc.mul.push_back({a, b, t});
    }
  q.A = std::make_shared<const Algebra>(make_algebra(desc));
  return q;
}

// Coefficients of v in the span of the basis columns, or nullopt.
struct Span {
  Echelon ech;
  explicit Span(const Field& f, const std::vector<SparseVec>& basis) : ech(f) {
    for (auto& b : basis) ech.add_column(b);
  }
  std::optional<SparseVec> coords(const SparseVec& v) const { return ech.solve(v); }
};

}  // namespace

Terms KoszulComplex::reduce_word(const std::vector<int>& w) const {
  int d = static_cast<int>(w.size());
  if (d >= static_cast<int>(ideal.size())) return {};
  long long size = ipow(dim_v(), d);
  SparseVec red = ideal[d]->reduce({{ideal_row(word_index(w, dim_v()), size), Scalar::one(Q.field)}});
  Terms t;
  for (auto& [row, c] : red) t.push_back({standard[d][size - 1 - row], c});
  normalize_terms(t);
  return t;
}

std::shared_ptr<const Algebra> quadratic_algebra(const QuadraticData& Q, int D) { return build_quotient(Q, D).A; }

KoszulComplex koszul_resolution(const QuadraticData& Q, int N, int D) {
  KoszulComplex K;
  K.Q = Q;
  K.D = D;
  Quotient q = build_quotient(Q, D);
  K.A = q.A;
  K.ideal = q.ideal;
  K.standard = q.standard;
  K.word_of = q.word_of;
  const Field& F = Q.field;
  int dim = K.dim_v();

  // Annihilator of R in (V (x) V)^*.
  Echelon rel(F);
  for (int c = 0; c < dim * dim; ++c) {
    SparseVec col;
    for (std::size_t k = 0; k < Q.relations.size(); ++k)
      for (auto& [cc, v] : Q.relations[k])
        if (cc == c) col.push_back({static_cast<int>(k), v});
    normalize_sparse(col);
    rel.add_column(col);
  }
  const auto& perp = rel.kernel();
  int nperp = static_cast<int>(perp.size());

  K.K.resize(N + 1);
  K.K[0] = {SparseVec{{0, Scalar::one(F)}}};
  if (N >= 1)
    for (int v = 0; v < dim; ++v) K.K[1].push_back(SparseVec{{v, Scalar::one(F)}});
  for (int i = 2; i <= N; ++i) {
    Echelon ech(F);
    long long rest = ipow(dim, i - 2);
    for (long long id = 0; id < ipow(dim, i); ++id) {
      auto w = word_at(id, i, dim);
      SparseVec col;
      for (int j = 0; j + 2 <= i; ++j) {
        std::vector<int> r(w.begin(), w.begin() + j);
        r.insert(r.end(), w.begin() + j + 2, w.end());
        int pair = w[j] * dim + w[j + 1];
        for (int k = 0; k < nperp; ++k)
          for (auto& [c, v] : perp[k])
            if (c == pair) col.push_back({static_cast<int>((static_cast<long long>(j) * nperp + k) * rest + word_index(r, dim)), v});
      }
      normalize_sparse(col);
      ech.add_column(col);
    }
    for (auto z : ech.kernel()) {
      Scalar lead = z.front().second.inverse();
      for (auto& [c, v] : z) v *= lead;
      K.K[i].push_back(std::move(z));
    }
  }

  auto P = std::make_shared<Complex>(K.A);
  P->name = "koszul";
  K.gens.resize(N + 1);
  for (int i = 0; i <= N; ++i)
    for (std::size_t t = 0; t < K.K[i].size(); ++t) {
      std::string label = "e" + std::to_string(i);
      if (K.K[i].size() > 1) label += "_" + (i == 1 ? Q.generators[t] : std::to_string(t));
      K.gens[i].push_back(P->add_generator(label, 1 - i, i));
    }
  P->set_lo(1 - N);

  std::vector<Span> spans;
  for (int i = 0; i <= N; ++i) spans.emplace_back(F, K.K[i]);
  int one = K.A->unit();
  auto letter = [&](int v) { return q.standard[1][v]; };
  for (int i = 1; i <= N; ++i)
    for (std::size_t t = 0; t < K.K[i].size(); ++t) {
      const SparseVec& z = K.K[i][t];
      long long rest = ipow(dim, i - 1);
      Tensor d(1);
      for (int v = 0; v < dim; ++v) {
        SparseVec left, right;
        for (auto& [id, c] : z) {
          if (id / rest == v) left.push_back({static_cast<int>(id % rest), c});
          if (id % dim == v) right.push_back({static_cast<int>(id / dim), c});
        }
        normalize_sparse(left);
        normalize_sparse(right);
        auto lc = spans[i - 1].coords(left);
        auto rc = spans[i - 1].coords(right);
        if (!lc || !rc) throw Error(ErrorKind::RestrictionFailure, "differential leaves the Koszul complex");
        for (auto& [s, c] : *lc) d.push(Key{letter(v), K.gens[i - 1][s], one}, c);
        for (auto& [s, c] : *rc) d.push(Key{one, K.gens[i - 1][s], letter(v)}, sign(F, i) * c);
      }
      P->set_d(K.gens[i][t], std::move(d));
    }
  Tensor mu(0);
  mu.push(Key{one}, -Scalar::one(F));
  P->set_mu(K.gens[0][0], std::move(mu));
  validate_complex(*P);
  K.P = P;
  return K;
}

AinftyStructure koszul_delta2(const KoszulComplex& K) {
  const Field& F = K.Q.field;
  int dim = K.dim_v();
  int N = static_cast<int>(K.K.size()) - 1;
  std::vector<Span> spans;
  for (int i = 0; i <= N; ++i) spans.emplace_back(F, K.K[i]);
  int one = K.A->unit();
  AinftyStructure S(K.P, 2, true);
  Map d2(K.P, 2, 1);
  for (int i = 0; i <= N; ++i)
    for (std::size_t t = 0; t < K.K[i].size(); ++t) {
      const SparseVec& z = K.K[i][t];
      Tensor v(2);
      for (int a = 0; a <= i; ++a) {
        long long right = ipow(dim, i - a);
        // columns of z viewed as a (left word, right word) matrix
        std::map<int, SparseVec> cols;
        for (auto& [id, c] : z) cols[static_cast<int>(id % right)].push_back({static_cast<int>(id / right), c});
        std::map<int, SparseVec> by_left;  // left basis index -> vector over right words
        for (auto& [rw, col] : cols) {
          normalize_sparse(col);
          auto lc = spans[a].coords(col);
          if (!lc) throw Error(ErrorKind::RestrictionFailure, "diagonal leaves K⊗K");
          for (auto& [s, c] : *lc) by_left[s].push_back({rw, c});
        }
        for (auto& [s, vec] : by_left) {
          normalize_sparse(vec);
          auto rc = spans[i - a].coords(vec);
          if (!rc) throw Error(ErrorKind::RestrictionFailure, "diagonal leaves K⊗K");
          for (auto& [u, c] : *rc) v.push(Key{one, K.gens[a][s], one, K.gens[i - a][u], one}, sign(F, a) * c);
        }
      }
      d2.set(K.gens[i][t], std::move(v));
    }
  S.set(2, std::move(d2));
  return S;
}

Tuple koszul_lift(const KoszulComplex& K, const AinftyStructure& S, const Map& f, int max_n) {
  const ComplexPtr& P = K.P;
  if (f.arity() != 0 || f.complex_ptr() != P) throw Error(ErrorKind::ShapeMismatch, "lift expects a cochain P -> A");
  int l = f.degree();
  int n = l + 1;
  if (f.is_zero()) return Tuple(P, l, max_n, true);
  auto shifts = f.internal_shifts();
  if (shifts.size() != 1) throw Error(ErrorKind::NotHomogeneous, "cochain mixes internal degrees");
  int p = n + *shifts.begin();
  Map df = hom_differential(f);
  if (!df.is_zero()) throw Error(ErrorKind::NotACocycle, "d f != 0 at " + first_nonzero(df));
  const Field& F = K.Q.field;

  // Closed form on the generators of K_n'.
  auto closed = [&](int k, int g) {
    Tensor out(k);
    if (k > p) return out;
    for (auto& term : f.at(g).terms()) {
      const auto& y = K.word_of[term.key[0]];
      std::vector<int> cut(k);
      std::function<void(int, int)> choose = [&](int j, int from) {
        if (j == k) {
          // expand pi(w_0), tau(v_1), pi(w_1), ...
          std::vector<Terms> pieces;
          int start = 0;
          for (int q = 0; q <= k; ++q) {
            int end = q < k ? cut[q] : p;
            pieces.push_back(K.reduce_word({y.begin() + start, y.begin() + end}));
            start = end + 1;
          }
          std::function<void(int, Key&, Scalar)> expand = [&](int q, Key& key, Scalar c) {
            if (q > k) {
              out.push(key, c);
              return;
            }
            for (auto& [b, cb] : pieces[q]) {
              key.push_back(b);
              if (q < k) key.push_back(K.gens[1][y[cut[q]]]);
              expand(q + 1, key, c * cb);
              key.pop_back();
              if (q < k) key.pop_back();
            }
          };
          Key key;
          expand(0, key, sign(F, k) * term.c);
          return;
        }
        for (int x = from; x <= p - (k - j); ++x) {
          cut[j] = x;
          choose(j + 1, x + 1);
        }
      };
      choose(0, 0);
    }
    out.normalize();
    return out;
  };

  Tuple a(P, l, max_n);
  a[0] = f;
  SolveOptions opts;
  opts.allowed = [&P](const Key& k) {
    for (std::size_t i = 1; i < k.size(); i += 2)
      if (P->gen(k[i]).degree > 0) return false;
    return true;
  };
  opts.allowed_tag = 1;
  opts.prescribed_from = 1 - n;
  for (int i = 1; i <= max_n; ++i) {
    Map pre(P, i, l);
    if (n < static_cast<int>(K.gens.size()))
      for (int g : K.gens[n]) pre.set(g, closed(i, g));
    Map phi = partial_delta_bracket(S, a, i);
    if (i % 2 == 0) {
      a[i - 1] += compose(amplified(i - 1, &S.mu, 0), phi);
      phi = partial_delta_bracket(S, a, i);
    }
    opts.prescribed = &pre;
    a[i] = solve_boundary(-phi, opts);
  }
  return a;
}

Report check_pleq0(const Tuple& alpha) {
  Report rep;
  const Complex& P = *alpha.complex_ptr();
  int n = alpha.degree() + 1;
  auto shifts = alpha[0].internal_shifts();
  if (shifts.size() > 1) rep.fail("alpha_0 is not homogeneous");
  if (shifts.empty()) {
    for (int k = 0; k <= alpha.max_n(); ++k)
      if (!alpha[k].is_zero()) rep.fail("alpha_0 = 0 but alpha_" + std::to_string(k) + " != 0");
    return rep;
  }
  int shift = *shifts.begin();
  int p = n + shift;
  for (int k = 0; k <= alpha.max_n(); ++k) {
    const Map& m = alpha[k];
    auto s = m.internal_shifts();
    if (!s.empty() && (s.size() > 1 || *s.begin() != shift))
      rep.fail("alpha_" + std::to_string(k) + " is not homogeneous of internal degree " + std::to_string(shift));
    if (k > p && !m.is_zero()) rep.fail("alpha_" + std::to_string(k) + " != 0 although k > p = " + std::to_string(p));
    for (int g = 0; g < P.num_generators(); ++g) {
      if (!m.certified(g)) continue;
      const Tensor& v = m.at(g);
      if (P.gen(g).degree > 1 - n && !v.is_zero())
        rep.fail("alpha_" + std::to_string(k) + " nonzero on " + P.gen(g).label + " above degree " + std::to_string(1 - n));
      if (k == 0) continue;
      for (auto& t : v.terms())
        for (std::size_t i = 1; i < t.key.size(); i += 2)
          if (P.gen(t.key[i]).degree > 0) {
            rep.fail("alpha_" + std::to_string(k) + "(" + P.gen(g).label + ") leaves P_{<=0}");
            i = t.key.size();
          }
    }
  }
  return rep;
}

QuadraticData quadratic_preset(const std::string& name, const Field& f) {
  QuadraticData Q;
  Q.field = f;
  Scalar one = Scalar::one(f);
  if (name == "k[x]") {
    Q.generators = {"x"};
  } else if (name == "k[x]/(x^2)") {
    Q.generators = {"x"};
    Q.relations = {SparseVec{{0, one}}};
  } else if (name == "k[x,y]") {
    Q.generators = {"x", "y"};
    Q.relations = {SparseVec{{1, one}, {2, -one}}};
  } else {
    throw Error(ErrorKind::ParseError, "unknown quadratic preset '" + name + "'");
  }
  return Q;
}

}  // namespace hhc
