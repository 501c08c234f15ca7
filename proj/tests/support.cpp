#include "support.hpp"

#include <algorithm>

namespace hhc::testing {

Tensor term0(const Algebra& A, const std::string& b, long long c) {
  return algebra_tensor(A.index_of(b), Scalar(A.field(), c));
}

Tensor term1(const Complex& P, const std::string& a, const std::string& g, const std::string& b, long long c) {
  const Algebra& A = P.algebra();
  return bimodule_term(A.index_of(a), P.find(g), A.index_of(b), Scalar(A.field(), c));
}

Map cochain(const ComplexPtr& P, int n, const std::string& gen, const std::string& value, long long c) {
  Map f(P, 0, cochain_degree(n));
  f.set(P->find(gen), term0(P->algebra(), value, c));
  return f;
}

bool tuple_is_zero(const Tuple& t) {
  for (int n = 0; n <= t.max_n(); ++n)
    if (!t[n].is_zero()) return false;
  return true;
}

bool tuples_equal(const Tuple& a, const Tuple& b) { return tuple_is_zero(a - b); }

bool tuples_agree(const Tuple& a, const Tuple& b) {
  int n = std::min(a.max_n(), b.max_n());
  return tuples_equal(a.truncated(n), b.truncated(n));
}

int dense_rank(std::vector<std::vector<Scalar>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Scalar inv = rows[rank][c].inverse();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c].is_zero()) continue;
      Scalar k = rows[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= k * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Scalar Random::scalar(const Field& F) {
  int v = 0;
  while (v == 0) v = uniform(-3, 3);
  return Scalar(F, v);
}

Map Random::map(const ComplexPtr& P, int n, int degree, double density) {
  Map m(P, n, degree);
  std::bernoulli_distribution keep(density);
  for (int g = 0; g < P->num_generators(); ++g) {
    int j = P->gen(g).degree + degree;
    Tensor v(n);
    if (n == 0) {
      if (j != 0) continue;
      for (int b = 0; b < P->algebra().dim(); ++b)
        if (keep(rng_)) v.push(Key{b}, scalar(P->field()));
    } else {
      P->for_each_basis(n, j, std::nullopt, [&](const Key& k) {
        if (keep(rng_)) v.push(k, scalar(P->field()));
      });
    }
    m.set(g, std::move(v));
  }
  return m;
}

Tuple Random::tuple(const ComplexPtr& P, int degree, int max_n, double density) {
  Tuple t(P, degree, max_n, true);
  for (int n = 0; n <= max_n; ++n) t[n] = map(P, n, degree, density);
  return t;
}

Tuple euler_family(const AinftyStructure& S, int n) {
  const ComplexPtr& P = S.P;
  const Field& F = P->field();
  Tuple a(P, 0, 1, true);
  a[0].set(P->find("e1"), term0(P->algebra(), "x"));
  for (int g = 0; g < P->num_generators(); ++g) {
    int i = 1 - P->gen(g).degree;
    long long c = i % 2 == 0 ? -static_cast<long long>(n) * (i / 2) : -static_cast<long long>(n) * (i / 2) - 1;
    a[1].set(g, bimodule_term(0, g, 0, Scalar(F, c)));
  }
  return a;
}

Tuple beta_family(const AinftyStructure& S) {
  const ComplexPtr& P = S.P;
  Tuple b(P, 1, 1, true);
  b[0].set(P->find("e2"), term0(P->algebra(), "x"));
  for (int g = 0; g < P->num_generators(); ++g) {
    int i = 1 - P->gen(g).degree;
    if (i >= 2 && i % 2 == 0) b[1].set(g, term1(*P, "1", "e" + std::to_string(i - 1), "1", -1));
  }
  return b;
}

Tuple char3_family(const AinftyStructure& S) {
  const ComplexPtr& P = S.P;
  Tuple a(P, 0, 2, true);
  a[0].set(P->find("e1"), term0(P->algebra(), "x^2"));
  for (int g = 0; g < P->num_generators(); ++g) {
    int i = 1 - P->gen(g).degree;
    if (i % 2 == 0) continue;
    Tensor v = term1(*P, "1", P->gen(g).label, "x", -1);
    v += term1(*P, "x", P->gen(g).label, "1", -1);
    a[1].set(g, v);
    Tensor w(2);
    int h = i / 2;
    Scalar one = Scalar::one(P->field());
    for (int j = 0; j <= h; ++j)
      w.push(Key{0, P->find("e" + std::to_string(2 * j + 1)), 0, P->find("e" + std::to_string(2 * (h - j) + 1)), 0}, one);
    a[2].set(g, w);
  }
  return a;
}

}  // namespace hhc::testing
