#include "hhc/map.hpp"

#include "hhc/errors.hpp"
#include "hhc/render.hpp"

#include <algorithm>

namespace hhc {

Map::Map(ComplexPtr P, int arity, int degree, ComplexPtr target)
    : P_(std::move(P)), T_(target ? std::move(target) : P_), arity_(arity), degree_(degree), lo_(P_->lo()) {
  values_.assign(P_->num_generators(), Tensor(arity_));
}

Map Map::identity(ComplexPtr P) {
  Map m(P, 1, 0);
  int one = P->algebra().unit();
  Scalar c = Scalar::one(P->field());
  for (int g = 0; g < P->num_generators(); ++g) m.values_[g] = bimodule_term(one, g, one, c);
  return m;
}

Map Map::differential(ComplexPtr P) {
  Map m(P, 1, 1);
  for (int g = 0; g < P->num_generators(); ++g) m.values_[g] = P->d(g);
  return m;
}

Map Map::augmentation(ComplexPtr P) {
  if (!P->augmented()) throw Error(ErrorKind::NotAugmented, "complex has no augmentation");
  Map m(P, 0, -1);
  for (int g : P->in_degree(1)) m.values_[g] = P->mu(g);
  return m;
}

void Map::restrict_lo(int lo) {
  if (lo <= lo_) return;
  lo_ = lo;
  for (int g = 0; g < P_->num_generators(); ++g)
    if (!certified(g)) values_[g] = Tensor(arity_);
}

const Tensor& Map::at(int g) const {
  if (!certified(g))
    throw Error(ErrorKind::WindowExhausted,
                "value on generator '" + P_->gen(g).label + "' is below the certified degree " + std::to_string(lo_));
  return values_[g];
}

void Map::set(int g, Tensor v) {
  v.normalize();
  int want = P_->gen(g).degree + degree_;
  for (auto& t : v.terms()) {
    if (key_arity(t.key) != arity_)
      throw Error(ErrorKind::ShapeMismatch, "value of wrong tensor power on '" + P_->gen(g).label + "'");
    if (T_->key_degree(t.key) != want)
      throw Error(ErrorKind::DegreeMismatch, "value on '" + P_->gen(g).label + "' leaves degree " + std::to_string(want));
  }
  values_[g] = std::move(v);
}

void Map::add(int g, const Tensor& v) {
  Tensor s = values_[g];
  s += v;
  set(g, std::move(s));
}

bool Map::is_zero() const {
  for (int g = 0; g < P_->num_generators(); ++g)
    if (certified(g) && !values_[g].is_zero()) return false;
  return true;
}

std::set<int> Map::internal_shifts() const {
  std::set<int> s;
  for (int g = 0; g < P_->num_generators(); ++g) {
    if (!certified(g)) continue;
    for (auto& t : values_[g].terms()) s.insert(T_->key_internal(t.key) - P_->gen(g).internal);
  }
  return s;
}

void Map::check_shape(const Map& o) const {
  if (P_ != o.P_ || (arity_ > 0 && T_ != o.T_) || arity_ != o.arity_ || degree_ != o.degree_)
    throw Error(ErrorKind::ShapeMismatch, "maps differ in complex, tensor power or degree");
}

Map& Map::operator+=(const Map& o) {
  check_shape(o);
  restrict_lo(o.lo_);
  for (int g = 0; g < P_->num_generators(); ++g)
    if (certified(g)) values_[g] += o.values_[g];
  return *this;
}

Map& Map::operator-=(const Map& o) {
  check_shape(o);
  restrict_lo(o.lo_);
  for (int g = 0; g < P_->num_generators(); ++g)
    if (certified(g)) values_[g] -= o.values_[g];
  return *this;
}

Map Map::operator+(const Map& o) const {
  Map r = *this;
  r += o;
  return r;
}

Map Map::operator-(const Map& o) const {
  Map r = *this;
  r -= o;
  return r;
}

Map Map::operator-() const { return scaled(-Scalar::one(P_->field())); }

Map Map::scaled(const Scalar& c) const {
  Map r = *this;
  for (auto& v : r.values_) v = v.scaled(c);
  return r;
}

bool Map::operator==(const Map& o) const {
  check_shape(o);
  int lo = std::max(lo_, o.lo_);
  for (int g = 0; g < P_->num_generators(); ++g)
    if (P_->gen(g).degree >= lo && values_[g] != o.values_[g]) return false;
  return true;
}

namespace {

struct Partial {
  Key key;
  Scalar c;
};

// Multiply the last algebra slot of every partial by basis element b.
void multiply_last(const Algebra& A, std::vector<Partial>& parts, int b) {
  std::vector<Partial> next;
  next.reserve(parts.size());
  for (auto& p : parts) {
    const Terms& prod = A.product(p.key.back(), b);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      Partial q{i + 1 == prod.size() ? std::move(p.key) : p.key, p.c * prod[i].second};
      q.key.back() = prod[i].first;
      next.push_back(std::move(q));
    }
  }
  parts = std::move(next);
}

}  // namespace

bool apply_ops(const Complex& P, const Ops& ops, const Tensor& x, Tensor& out) {
  const Algebra& A = P.algebra();
  int n = x.arity();
  if (static_cast<int>(ops.size()) != n) throw Error(ErrorKind::ShapeMismatch, "operator arity differs from tensor power");
  int out_arity = 0;
  for (auto* op : ops) out_arity += op ? op->arity() : 1;
  Tensor r(out_arity);
  std::vector<Partial> parts;
  for (auto& term : x.terms()) {
    int sign_exp = 0;
    int before = 0;
    for (int j = 0; j < n; ++j) {
      int g = term.key[2 * j + 1];
      if (ops[j]) {
        if (!ops[j]->certified(g)) return false;
        sign_exp += ops[j]->degree() * before;
      }
      before += P.gen(g).degree;
    }
    Scalar c = term.c;
    if (sign_exp & 1) c.negate();
    parts.clear();
    parts.push_back({Key{term.key[0]}, c});
    for (int j = 0; j < n && !parts.empty(); ++j) {
      int g = term.key[2 * j + 1];
      int a = term.key[2 * j + 2];
      if (!ops[j]) {
        for (auto& p : parts) {
          p.key.push_back(g);
          p.key.push_back(a);
        }
        continue;
      }
      const Tensor& v = ops[j]->at(g);
      std::vector<Partial> next;
      for (auto& vt : v.terms()) {
        std::vector<Partial> branch;
        branch.reserve(parts.size());
        for (auto& p : parts) branch.push_back({p.key, p.c * vt.c});
        multiply_last(A, branch, vt.key[0]);
        for (auto& p : branch)
          for (std::size_t i = 1; i < vt.key.size(); ++i) p.key.push_back(vt.key[i]);
        multiply_last(A, branch, a);
        for (auto& p : branch) next.push_back(std::move(p));
      }
      parts = std::move(next);
    }
    for (auto& p : parts)
      if (!p.c.is_zero()) r.push(std::move(p.key), p.c);
  }
  r.normalize();
  out = std::move(r);
  return true;
}

Tensor apply_ops(const Complex& P, const Ops& ops, const Tensor& x) {
  Tensor out;
  if (!apply_ops(P, ops, x, out))
    throw Error(ErrorKind::WindowExhausted, "operator evaluated below its certified degree");
  return out;
}

Ops amplified(int r, const Map* f, int t) {
  Ops ops(r + t + 1, nullptr);
  ops[r] = f;
  return ops;
}

Map compose(const Ops& ops, const Map& g) {
  if (static_cast<int>(ops.size()) != g.arity()) throw Error(ErrorKind::ShapeMismatch, "composition arity mismatch");
  int arity = 0;
  int degree = g.degree();
  ComplexPtr target = g.target_ptr();
  bool has_identity = false;
  for (auto* op : ops) {
    arity += op ? op->arity() : 1;
    has_identity = has_identity || !op;
    if (op) {
      degree += op->degree();
      if (op->complex_ptr() != g.target_ptr()) throw Error(ErrorKind::ShapeMismatch, "operator source differs from map target");
      if (op->arity() > 0) target = op->target_ptr();
    }
  }
  if (has_identity && target != g.target_ptr())
    throw Error(ErrorKind::ShapeMismatch, "identity factors next to a change of complex");
  const Complex& S = g.complex();
  Map r(g.complex_ptr(), arity, degree, target);
  r.restrict_lo(g.lo());
  for (int deg = 1; deg >= g.lo(); --deg) {
    bool ok = true;
    for (int e : S.in_degree(deg)) {
      Tensor v;
      if (!apply_ops(g.target(), ops, g.at(e), v)) {
        ok = false;
        break;
      }
      r.set(e, std::move(v));
    }
    if (!ok) {
      r.restrict_lo(deg + 1);
      break;
    }
  }
  return r;
}

Tensor tensor_differential(const Complex& P, const Tensor& x) {
  int n = x.arity();
  Tensor r(n);
  if (n == 0) return r;
  for (auto& term : x.terms()) {
    int before = 0;
    for (int j = 0; j < n; ++j) {
      int g = term.key[2 * j + 1];
      const Tensor& dg = P.d(g);
      Scalar c = term.c;
      if (before & 1) c.negate();
      for (auto& dt : dg.terms()) {
        for (auto& [l, lc] : P.algebra().product(term.key[2 * j], dt.key[0])) {
          for (auto& [rr, rc] : P.algebra().product(dt.key[2], term.key[2 * j + 2])) {
            Key k = term.key;
            k[2 * j] = l;
            k[2 * j + 1] = dt.key[1];
            k[2 * j + 2] = rr;
            r.push(std::move(k), c * dt.c * lc * rc);
          }
        }
      }
      before += P.gen(g).degree;
    }
  }
  r.normalize();
  return r;
}

Map hom_differential(const Map& f) {
  const Complex& P = f.complex();
  Map r(f.complex_ptr(), f.arity(), f.degree() + 1, f.target_ptr());
  r.restrict_lo(f.lo());
  Scalar s = parity_sign(f.degree()) == 1 ? -Scalar::one(P.field()) : Scalar::one(P.field());
  Ops op{&f};
  for (int g = 0; g < P.num_generators(); ++g) {
    if (!r.certified(g)) continue;
    Tensor v = tensor_differential(f.target(), f.at(g));
    Tensor fd = apply_ops(P, op, P.d(g));
    v.add_scaled(fd, s);
    r.set(g, std::move(v));
  }
  return r;
}

std::string first_nonzero(const Map& f) {
  const Complex& P = f.complex();
  for (int deg = 1; deg >= f.lo(); --deg)
    for (int g : P.in_degree(deg))
      if (!f.at(g).is_zero()) return P.gen(g).label + " -> " + render(f.target(), f.at(g));
  return "";
}

}  // namespace hhc
