#include "hhc/algebra.hpp"

#include "hhc/errors.hpp"

#include <algorithm>
#include <map>

namespace hhc {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::MissingTruncation: return "MissingTruncation";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotACoboundary: return "NotACoboundary";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::WindowExhausted: return "WindowExhausted";
    case ErrorKind::WindowTooDeep: return "WindowTooDeep";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::NotAugmented: return "NotAugmented";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::RelationNotQuadratic: return "RelationNotQuadratic";
    case ErrorKind::RestrictionFailure: return "RestrictionFailure";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

void normalize_terms(Terms& t) {
  if (t.empty()) return;
  std::stable_sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  size_t out = 0;
  for (size_t i = 0; i < t.size();) {
    int idx = t[i].first;
    Scalar c = t[i].second;
    size_t j = i + 1;
    for (; j < t.size() && t[j].first == idx; ++j) c += t[j].second;
    if (!c.is_zero()) t[out++] = {idx, c};
    i = j;
  }
  t.resize(out);
}

void BimoduleScalar::normalize() {
  std::map<std::pair<int, int>, Scalar> acc;
  for (auto& t : terms) {
    auto it = acc.find({t.a, t.b});
    if (it == acc.end())
      acc.emplace(std::make_pair(t.a, t.b), t.c);
    else
      it->second += t.c;
  }
  terms.clear();
  for (auto& [k, c] : acc)
    if (!c.is_zero()) terms.push_back({k.first, k.second, c});
}

int Algebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

int Algebra::max_degree() const {
  int m = 0;
  for (int d : degrees_) m = std::max(m, d);
  return m;
}

AlgebraDescriptor Algebra::descriptor() const {
  AlgebraDescriptor d;
  d.field = field_;
  d.basis = labels_;
  d.unit = labels_[unit_];
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!product(i, j).empty()) d.mul.push_back({i, j, product(i, j)});
  if (graded()) d.grading = degrees_;
  d.truncation = truncation_;
  return d;
}

namespace {

Terms times_basis_right(const Algebra& A, const Terms& x, int k) {
  Terms out;
  for (auto& [i, c] : x)
    for (auto& [l, c2] : A.product(i, k)) out.push_back({l, c * c2});
  normalize_terms(out);
  return out;
}

Terms times_basis_left(const Algebra& A, int k, const Terms& x) {
  Terms out;
  for (auto& [i, c] : x)
    for (auto& [l, c2] : A.product(k, i)) out.push_back({l, c * c2});
  normalize_terms(out);
  return out;
}

std::string terms_str(const Algebra& A, const Terms& t) {
  if (t.empty()) return "0";
  std::string s;
  for (auto& [i, c] : t) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + A.label(i);
  }
  return s;
}

}  // namespace

Algebra make_algebra(const AlgebraDescriptor& d) {
  Algebra A;
  A.field_ = d.field;
  A.labels_ = d.basis;
  const int n = static_cast<int>(d.basis.size());
  if (n == 0) throw Error(ErrorKind::BadUnit, "empty basis");
  A.unit_ = A.index_of(d.unit);
  if (A.unit_ < 0) throw Error(ErrorKind::BadUnit, "unit label '" + d.unit + "' not in basis");
  A.table_.assign(static_cast<size_t>(n) * n, {});
  for (const auto& p : d.mul) {
    if (p.i < 0 || p.i >= n || p.j < 0 || p.j >= n) throw Error(ErrorKind::ParseError, "product index out of range");
    Terms t = p.value;
    for (auto& [k, c] : t) {
      if (k < 0 || k >= n) throw Error(ErrorKind::ParseError, "product value index out of range");
      if (c.field() != d.field) throw Error(ErrorKind::ParseError, "coefficient over wrong field");
    }
    auto& slot = A.table_[static_cast<size_t>(p.i) * n + p.j];
    slot.insert(slot.end(), t.begin(), t.end());
    normalize_terms(slot);
  }
  if (d.grading) {
    if (static_cast<int>(d.grading->size()) != n) throw Error(ErrorKind::GradingViolation, "grading length mismatch");
    A.degrees_ = *d.grading;
    for (int g : A.degrees_)
      if (g < 0) throw Error(ErrorKind::GradingViolation, "negative internal degree");
  }
  A.truncation_ = d.truncation;
  if (A.truncation_ && !d.grading) throw Error(ErrorKind::GradingViolation, "truncation requires a grading");

  // unit
  for (int i = 0; i < n; ++i) {
    Terms e{{i, Scalar::one(d.field)}};
    if (A.product(A.unit_, i) != e || A.product(i, A.unit_) != e) throw Error(ErrorKind::BadUnit, "unit fails on " + A.labels_[i]);
  }
  // grading
  if (A.graded()) {
    if (A.degrees_[A.unit_] != 0) throw Error(ErrorKind::GradingViolation, "deg(1) != 0");
    for (int i = 0; i < n; ++i) {
      if (A.truncation_ && A.degrees_[i] > *A.truncation_)
        throw Error(ErrorKind::GradingViolation, "basis element above truncation degree");
      for (int j = 0; j < n; ++j) {
        int want = A.degrees_[i] + A.degrees_[j];
        for (auto& [k, c] : A.product(i, j))
          if (A.degrees_[k] != want)
            throw Error(ErrorKind::GradingViolation, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  // associativity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Terms left = times_basis_right(A, A.product(i, j), k);
        Terms right = times_basis_left(A, i, A.product(j, k));
        if (left != right)
          throw Error(ErrorKind::NonAssociative, "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                     std::to_string(k) + "): " + terms_str(A, left) + " vs " +
                                                     terms_str(A, right));
      }
  return A;
}

Algebra truncated_polynomial_algebra(const Field& f, std::optional<int> n, std::optional<int> D) {
  int top;
  if (n) {
    if (*n < 1) throw Error(ErrorKind::ParseError, "power must be positive");
    top = *n - 1;
  } else {
    if (!D) throw Error(ErrorKind::MissingTruncation, "k[x] needs an internal truncation degree");
    top = *D;
  }
  AlgebraDescriptor d;
  d.field = f;
  std::vector<int> grading;
  for (int a = 0; a <= top; ++a) {
    d.basis.push_back(a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a)));
    grading.push_back(a);
  }
  d.unit = "1";
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b)
      if (a + b <= top) d.mul.push_back({a, b, {{a + b, Scalar::one(f)}}});
  d.grading = grading;
  if (!n) d.truncation = D;
  return make_algebra(d);
}

AlgebraElement::AlgebraElement(Terms t) : terms_(std::move(t)) { normalize_terms(terms_); }

AlgebraElement AlgebraElement::basis(const Algebra& A, int i) { return AlgebraElement({{i, Scalar::one(A.field())}}); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  Terms t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return AlgebraElement(std::move(t));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.scaled(-Scalar::one(o.terms_.empty() ? Field() : o.terms_.front().second.field())); }

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  Terms t;
  for (auto& [i, v] : terms_) t.push_back({i, v * c});
  return AlgebraElement(std::move(t));
}

AlgebraElement multiply(const Algebra& A, const AlgebraElement& a, const AlgebraElement& b) {
  Terms out;
  for (auto& [i, c] : a.terms())
    for (auto& [j, c2] : b.terms())
      for (auto& [k, c3] : A.product(i, j)) out.push_back({k, c * c2 * c3});
  return AlgebraElement(std::move(out));
}

}  // namespace hhc
