#include "hhc/render.hpp"

#include "hhc/map.hpp"

#include <sstream>

namespace hhc {

namespace {

const char* kMinus = "−";
const char* kTimes = "·";
const char* kOtimes = "⊗";

// Splits c into sign and magnitude text; magnitude "1" is dropped unless bare.
void coefficient(const Scalar& c, bool& negative, std::string& mag) {
  std::string s = c.str();
  negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  mag = s;
}

std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [c, body] : terms) {
    bool neg;
    std::string mag;
    coefficient(c, neg, mag);
    if (first)
      os << (neg ? kMinus : "");
    else
      os << (neg ? std::string(" ") + kMinus + " " : std::string(" + "));
    first = false;
    if (mag != "1") os << mag << kTimes;
    os << body;
  }
  return os.str();
}

}  // namespace

std::string render(const Complex& P, const Tensor& x) {
  const Algebra& A = P.algebra();
  std::vector<std::pair<Scalar, std::string>> terms;
  for (auto& t : x.terms()) {
    std::string body;
    if (t.key.size() == 1) {
      body = A.label(t.key[0]);
    } else {
      int n = key_arity(t.key);
      for (int j = 1; j <= n; ++j) {
        if (j > 1) body += kOtimes;
        int a = t.key[2 * j - 2];
        if (a != A.unit()) body += A.label(a) + kTimes;
        body += P.gen(t.key[2 * j - 1]).label;
      }
      int b = t.key.back();
      if (b != A.unit()) body += kTimes + A.label(b);
    }
    terms.push_back({t.c, body});
  }
  return join_terms(terms);
}

std::string render(const Algebra& A, const AlgebraElement& a) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (auto& [i, c] : a.terms()) terms.push_back({c, A.label(i)});
  return join_terms(terms);
}

std::string render(const Map& f) {
  const Complex& P = f.complex();
  std::ostringstream os;
  for (int deg = 1; deg >= f.lo(); --deg)
    for (int g : P.in_degree(deg))
      if (!f.at(g).is_zero()) os << P.gen(g).label << " ↦ " << render(f.target(), f.at(g)) << "\n";
  std::string s = os.str();
  return s.empty() ? "0\n" : s;
}

}  // namespace hhc
