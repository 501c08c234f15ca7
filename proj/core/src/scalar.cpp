#include "hhc/scalar.hpp"

#include "hhc/errors.hpp"

#include <climits>
#include <ostream>

namespace hhc {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t reduce_big(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  // keep products inside 128-bit intermediates comfortably
  if (p > (std::int64_t(1) << 40)) throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic too large");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  else
    throw Error(ErrorKind::ParseError, "unknown field '" + text + "'");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::ParseError, "unknown field '" + text + "'");
  return prime(std::stoll(digits));
}

std::string Field::name() const { return p_ ? "Fp:" + std::to_string(p_) : "Q"; }

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

BigInt to_big(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

void Scalar::set_fraction(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    a_ = 0;
    b_ = 1;
    big_.reset();
    return;
  }
  __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (fits(num) && fits(den)) {
    a_ = static_cast<std::int64_t>(num);
    b_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    set_rational(Rational(to_big(num), to_big(den)));
  }
}

void Scalar::set_rational(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (num >= INT64_MIN && num <= INT64_MAX && den <= INT64_MAX) {
    a_ = num.convert_to<std::int64_t>();
    b_ = den.convert_to<std::int64_t>();
    big_.reset();
  } else {
    a_ = 0;
    b_ = 1;
    big_ = std::make_shared<const Rational>(q);
  }
}

Rational Scalar::rational() const {
  if (big_) return *big_;
  return Rational(a_, b_);
}

Scalar::Scalar(const Field& f, long long v) : p_(f.characteristic()) {
  if (p_)
    a_ = mod(v, p_);
  else
    a_ = v;
}

Scalar::Scalar(const Field& f, const Rational& q) : p_(f.characteristic()) {
  if (p_) {
    std::int64_t den = reduce_big(boost::multiprecision::denominator(q), p_);
    if (den == 0) throw Error(ErrorKind::ParseError, "denominator divisible by characteristic");
    a_ = mulmod(reduce_big(boost::multiprecision::numerator(q), p_), powmod(den, p_ - 2, p_), p_);
  } else {
    set_rational(q);
  }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(f, Rational(BigInt(text)));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Scalar(f, Rational(num, den));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad scalar '" + text + "'");
  }
}

Field Scalar::field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.negate();
  return r;
}

void Scalar::negate() {
  if (p_)
    a_ = a_ ? p_ - a_ : 0;
  else if (big_)
    set_rational(-*big_);
  else
    set_fraction(-static_cast<__int128>(a_), b_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_) {
    a_ += o.a_;
    if (a_ >= p_) a_ -= p_;
  } else if (big_ || o.big_) {
    set_rational(rational() + o.rational());
  } else if (b_ == 1 && o.b_ == 1) {
    set_fraction(static_cast<__int128>(a_) + o.a_, 1);
  } else {
    set_fraction(static_cast<__int128>(a_) * o.b_ + static_cast<__int128>(o.a_) * b_, static_cast<__int128>(b_) * o.b_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_) {
    a_ -= o.a_;
    if (a_ < 0) a_ += p_;
    return *this;
  }
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_)
    a_ = mulmod(a_, o.a_, p_);
  else if (big_ || o.big_)
    set_rational(rational() * o.rational());
  else
    set_fraction(static_cast<__int128>(a_) * o.a_, static_cast<__int128>(b_) * o.b_);
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}
Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar r = *this;
  if (p_)
    r.a_ = powmod(a_, p_ - 2, p_);
  else if (big_)
    r.set_rational(1 / *big_);
  else
    r.set_fraction(b_, a_);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  if (big_ || o.big_) return big_ && o.big_ && *big_ == *o.big_;
  return a_ == o.a_ && b_ == o.b_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(a_);
  if (big_) return big_->str();
  return b_ == 1 ? std::to_string(a_) : std::to_string(a_) + "/" + std::to_string(b_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hhc
