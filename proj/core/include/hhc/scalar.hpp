#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace hhc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::int64_t p);

// Q when characteristic() == 0, otherwise F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);
  // "Q", "Fp:5", "F5" are accepted.
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  std::int64_t p_ = 0;
};

// Over Q the value is num/den in lowest terms while it fits in 64 bits, and a shared
// big rational otherwise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, long long v);
  Scalar(const Field& f, const Rational& q);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  // Integers and fractions "a/b"; over F_p the fraction is reduced mod p.
  static Scalar parse(const Field& f, const std::string& text);

  Field field() const;
  bool is_zero() const { return !big_ && a_ == 0; }
  bool is_one() const { return !big_ && a_ == 1 && b_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;
  void negate();

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text: "3", "-1/2"; residues print in [0, p).
  std::string str() const;
  Rational rational() const;
  std::int64_t residue() const { return a_; }

 private:
  void set_rational(const Rational& q);
  void set_fraction(__int128 num, __int128 den);

  std::int64_t p_ = 0;
  std::int64_t a_ = 0;  // residue, or numerator
  std::int64_t b_ = 1;  // denominator
  std::shared_ptr<const Rational> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline int parity_sign(long long e) { return (e & 1) ? -1 : 1; }

}  // namespace hhc
