#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "maxcomm/errors.hpp"

namespace maxcomm {

/// Arbitrary-precision exact fraction, always in lowest terms with positive
/// denominator. Thin value wrapper around GMP's mpq so the rest of the
/// library never touches raw GMP types.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    require(d != 0, errc::division_by_zero, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "n", "-n" or "n/d". Throws parse_error on malformed input.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
      raise(errc::parse_error, "bad rational literal '" + s + "'");
    require(q.get_den() != 0, errc::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    require(!o.is_zero(), errc::division_by_zero, "rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational inverse() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  /// Canonical text form: "n" for integers, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

  double to_double() const { return v_.get_d(); }  // display only; never used in math paths

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// The rational field Q, acting as both a coefficient field and as the
/// degenerate division ring with D = Z = L.
class RationalField {
 public:
  using Elem = Rational;
  using Center = RationalField;
  static constexpr bool is_finite = false;

  const Center& center() const { return *this; }
  int center_degree() const { return 1; }
  int subfield_degree() const { return 1; }
  long characteristic() const { return 0; }

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long v) const { return Rational(v); }

  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem inv(const Elem& x) const { return x.inverse(); }
  Elem div(const Elem& x, const Elem& y) const { return x / y; }

  bool is_zero(const Elem& x) const { return x.is_zero(); }
  bool is_one(const Elem& x) const { return x.is_one(); }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }

  bool is_central(const Elem&) const { return true; }
  bool is_in_subfield(const Elem&) const { return true; }

  Elem from_center(const Elem& c) const { return c; }
  std::vector<Elem> center_coords(const Elem& x) const { return {x}; }
  Elem from_center_coords(const std::vector<Elem>& coords) const {
    require(coords.size() == 1, errc::length_mismatch, "expected one coordinate over Q");
    return coords[0];
  }
  std::vector<Elem> center_basis() const { return {one()}; }
  std::vector<Elem> subfield_basis() const { return {one()}; }

  Elem scale_by_center(const Elem& c, const Elem& x) const { return c * x; }

  bool same(const RationalField&) const { return true; }
  std::string name() const { return "Q"; }
  std::string str(const Elem& x) const { return x.str(); }
};

}  // namespace maxcomm
