#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxcomm/errors.hpp"

namespace maxcomm {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Largest modulus accepted without an explicit opt-in. Keeps the shipped
/// configurations inside the range the test suite exercises.
inline constexpr long default_prime_limit = 97;

/// The prime field F_p with runtime modulus. Elements are residues in [0, p).
class PrimeField {
 public:
  using Elem = std::int64_t;
  using Center = PrimeField;
  static constexpr bool is_finite = true;

  explicit PrimeField(long p, bool allow_large = false) : p_(p) {
    require(is_prime(p), errc::non_prime_modulus, "modulus " + std::to_string(p) + " is not prime");
    require(allow_large || p <= default_prime_limit, errc::unsupported_kind,
            "modulus " + std::to_string(p) + " exceeds the default limit of " +
                std::to_string(default_prime_limit));
  }

  long modulus() const { return p_; }
  const Center& center() const { return *this; }
  int center_degree() const { return 1; }
  int subfield_degree() const { return 1; }
  long characteristic() const { return p_; }

  long order() const { return p_; }
  Elem element(long index) const { return index % p_; }

  Elem zero() const { return 0; }
  Elem one() const { return p_ == 1 ? 0 : 1; }
  Elem from_int(long v) const {
    long r = v % p_;
    return r < 0 ? r + p_ : r;
  }

  Elem add(Elem x, Elem y) const { return (x + y) % p_; }
  Elem sub(Elem x, Elem y) const { return ((x - y) % p_ + p_) % p_; }
  Elem mul(Elem x, Elem y) const { return (x * y) % p_; }
  Elem neg(Elem x) const { return x == 0 ? 0 : p_ - x; }
  Elem inv(Elem x) const {
    require(x != 0, errc::division_by_zero, "inverse of zero in F_" + std::to_string(p_));
    // extended Euclid
    long a = x, b = p_, u = 1, v = 0;
    while (b != 0) {
      long q = a / b;
      a -= q * b;
      std::swap(a, b);
      u -= q * v;
      std::swap(u, v);
    }
    return from_int(u);
  }
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  bool is_zero(Elem x) const { return x == 0; }
  bool is_one(Elem x) const { return x == one(); }
  bool eq(Elem x, Elem y) const { return x == y; }

  bool is_central(Elem) const { return true; }
  bool is_in_subfield(Elem) const { return true; }

  Elem from_center(Elem c) const { return c; }
  std::vector<Elem> center_coords(Elem x) const { return {x}; }
  Elem from_center_coords(const std::vector<Elem>& coords) const {
    require(coords.size() == 1, errc::length_mismatch, "expected one coordinate over F_p");
    return coords[0];
  }
  std::vector<Elem> center_basis() const { return {one()}; }
  std::vector<Elem> subfield_basis() const { return {one()}; }

  Elem scale_by_center(Elem c, Elem x) const { return mul(c, x); }

  bool same(const PrimeField& o) const { return p_ == o.p_; }
  std::string name() const { return "F" + std::to_string(p_); }
  std::string str(Elem x) const { return std::to_string(x); }

 private:
  long p_;
};

}  // namespace maxcomm
