#pragma once

#include <array>
#include <string>
#include <vector>

#include "maxcomm/errors.hpp"
#include "maxcomm/rational.hpp"

namespace maxcomm {

/// Quaternion algebra (a, b / Q): basis (1, i, j, k) over Q with
///   i^2 = a,  j^2 = b,  ij = -ji = k  (hence k^2 = -ab).
/// The default (a, b) = (-1, -1) is the Hamilton algebra, a division ring.
/// Other parameters are accepted; if the algebra is split, inversion of a
/// nonzero element with zero norm reports split_algebra_witness.
///
/// The center Z is Q (coordinate 0); the designated maximal subfield L is
/// Q(i) (coordinates 0 and 1).
class QuaternionAlgebra {
 public:
  using Elem = std::array<Rational, 4>;
  using Center = RationalField;
  static constexpr bool is_finite = false;

  QuaternionAlgebra() : a_(-1), b_(-1) {}
  QuaternionAlgebra(const Rational& a, const Rational& b) : a_(a), b_(b) {
    require(!a.is_zero() && !b.is_zero(), errc::unsupported_kind,
            "quaternion parameters must be nonzero");
  }

  const Rational& param_a() const { return a_; }
  const Rational& param_b() const { return b_; }
  const Center& center() const { return center_; }
  int center_degree() const { return 4; }
  int subfield_degree() const { return 2; }
  long characteristic() const { return 0; }

  Elem zero() const { return {Rational(0), Rational(0), Rational(0), Rational(0)}; }
  Elem one() const { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }
  Elem unit_i() const { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  Elem unit_j() const { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  Elem unit_k() const { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }
  Elem from_int(long v) const { return {Rational(v), Rational(0), Rational(0), Rational(0)}; }

  Elem add(const Elem& x, const Elem& y) const {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
  }
  Elem sub(const Elem& x, const Elem& y) const {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
  }
  Elem neg(const Elem& x) const { return {-x[0], -x[1], -x[2], -x[3]}; }

  Elem mul(const Elem& x, const Elem& y) const {
    const Rational &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3];
    const Rational &y0 = y[0], &y1 = y[1], &y2 = y[2], &y3 = y[3];
    Rational ab = a_ * b_;
    return {
        x0 * y0 + a_ * (x1 * y1) + b_ * (x2 * y2) - ab * (x3 * y3),
        x0 * y1 + x1 * y0 - b_ * (x2 * y3) + b_ * (x3 * y2),
        x0 * y2 + x2 * y0 + a_ * (x1 * y3) - a_ * (x3 * y1),
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    };
  }

  Elem conj(const Elem& x) const { return {x[0], -x[1], -x[2], -x[3]}; }

  /// Reduced norm x * conj(x), an element of the center Q.
  Rational norm(const Elem& x) const {
    return x[0] * x[0] - a_ * (x[1] * x[1]) - b_ * (x[2] * x[2]) + a_ * b_ * (x[3] * x[3]);
  }

  Elem inv(const Elem& x) const {
    require(!is_zero(x), errc::division_by_zero, "inverse of zero quaternion");
    Rational nrm = norm(x);
    if (nrm.is_zero())
      raise(errc::split_algebra_witness,
            "nonzero element of zero norm: (" + a_.str() + ", " + b_.str() +
                ") is not a division algebra");
    Elem c = conj(x);
    Rational r = nrm.inverse();
    return {c[0] * r, c[1] * r, c[2] * r, c[3] * r};
  }

  bool is_zero(const Elem& x) const {
    return x[0].is_zero() && x[1].is_zero() && x[2].is_zero() && x[3].is_zero();
  }
  bool is_one(const Elem& x) const {
    return x[0].is_one() && x[1].is_zero() && x[2].is_zero() && x[3].is_zero();
  }
  bool eq(const Elem& x, const Elem& y) const {
    return x[0] == y[0] && x[1] == y[1] && x[2] == y[2] && x[3] == y[3];
  }

  bool is_central(const Elem& x) const {
    return x[1].is_zero() && x[2].is_zero() && x[3].is_zero();
  }
  bool is_in_subfield(const Elem& x) const { return x[2].is_zero() && x[3].is_zero(); }

  Elem from_center(const Rational& c) const { return {c, Rational(0), Rational(0), Rational(0)}; }
  std::vector<Rational> center_coords(const Elem& x) const { return {x[0], x[1], x[2], x[3]}; }
  Elem from_center_coords(const std::vector<Rational>& coords) const {
    require(coords.size() == 4, errc::length_mismatch, "expected four coordinates over Q");
    return {coords[0], coords[1], coords[2], coords[3]};
  }
  std::vector<Elem> center_basis() const { return {one(), unit_i(), unit_j(), unit_k()}; }
  std::vector<Elem> subfield_basis() const { return {one(), unit_i()}; }

  Elem scale_by_center(const Rational& c, const Elem& x) const {
    return {c * x[0], c * x[1], c * x[2], c * x[3]};
  }

  bool same(const QuaternionAlgebra& o) const { return a_ == o.a_ && b_ == o.b_; }
  std::string name() const {
    if (a_ == Rational(-1) && b_ == Rational(-1)) return "H";
    return "quat(" + a_.str() + "," + b_.str() + ")";
  }
  std::string str(const Elem& x) const {
    return "[" + x[0].str() + "," + x[1].str() + "," + x[2].str() + "," + x[3].str() + "]";
  }

 private:
  Rational a_, b_;
  Center center_;
};

}  // namespace maxcomm
