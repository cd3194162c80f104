#pragma once

#include <cstdint>
#include <random>

#include "maxcomm/matrix.hpp"

namespace maxcomm {

/// Deterministic source for the property suites and the seeded CLI spot
/// checks: fixed engine, fixed derivation, no global state.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  long below(long n) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(n)); }
  long in_range(long lo, long hi) { return lo + below(hi - lo + 1); }

  template <ScalarDomain D>
  typename D::Elem scalar(const D& dom) {
    if constexpr (std::is_same_v<D, PrimeField>) {
      return dom.element(below(dom.order()));
    } else if constexpr (std::is_same_v<D, RationalField>) {
      return Rational(in_range(-4, 4), in_range(1, 3));
    } else {
      static_assert(std::is_same_v<D, QuaternionAlgebra>);
      return typename D::Elem{Rational(in_range(-2, 2)), Rational(in_range(-2, 2)),
                              Rational(in_range(-2, 2)), Rational(in_range(-2, 2))};
    }
  }

  template <ScalarDomain D>
  Matrix<D> matrix(const D& dom, int n) {
    Matrix<D> m(dom, n);
    for (auto& x : m.ent) x = scalar(dom);
    return m;
  }

  /// Rejection sampling with a triangular-product fallback so the call
  /// always succeeds.
  template <ScalarDomain D>
  Matrix<D> invertible_matrix(const D& dom, int n) {
    for (int tries = 0; tries < 64; ++tries) {
      Matrix<D> m = matrix(dom, n);
      if (mat_is_invertible(m)) return m;
    }
    Matrix<D> lower = mat_identity(dom, n);
    Matrix<D> upper = mat_identity(dom, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j < i) lower.at(i, j) = scalar(dom);
        if (j > i) upper.at(i, j) = scalar(dom);
      }
    return mat_mul(lower, upper);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace maxcomm
