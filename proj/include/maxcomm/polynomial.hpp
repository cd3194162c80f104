#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "maxcomm/domains.hpp"
#include "maxcomm/errors.hpp"
#include "maxcomm/linear.hpp"

namespace maxcomm {

/// Dense univariate polynomial over F, coefficients low degree first,
/// normalized (no trailing zeros). The zero polynomial is the empty vector.
template <FieldDomain F>
using Poly = std::vector<typename F::Elem>;

template <FieldDomain F>
void poly_normalize(const F& f, Poly<F>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <FieldDomain F>
int poly_deg(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <FieldDomain F>
bool poly_is_zero(const Poly<F>& p) {
  return p.empty();
}

template <FieldDomain F>
Poly<F> poly_const(const F& f, const typename F::Elem& c) {
  Poly<F> p{c};
  poly_normalize(f, p);
  return p;
}

template <FieldDomain F>
Poly<F> poly_x(const F& f) {
  return Poly<F>{f.zero(), f.one()};
}

template <FieldDomain F>
bool poly_eq(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <FieldDomain F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  poly_normalize(f, r);
  return r;
}

template <FieldDomain F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  poly_normalize(f, r);
  return r;
}

template <FieldDomain F>
Poly<F> poly_scale(const F& f, const typename F::Elem& c, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& x : r) x = f.mul(c, x);
  poly_normalize(f, r);
  return r;
}

template <FieldDomain F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  poly_normalize(f, r);
  return r;
}

template <FieldDomain F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  require(!b.empty(), errc::division_by_zero, "polynomial division by zero");
  Poly<F> q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, f.zero());
  typename F::Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    typename F::Elem c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    poly_normalize(f, a);
    if (a.empty()) break;
    if (a.size() < b.size()) break;
  }
  poly_normalize(f, q);
  return {q, a};
}

template <FieldDomain F>
bool poly_divides(const F& f, const Poly<F>& d, const Poly<F>& a) {
  return poly_is_zero<F>(poly_divmod(f, a, d).second);
}

template <FieldDomain F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return poly_scale(f, f.inv(a.back()), a);
}

template <FieldDomain F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    Poly<F> r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <FieldDomain F>
std::array<Poly<F>, 3> poly_xgcd(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = poly_const(f, f.one()), s1;
  Poly<F> t0, t1 = poly_const(f, f.one());
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = poly_sub(f, s0, poly_mul(f, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = poly_sub(f, t0, poly_mul(f, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  typename F::Elem c = f.inv(r0.back());
  return {poly_scale(f, c, r0), poly_scale(f, c, s0), poly_scale(f, c, t0)};
}

template <FieldDomain F>
Poly<F> poly_derivative(const F& f, const Poly<F>& a) {
  Poly<F> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(static_cast<long>(i)), a[i]));
  poly_normalize(f, r);
  return r;
}

template <FieldDomain F>
typename F::Elem poly_eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  typename F::Elem acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

template <FieldDomain F>
Poly<F> poly_pow(const F& f, Poly<F> base, int e) {
  Poly<F> acc = poly_const(f, f.one());
  while (e > 0) {
    if (e & 1) acc = poly_mul(f, acc, base);
    base = poly_mul(f, base, base);
    e >>= 1;
  }
  return acc;
}

template <FieldDomain F>
std::string poly_str(const F& f, const Poly<F>& a) {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!s.empty()) s += " + ";
    s += f.str(a[i]) + "*t^" + std::to_string(i);
  }
  return s;
}

/// Yun's squarefree decomposition for characteristic zero: returns pairs
/// (w, m) with w monic squarefree, pairwise coprime, and p = prod w^m.
template <FieldDomain F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const F& f, const Poly<F>& p) {
  require(f.characteristic() == 0, errc::internal_inconsistency,
          "Yun decomposition requires characteristic zero");
  std::vector<std::pair<Poly<F>, int>> out;
  Poly<F> mp = poly_monic(f, p);
  if (poly_deg<F>(mp) < 1) return out;
  Poly<F> dp = poly_derivative(f, mp);
  Poly<F> g = poly_gcd(f, mp, dp);
  if (poly_deg<F>(g) == 0) {
    out.emplace_back(mp, 1);
    return out;
  }
  Poly<F> c = poly_divmod(f, mp, g).first;
  Poly<F> d = poly_sub(f, poly_divmod(f, dp, g).first, poly_derivative(f, c));
  int i = 1;
  while (poly_deg<F>(c) > 0) {
    Poly<F> a = poly_gcd(f, c, d);
    if (poly_deg<F>(a) > 0) out.emplace_back(a, i);
    c = poly_divmod(f, c, a).first;
    d = poly_sub(f, poly_divmod(f, d, a).first, poly_derivative(f, c));
    ++i;
  }
  return out;
}

struct KroneckerLimits {
  long max_abs_value = 1000000000000L;  // evaluation values we still factor into divisors
  long max_candidates = 500000;         // divisor tuples tried per target degree
};

namespace detail {

inline std::vector<long> signed_divisors(long v) {
  long a = v < 0 ? -v : v;
  std::vector<long> divs;
  for (long d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d != a / d) divs.push_back(a / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  std::vector<long> out;
  out.reserve(divs.size() * 2);
  for (long d : divs) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

using ZPoly = std::vector<mpz_class>;

inline void zpoly_normalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class zpoly_eval(const ZPoly& p, long x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Exact division of integer polynomials with monic divisor; empty result
/// when the division is not exact.
inline bool zpoly_divide_monic(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly rem = a;
  zpoly_normalize(rem);
  quotient.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, mpz_class(0));
  while (rem.size() >= b.size()) {
    mpz_class c = rem.back();
    std::size_t shift = rem.size() - b.size();
    quotient[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    zpoly_normalize(rem);
  }
  zpoly_normalize(quotient);
  return rem.empty();
}

/// Kronecker search for a monic integer factor of the given degree. The
/// candidate is interpolated through divisor tuples of P at small integer
/// points and verified by exact division.
inline bool kronecker_find_factor(const ZPoly& p, int degree, const KroneckerLimits& lim,
                                  ZPoly& factor) {
  int npts = degree + 1;
  std::vector<long> points;
  for (long step = 0; static_cast<int>(points.size()) < npts; ++step) {
    long x = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
    points.push_back(x);
  }
  std::vector<std::vector<long>> divisor_sets;
  for (long x : points) {
    mpz_class v = zpoly_eval(p, x);
    require(v != 0, errc::internal_inconsistency, "unexpected root during Kronecker search");
    require(v.fits_slong_p() && std::abs(v.get_si()) <= lim.max_abs_value,
            errc::factorization_unavailable, "coefficients too large for Kronecker search");
    divisor_sets.push_back(signed_divisors(v.get_si()));
  }
  long combinations = 1;
  for (const auto& ds : divisor_sets) {
    combinations *= static_cast<long>(ds.size());
    if (combinations > lim.max_candidates)
      raise(errc::factorization_unavailable, "Kronecker divisor tuple budget exceeded");
  }

  // Lagrange basis over Q for the chosen points, computed once.
  RationalField q;
  std::vector<Poly<RationalField>> lagrange;
  for (int i = 0; i < npts; ++i) {
    Poly<RationalField> li = poly_const(q, q.one());
    Rational denom(1);
    for (int j = 0; j < npts; ++j) {
      if (j == i) continue;
      li = poly_mul(q, li, Poly<RationalField>{Rational(-points[j]), Rational(1)});
      denom = denom * Rational(points[i] - points[j]);
    }
    lagrange.push_back(poly_scale(q, denom.inverse(), li));
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(npts), 0);
  while (true) {
    Poly<RationalField> cand;
    for (int i = 0; i < npts; ++i)
      cand = poly_add(q, cand,
                      poly_scale(q, Rational(divisor_sets[i][idx[i]]), lagrange[i]));
    if (poly_deg<RationalField>(cand) == degree && cand.back() == Rational(1)) {
      bool integral = true;
      for (const auto& c : cand)
        if (!c.is_integer()) {
          integral = false;
          break;
        }
      if (integral) {
        ZPoly g;
        for (const auto& c : cand) g.push_back(c.numerator());
        ZPoly quotient;
        if (zpoly_divide_monic(p, g, quotient)) {
          factor = g;
          return true;
        }
      }
    }
    int pos = 0;
    while (pos < npts) {
      if (++idx[pos] < divisor_sets[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == npts) return false;
  }
}

/// Complete factorization of a monic squarefree integer polynomial into
/// monic irreducible integer factors.
inline std::vector<ZPoly> factor_monic_integer(ZPoly p, const KroneckerLimits& lim) {
  std::vector<ZPoly> out;
  zpoly_normalize(p);
  // integer roots divide the constant term
  bool progress = true;
  while (progress && p.size() > 1) {
    progress = false;
    if (p[0] == 0) {
      out.push_back(ZPoly{0, 1});
      ZPoly quotient;
      zpoly_divide_monic(p, ZPoly{0, 1}, quotient);
      p = quotient;
      progress = true;
      continue;
    }
    require(p[0].fits_slong_p() && std::abs(p[0].get_si()) <= lim.max_abs_value,
            errc::factorization_unavailable, "constant term too large for root search");
    for (long r : signed_divisors(p[0].get_si())) {
      if (zpoly_eval(p, r) == 0) {
        out.push_back(ZPoly{-r, 1});
        ZPoly quotient;
        zpoly_divide_monic(p, ZPoly{-r, 1}, quotient);
        p = quotient;
        progress = true;
        break;
      }
    }
  }
  int m = 2;
  while (static_cast<int>(p.size()) - 1 >= 2 * m) {
    ZPoly g;
    if (kronecker_find_factor(p, m, lim, g)) {
      out.push_back(g);
      ZPoly quotient;
      zpoly_divide_monic(p, g, quotient);
      p = quotient;
    } else {
      ++m;
    }
  }
  if (p.size() > 1) out.push_back(p);
  return out;
}

}  // namespace detail

template <FieldDomain F>
struct PrimaryFactor {
  Poly<F> prime;    // monic irreducible
  int multiplicity = 1;
  Poly<F> primary;  // prime^multiplicity
};

/// Irreducible factorization over F_p by trial division with ascending
/// divisor degree; feasible for the small moduli this library targets.
inline std::vector<PrimaryFactor<PrimeField>> factor_prime_field(const PrimeField& f,
                                                                 Poly<PrimeField> p) {
  std::vector<PrimaryFactor<PrimeField>> out;
  p = poly_monic(f, p);
  constexpr long enumeration_cap = 1L << 20;
  for (int d = 1; 2 * d <= poly_deg<PrimeField>(p); ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) {
      count *= f.modulus();
      if (count > enumeration_cap)
        raise(errc::factorization_unavailable,
              "trial-division budget exceeded over " + f.name());
    }
    for (long code = 0; code < count && 2 * d <= poly_deg<PrimeField>(p); ++code) {
      Poly<PrimeField> q(static_cast<std::size_t>(d) + 1, f.zero());
      long rest = code;
      for (int i = 0; i < d; ++i) {
        q[static_cast<std::size_t>(i)] = rest % f.modulus();
        rest /= f.modulus();
      }
      q.back() = f.one();
      int e = 0;
      while (poly_divides(f, q, p)) {
        p = poly_divmod(f, p, q).first;
        ++e;
      }
      if (e > 0) out.push_back({q, e, poly_pow(f, q, e)});
    }
  }
  if (poly_deg<PrimeField>(p) >= 1) out.push_back({p, 1, p});
  return out;
}

/// Irreducible factorization of a monic rational polynomial: Yun's
/// squarefree split followed by integer root extraction and a Kronecker
/// search on each squarefree part.
inline std::vector<PrimaryFactor<RationalField>> factor_rationals(const RationalField& f,
                                                                  Poly<RationalField> p,
                                                                  KroneckerLimits lim = {}) {
  std::vector<PrimaryFactor<RationalField>> out;
  p = poly_monic(f, p);
  for (auto& [w, mult] : squarefree_decomposition(f, p)) {
    // clear denominators monically: P(u) = c^deg * w(u/c) with c = lcm of denominators
    mpz_class c = 1;
    for (const auto& coef : w) c = lcm(c, coef.denominator());
    detail::ZPoly zp(w.size());
    mpz_class scale = 1;
    for (std::size_t i = w.size(); i-- > 0;) {
      mpq_class scaled(w[i].raw() * scale);
      scaled.canonicalize();
      require(scaled.get_den() == 1, errc::internal_inconsistency, "denominator clearing failed");
      zp[i] = scaled.get_num();
      scale *= c;
    }
    for (const auto& zfac : detail::factor_monic_integer(zp, lim)) {
      // substitute back u = c*t and re-monicize
      Poly<RationalField> q(zfac.size());
      mpz_class cpow = 1;
      for (std::size_t i = 0; i < zfac.size(); ++i) {
        q[i] = Rational(mpq_class(zfac[i] * cpow));
        cpow *= c;
      }
      q = poly_monic(f, q);
      out.push_back({q, mult, poly_pow(f, q, mult)});
    }
  }
  return out;
}

/// Pairwise-coprime primary factorization of a nonconstant polynomial:
/// the returned primaries multiply to monic(p) and each is a power of a
/// single monic irreducible.
template <FieldDomain F>
std::vector<PrimaryFactor<F>> primary_factorization(const F& f, const Poly<F>& p) {
  require(poly_deg<F>(p) >= 1, errc::internal_inconsistency,
          "primary factorization of a constant");
  if constexpr (std::is_same_v<F, PrimeField>) {
    return factor_prime_field(f, p);
  } else {
    static_assert(std::is_same_v<F, RationalField>);
    return factor_rationals(f, p);
  }
}

}  // namespace maxcomm
