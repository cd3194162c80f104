#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "maxcomm/errors.hpp"
#include "maxcomm/prime_field.hpp"
#include "maxcomm/quaternion.hpp"
#include "maxcomm/rational.hpp"

namespace maxcomm {

/// A coefficient field usable for the Z-linear algebra layer.
template <class F>
concept FieldDomain = requires(const F& f, typename F::Elem x, typename F::Elem y) {
  typename F::Elem;
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(x, y) } -> std::convertible_to<typename F::Elem>;
  { f.sub(x, y) } -> std::convertible_to<typename F::Elem>;
  { f.mul(x, y) } -> std::convertible_to<typename F::Elem>;
  { f.neg(x) } -> std::convertible_to<typename F::Elem>;
  { f.inv(x) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(x) } -> std::convertible_to<bool>;
  { f.eq(x, y) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<long>;
  { f.str(x) } -> std::convertible_to<std::string>;
};

/// A division ring D together with its center Z and designated maximal
/// subfield L, exposed through exact Z-coordinates.
template <class D>
concept ScalarDomain = requires(const D& d, typename D::Elem x, typename D::Elem y,
                                typename D::Center::Elem c) {
  typename D::Elem;
  typename D::Center;
  requires FieldDomain<typename D::Center>;
  { d.center() } -> std::convertible_to<const typename D::Center&>;
  { d.center_degree() } -> std::convertible_to<int>;
  { d.subfield_degree() } -> std::convertible_to<int>;
  { d.add(x, y) } -> std::convertible_to<typename D::Elem>;
  { d.mul(x, y) } -> std::convertible_to<typename D::Elem>;
  { d.neg(x) } -> std::convertible_to<typename D::Elem>;
  { d.inv(x) } -> std::convertible_to<typename D::Elem>;
  { d.is_zero(x) } -> std::convertible_to<bool>;
  { d.eq(x, y) } -> std::convertible_to<bool>;
  { d.is_central(x) } -> std::convertible_to<bool>;
  { d.is_in_subfield(x) } -> std::convertible_to<bool>;
  { d.from_center(c) } -> std::convertible_to<typename D::Elem>;
  { d.center_coords(x) } -> std::convertible_to<std::vector<typename D::Center::Elem>>;
  { d.same(d) } -> std::convertible_to<bool>;
};

static_assert(FieldDomain<RationalField>);
static_assert(FieldDomain<PrimeField>);
static_assert(ScalarDomain<RationalField>);
static_assert(ScalarDomain<PrimeField>);
static_assert(ScalarDomain<QuaternionAlgebra>);

enum class DomainKind { rational, prime_field, quaternion };

/// Runtime descriptor of a supported division ring, the boundary type used
/// by the CLI and the JSON formats. Validated construction via make_domain.
struct DomainSpec {
  DomainKind kind = DomainKind::rational;
  long p = 0;                       // prime_field only
  Rational a{-1}, b{-1};            // quaternion only

  int z_basis_size() const { return kind == DomainKind::quaternion ? 4 : 1; }
  int l_basis_size() const { return kind == DomainKind::quaternion ? 2 : 1; }

  std::string name() const {
    switch (kind) {
      case DomainKind::rational: return "Q";
      case DomainKind::prime_field: return "F" + std::to_string(p);
      case DomainKind::quaternion:
        return QuaternionAlgebra(a, b).name();
    }
    return "?";
  }

  bool operator==(const DomainSpec& o) const {
    if (kind != o.kind) return false;
    if (kind == DomainKind::prime_field) return p == o.p;
    if (kind == DomainKind::quaternion) return a == o.a && b == o.b;
    return true;
  }
};

/// Validates and normalizes a domain description.
inline DomainSpec make_domain(DomainKind kind, long p = 0, const Rational& a = Rational(-1),
                              const Rational& b = Rational(-1), bool allow_large_prime = false) {
  DomainSpec spec;
  spec.kind = kind;
  switch (kind) {
    case DomainKind::rational:
      break;
    case DomainKind::prime_field:
      PrimeField(p, allow_large_prime);  // validates primality and the size policy
      spec.p = p;
      break;
    case DomainKind::quaternion:
      QuaternionAlgebra(a, b);  // validates the parameters
      spec.a = a;
      spec.b = b;
      break;
    default:
      raise(errc::unsupported_kind, "unknown domain kind");
  }
  return spec;
}

/// Parses the CLI shorthand: "Q", "F<p>" (e.g. F2), "H" (Hamilton
/// quaternions) or "quat" (same, default parameters).
inline DomainSpec parse_domain_name(const std::string& s, bool allow_large_prime = false) {
  if (s == "Q" || s == "q") return make_domain(DomainKind::rational);
  if (s == "H" || s == "h" || s == "quat") return make_domain(DomainKind::quaternion);
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    long p = 0;
    try {
      p = std::stol(s.substr(1));
    } catch (const std::exception&) {
      raise(errc::parse_error, "bad domain name '" + s + "'");
    }
    return make_domain(DomainKind::prime_field, p, Rational(-1), Rational(-1), allow_large_prime);
  }
  raise(errc::parse_error, "bad domain name '" + s + "' (expected Q, F<p> or H)");
}

/// Instantiates the matching scalar domain and calls fn with it.
template <class Fn>
decltype(auto) with_domain(const DomainSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case DomainKind::rational: return fn(RationalField{});
    case DomainKind::prime_field: return fn(PrimeField{spec.p, true});
    case DomainKind::quaternion: return fn(QuaternionAlgebra{spec.a, spec.b});
  }
  raise(errc::unsupported_kind, "unknown domain kind");
}

template <ScalarDomain D>
DomainSpec spec_of(const D& dom) {
  if constexpr (std::is_same_v<D, RationalField>) {
    (void)dom;
    return make_domain(DomainKind::rational);
  } else if constexpr (std::is_same_v<D, PrimeField>) {
    return make_domain(DomainKind::prime_field, dom.modulus(), Rational(-1), Rational(-1), true);
  } else {
    return make_domain(DomainKind::quaternion, 0, dom.param_a(), dom.param_b());
  }
}

enum class ScalarSubset { center_z, subfield_l };

/// Membership of x in the center Z or the designated maximal subfield L.
template <ScalarDomain D>
bool membership(const D& dom, const typename D::Elem& x, ScalarSubset subset) {
  return subset == ScalarSubset::center_z ? dom.is_central(x) : dom.is_in_subfield(x);
}

}  // namespace maxcomm
