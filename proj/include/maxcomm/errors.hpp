#pragma once

#include <stdexcept>
#include <string>

namespace maxcomm {

/// Error categories surfaced by the library. Every throw site uses one of
/// these so callers (and the CLI exit-code mapping) can dispatch on them.
enum class errc {
  non_prime_modulus,
  unsupported_kind,
  domain_mismatch,
  division_by_zero,
  split_algebra_witness,
  index_out_of_range,
  shape_mismatch,
  length_mismatch,
  singular,
  not_commutative,
  nilpotent_or_invertible_input,
  witness_search_exhausted,
  characteristic_fallback_too_large,
  factorization_unavailable,
  instance_too_large,
  parse_error,
  verification_failed,
  unsupported_domain,
  internal_inconsistency,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::unsupported_kind: return "UnsupportedKind";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::split_algebra_witness: return "SplitAlgebraWitness";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::singular: return "Singular";
    case errc::not_commutative: return "NotCommutative";
    case errc::nilpotent_or_invertible_input: return "NilpotentOrInvertibleInput";
    case errc::witness_search_exhausted: return "WitnessSearchExhausted";
    case errc::characteristic_fallback_too_large: return "CharacteristicFallbackTooLarge";
    case errc::factorization_unavailable: return "FactorizationUnavailable";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::parse_error: return "ParseError";
    case errc::verification_failed: return "VerificationFailed";
    case errc::unsupported_domain: return "UnsupportedDomain";
    case errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace maxcomm
