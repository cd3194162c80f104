#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "maxcomm/constructions.hpp"
#include "maxcomm/domains.hpp"
#include "maxcomm/matrix.hpp"
#include "maxcomm/oracle.hpp"
#include "maxcomm/subalgebra.hpp"
#include "maxcomm/zsubspace.hpp"

namespace maxcomm {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars. Rationals travel as "n" / "n/d" strings (never floating point),
// prime-field residues as plain integers, quaternions as 4-arrays in the
// basis (1, i, j, k).

inline json json_of(const Rational& r) {
  return r.is_integer() ? json(r.numerator().get_str())
                        : json(r.numerator().get_str() + "/" + r.denominator().get_str());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  raise(errc::parse_error, "expected a rational literal, got " + j.dump());
}

template <ScalarDomain D>
json scalar_to_json(const D& dom, const typename D::Elem& x) {
  if constexpr (std::is_same_v<D, PrimeField>) {
    (void)dom;
    return json(x);
  } else if constexpr (std::is_same_v<D, RationalField>) {
    (void)dom;
    return json_of(x);
  } else {
    static_assert(std::is_same_v<D, QuaternionAlgebra>);
    (void)dom;
    return json::array({json_of(x[0]), json_of(x[1]), json_of(x[2]), json_of(x[3])});
  }
}

template <ScalarDomain D>
typename D::Elem scalar_from_json(const D& dom, const json& j) {
  if constexpr (std::is_same_v<D, PrimeField>) {
    if (j.is_number_integer()) return dom.from_int(j.get<long>());
    if (j.is_string()) return dom.from_int(std::stol(j.get<std::string>()));
    raise(errc::parse_error, "expected a residue, got " + j.dump());
  } else if constexpr (std::is_same_v<D, RationalField>) {
    return rational_from_json(j);
  } else {
    static_assert(std::is_same_v<D, QuaternionAlgebra>);
    if (j.is_array() && j.size() == 4)
      return typename D::Elem{rational_from_json(j[0]), rational_from_json(j[1]),
                              rational_from_json(j[2]), rational_from_json(j[3])};
    if (j.is_number_integer() || j.is_string()) return dom.from_center(rational_from_json(j));
    raise(errc::parse_error, "expected a quaternion 4-array, got " + j.dump());
  }
}

// ---------------------------------------------------------------------------
// Domains.

inline json json_of(const DomainSpec& spec) {
  json j;
  switch (spec.kind) {
    case DomainKind::rational:
      j["kind"] = "Q";
      break;
    case DomainKind::prime_field:
      j["kind"] = "Fp";
      j["p"] = spec.p;
      break;
    case DomainKind::quaternion:
      j["kind"] = "quat";
      j["a"] = json_of(spec.a);
      j["b"] = json_of(spec.b);
      break;
  }
  return j;
}

inline DomainSpec domain_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(), errc::parse_error,
          "domain must be an object with a \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "Q") return make_domain(DomainKind::rational);
  if (kind == "Fp") {
    require(j.contains("p"), errc::parse_error, "prime field domain needs \"p\"");
    return make_domain(DomainKind::prime_field, j["p"].get<long>());
  }
  if (kind == "quat") {
    Rational a = j.contains("a") ? rational_from_json(j["a"]) : Rational(-1);
    Rational b = j.contains("b") ? rational_from_json(j["b"]) : Rational(-1);
    return make_domain(DomainKind::quaternion, 0, a, b);
  }
  raise(errc::parse_error, "unknown domain kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Matrices, subspaces, reports.

template <ScalarDomain D>
json json_of(const Matrix<D>& m) {
  json entries = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(scalar_to_json(m.dom, m.at(i, j)));
    entries.push_back(row);
  }
  return json{{"domain", json_of(spec_of(m.dom))}, {"n", m.n}, {"entries", entries}};
}

template <ScalarDomain D>
Matrix<D> matrix_entries_from_json(const D& dom, int n, const json& entries) {
  require(entries.is_array() && static_cast<int>(entries.size()) == n, errc::parse_error,
          "matrix entries must be an n x n array");
  Matrix<D> m(dom, n);
  for (int i = 0; i < n; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    require(row.is_array() && static_cast<int>(row.size()) == n, errc::parse_error,
            "matrix entries must be an n x n array");
    for (int j = 0; j < n; ++j) m.at(i, j) = scalar_from_json(dom, row[static_cast<std::size_t>(j)]);
  }
  return m;
}

template <ScalarDomain D>
Matrix<D> matrix_from_json(const D& dom, const json& j) {
  require(j.is_object() && j.contains("entries") && j.contains("n"), errc::parse_error,
          "matrix must be an object with \"n\" and \"entries\"");
  if (j.contains("domain"))
    require(domain_from_json(j["domain"]) == spec_of(dom), errc::domain_mismatch,
            "matrix domain does not match the requested domain");
  return matrix_entries_from_json(dom, j["n"].get<int>(), j["entries"]);
}

/// Generator parser for the CLI: each item is a symbolic builder name
/// ("I", "N", "M", "E(i,j)"), a bare n x n entries array, or a full
/// matrix object.
template <ScalarDomain D>
std::vector<Matrix<D>> generators_from_json(const D& dom, int n, const json& j) {
  require(j.is_array(), errc::parse_error, "generators must be an array");
  std::vector<Matrix<D>> gens;
  for (const json& item : j) {
    if (item.is_string()) {
      std::string s = item.get<std::string>();
      if (s == "I")
        gens.push_back(mat_identity(dom, n));
      else if (s == "N")
        gens.push_back(mat_jordan_nilpotent(dom, n));
      else if (s == "M")
        gens.push_back(mat_corner(dom, n));
      else if (s.size() >= 6 && s.substr(0, 2) == "E(" && s.back() == ')') {
        std::size_t comma = s.find(',');
        require(comma != std::string::npos, errc::parse_error, "bad builder '" + s + "'");
        int i = std::stoi(s.substr(2, comma - 2));
        int jj = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
        gens.push_back(mat_elementary(dom, n, i, jj));
      } else {
        raise(errc::parse_error, "unknown builder '" + s + "' (expected I, N, M or E(i,j))");
      }
    } else if (item.is_array()) {
      gens.push_back(matrix_entries_from_json(dom, n, item));
    } else if (item.is_object()) {
      gens.push_back(matrix_from_json(dom, item));
    } else {
      raise(errc::parse_error, "bad generator " + item.dump());
    }
  }
  return gens;
}

template <ScalarDomain D>
json json_of(const ZSubspace<D>& space) {
  json basis = json::array();
  for (const auto& m : zbasis_matrices(space)) basis.push_back(json_of(m));
  return json{{"dimZ", space.dim()}, {"basis", basis}};
}

template <ScalarDomain D>
json json_of(const DecompositionReport<D>& report, bool maximal) {
  json factors = json::array();
  for (const auto& f : report.factors)
    factors.push_back(json{{"idempotent", json_of(f.idempotent)},
                           {"blockBegin", f.block_begin},
                           {"blockSize", f.block_size},
                           {"dimZ", f.algebra.dim()},
                           {"nilDimZ", f.nilradical_basis.dim()},
                           {"residueFieldDimZ", f.residue_field_dim}});
  return json{{"factors", factors},
              {"factorCount", static_cast<int>(report.factors.size())},
              {"factorCountAtMostN", report.factor_count_at_most_n},
              {"jEqualsN", report.j_equals_n},
              {"nilIndex", report.nil_index},
              {"nilIndexAtMostN", report.nil_index_at_most_n},
              {"reducedImpliesFields", report.reduced_implies_fields},
              {"basisChange", json_of(report.basis_change)},
              {"maximal", maximal}};
}

inline json json_of(const RingVerification& v) {
  return json{{"dimZ", v.dim},
              {"commutative", v.commutative},
              {"maximal", v.maximal},
              {"containsScalars", v.contains_scalars},
              {"factorCount", v.factor_count},
              {"factorCountAtMostN", v.factor_count_at_most_n},
              {"jEqualsN", v.j_equals_n},
              {"nilIndex", v.nil_index},
              {"nilIndexAtMostN", v.nil_index_at_most_n},
              {"reducedImpliesFields", v.reduced_implies_fields},
              {"idempotentCountMatches", v.idempotent_count_matches}};
}

inline json json_of(const EnumerationReport& report) {
  json per_ring = json::array();
  for (std::size_t i = 0; i < report.rings.size(); ++i) {
    json basis = json::array();
    for (const auto& m : zbasis_matrices(report.rings[i].space)) basis.push_back(json_of(m));
    const OracleRingRecord& rec = report.per_ring[i];
    per_ring.push_back(json{{"canonicalBasis", basis},
                            {"dimZ", rec.dim},
                            {"factorCount", rec.factor_count},
                            {"jEqualsN", rec.j_equals_n},
                            {"nilIndex", rec.nil_index},
                            {"passed", rec.passed}});
  }
  return json{{"ringsFound", report.rings_found},
              {"allTheoremChecksPassed", report.all_checks_passed},
              {"perRing", per_ring}};
}

}  // namespace maxcomm
