#pragma once

#include <map>
#include <string>
#include <vector>

#include "maxcomm/centralizer.hpp"
#include "maxcomm/prime_field.hpp"
#include "maxcomm/subalgebra.hpp"

namespace maxcomm {

/// Per-ring summary row of an enumeration run.
struct OracleRingRecord {
  int dim = 0;
  int factor_count = 0;
  bool j_equals_n = false;
  int nil_index = 0;
  bool passed = false;
};

/// Output of the brute-force searches over small finite matrix rings:
/// every maximal commutative subring found, in a deterministic canonical
/// order, each with its decomposition summary.
struct EnumerationReport {
  long rings_found = 0;
  bool all_checks_passed = false;
  std::vector<Subalgebra<PrimeField>> rings;
  std::vector<OracleRingRecord> per_ring;
};

namespace detail {

struct FiniteRingTables {
  PrimeField dom;
  int n;
  long count;  // p^(n^2)
  std::vector<Matrix<PrimeField>> elements;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero_index = 0;
  int one_index = 0;
};

inline long finite_matrix_count(long p, int n, long cap) {
  long count = 1;
  for (int i = 0; i < n * n; ++i) {
    count *= p;
    if (count > cap) return -1;
  }
  return count;
}

inline FiniteRingTables build_tables(long p, int n, long cap) {
  PrimeField dom(p);
  long count = finite_matrix_count(p, n, cap);
  require(count > 0, errc::instance_too_large, "matrix ring too large to tabulate");
  FiniteRingTables t{dom, n, count, {}, {}, {}};
  auto matrix_of_index = [&](long index) {
    Matrix<PrimeField> m(dom, n);
    for (int c = 0; c < n * n; ++c) {
      m.ent[static_cast<std::size_t>(c)] = dom.element(index % p);
      index /= p;
    }
    return m;
  };
  auto index_of_matrix = [&](const Matrix<PrimeField>& m) {
    long index = 0;
    for (int c = n * n; c-- > 0;) index = index * p + m.ent[static_cast<std::size_t>(c)];
    return static_cast<int>(index);
  };
  for (long i = 0; i < count; ++i) t.elements.push_back(matrix_of_index(i));
  t.add.assign(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(count)));
  t.mul.assign(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(count)));
  for (long i = 0; i < count; ++i)
    for (long j = 0; j < count; ++j) {
      t.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index_of_matrix(mat_add(t.elements[static_cast<std::size_t>(i)],
                                  t.elements[static_cast<std::size_t>(j)]));
      t.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index_of_matrix(mat_mul(t.elements[static_cast<std::size_t>(i)],
                                  t.elements[static_cast<std::size_t>(j)]));
    }
  t.zero_index = index_of_matrix(mat_zero(dom, n));
  t.one_index = index_of_matrix(mat_identity(dom, n));
  return t;
}

inline bool mask_closed(const FiniteRingTables& t, unsigned long mask,
                        const std::vector<std::vector<int>>& table) {
  for (long i = 0; i < t.count; ++i) {
    if (!(mask >> i & 1)) continue;
    for (long j = 0; j < t.count; ++j) {
      if (!(mask >> j & 1)) continue;
      if (!(mask >> table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1))
        return false;
    }
  }
  return true;
}

inline bool mask_commutative(const FiniteRingTables& t, unsigned long mask) {
  for (long i = 0; i < t.count; ++i) {
    if (!(mask >> i & 1)) continue;
    for (long j = i + 1; j < t.count; ++j) {
      if (!(mask >> j & 1)) continue;
      if (t.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          t.mul[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        return false;
    }
  }
  return true;
}

inline unsigned long mask_centralizer(const FiniteRingTables& t, unsigned long mask) {
  unsigned long cent = 0;
  for (long m = 0; m < t.count; ++m) {
    bool commutes_with_all = true;
    for (long x = 0; x < t.count && commutes_with_all; ++x) {
      if (!(mask >> x & 1)) continue;
      commutes_with_all = t.mul[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)] ==
                          t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)];
    }
    if (commutes_with_all) cent |= 1UL << m;
  }
  return cent;
}

/// Closure of a subset under addition and multiplication (no identity
/// adjoined); fixpoint over the finite tables.
inline unsigned long mask_ring_closure(const FiniteRingTables& t, unsigned long mask) {
  mask |= 1UL << t.zero_index;
  bool changed = true;
  while (changed) {
    changed = false;
    for (long i = 0; i < t.count; ++i) {
      if (!(mask >> i & 1)) continue;
      for (long j = 0; j < t.count; ++j) {
        if (!(mask >> j & 1)) continue;
        unsigned long with =
            mask | 1UL << t.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] |
            1UL << t.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (with != mask) {
          mask = with;
          changed = true;
        }
      }
    }
  }
  return mask;
}

inline Subalgebra<PrimeField> subalgebra_of_mask(const FiniteRingTables& t, unsigned long mask) {
  std::vector<Matrix<PrimeField>> members;
  for (long i = 0; i < t.count; ++i)
    if (mask >> i & 1) members.push_back(t.elements[static_cast<std::size_t>(i)]);
  return make_subalgebra(zspan(t.dom, t.n, members));
}

}  // namespace detail

inline OracleRingRecord oracle_record(const Subalgebra<PrimeField>& ring) {
  RingVerification v = verify_subalgebra(ring);
  OracleRingRecord rec{v.dim, v.factor_count, v.j_equals_n, v.nil_index, v.all_passed()};
  return rec;
}

inline EnumerationReport finalize_report(std::vector<Subalgebra<PrimeField>> rings) {
  std::map<std::pair<int, std::string>, Subalgebra<PrimeField>> ordered;
  for (auto& r : rings)
    ordered.emplace(std::make_pair(r.dim(), zspace_key(r.space)), std::move(r));
  EnumerationReport report;
  report.all_checks_passed = true;
  for (auto& [key, ring] : ordered) {
    OracleRingRecord rec = oracle_record(ring);
    report.all_checks_passed = report.all_checks_passed && rec.passed;
    report.per_ring.push_back(rec);
    report.rings.push_back(std::move(ring));
  }
  report.rings_found = static_cast<long>(report.rings.size());
  return report;
}

/// Exhaustive subset search: every maximal commutative unital subring of
/// M_n(F_p), feasible when the ring has at most 16 elements (the default
/// instance M_2(F_2): 16 elements, 65536 subsets). A second pass drops
/// the unitality requirement and checks that the maximal commutative
/// subrings found are the same sets, in particular that they all contain
/// the identity.
inline EnumerationReport enumerate_exhaustive(long p = 2, int n = 2) {
  detail::FiniteRingTables t = detail::build_tables(p, n, 16);
  std::vector<unsigned long> maximal_masks;
  for (unsigned long mask = 1; mask < (1UL << t.count); ++mask) {
    if (!(mask >> t.one_index & 1)) continue;
    if (!detail::mask_closed(t, mask, t.add) || !detail::mask_closed(t, mask, t.mul)) continue;
    if (!detail::mask_commutative(t, mask)) continue;
    if (detail::mask_centralizer(t, mask) != mask) continue;
    maximal_masks.push_back(mask);
  }

  // no-identity pass: maximality among plain commutative subrings
  std::vector<unsigned long> no_id_maximal;
  for (unsigned long mask = 1; mask < (1UL << t.count); ++mask) {
    if (!detail::mask_closed(t, mask, t.add) || !detail::mask_closed(t, mask, t.mul)) continue;
    if (!detail::mask_commutative(t, mask)) continue;
    bool maximal = true;
    for (long y = 0; y < t.count && maximal; ++y) {
      if (mask >> y & 1) continue;
      unsigned long bigger = detail::mask_ring_closure(t, mask | 1UL << y);
      if (detail::mask_commutative(t, bigger)) maximal = false;
    }
    if (maximal) no_id_maximal.push_back(mask);
  }
  require(no_id_maximal == maximal_masks, errc::internal_inconsistency,
          "maximal commutative subrings differ between the unital and plain passes");
  for (unsigned long mask : no_id_maximal)
    require((mask >> t.one_index & 1) != 0, errc::internal_inconsistency,
            "found a maximal commutative subring without the identity");

  std::vector<Subalgebra<PrimeField>> rings;
  rings.reserve(maximal_masks.size());
  for (unsigned long mask : maximal_masks) rings.push_back(detail::subalgebra_of_mask(t, mask));
  return finalize_report(std::move(rings));
}

/// Generated sweep: closures of all tuples of at most max_gens pairwise
/// commuting matrices, deduplicated canonically, filtered down to the
/// ones equal to their own centralizer. Covers M_2(F_3) and M_3(F_2)
/// where subset enumeration is infeasible.
inline EnumerationReport sweep_generated(long p, int n, int max_gens = 2) {
  require(max_gens >= 1 && max_gens <= 2, errc::instance_too_large,
          "sweep supports at most two generators");
  PrimeField dom(p);
  long count = detail::finite_matrix_count(p, n, 1L << 22);
  require(count > 0, errc::instance_too_large, "matrix ring too large to sweep");
  if (max_gens == 2)
    require(count <= 4000, errc::instance_too_large,
            "generator pair sweep exceeds the tuple budget");
  std::vector<Matrix<PrimeField>> all;
  all.reserve(static_cast<std::size_t>(count));
  for (long idx = 0; idx < count; ++idx) {
    Matrix<PrimeField> m(dom, n);
    long rest = idx;
    for (int c = 0; c < n * n; ++c) {
      m.ent[static_cast<std::size_t>(c)] = dom.element(rest % p);
      rest /= p;
    }
    all.push_back(std::move(m));
  }

  std::map<std::string, Subalgebra<PrimeField>> closures;
  auto record_closure = [&](const std::vector<Matrix<PrimeField>>& gens) {
    Subalgebra<PrimeField> closure = algebra_closure(dom, n, gens);
    closures.emplace(zspace_key(closure.space), std::move(closure));
  };
  for (long i = 0; i < count; ++i) record_closure({all[static_cast<std::size_t>(i)]});
  if (max_gens >= 2) {
    for (long i = 0; i < count; ++i)
      for (long j = i + 1; j < count; ++j) {
        if (!commutes(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]))
          continue;
        record_closure({all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]});
      }
  }

  std::vector<Subalgebra<PrimeField>> rings;
  for (auto& [key, closure] : closures) {
    if (!is_commutative(closure)) continue;
    if (!zspace_eq(centralizer_of_subspace(closure.space), closure.space)) continue;
    rings.push_back(std::move(closure));
  }
  return finalize_report(std::move(rings));
}

}  // namespace maxcomm
