#include "doctest.h"
#include "test_util.hpp"

using namespace maxcomm;
using testutil::code_of;

TEST_CASE("exhaustive search over M_2(F_2)") {
  auto report = enumerate_exhaustive(2, 2);
  CHECK(report.rings_found == 7);
  CHECK(report.all_checks_passed);
  PrimeField f2(2);
  auto nil_ring = zspan(f2, 2, {mat_identity(f2, 2), mat_jordan_nilpotent(f2, 2)});
  auto scalars = zspan(f2, 2, {mat_identity(f2, 2)});
  bool saw_nil_ring = false, saw_scalars = false;
  for (const auto& ring : report.rings) {
    if (zspace_eq(ring.space, nil_ring)) saw_nil_ring = true;
    if (zspace_eq(ring.space, scalars)) saw_scalars = true;
    CHECK(ring.dim() == 2);
  }
  CHECK(saw_nil_ring);        // span{I, N} is maximal commutative
  CHECK_FALSE(saw_scalars);   // span{I} centralizes to everything
  for (const auto& rec : report.per_ring) {
    CHECK(rec.factor_count <= 2);
    CHECK(rec.j_equals_n);
    CHECK(rec.nil_index <= 2);
    CHECK(rec.passed);
  }
}

TEST_CASE("exhaustive search rejects oversized instances") {
  CHECK(code_of([] { enumerate_exhaustive(3, 2); }) == errc::instance_too_large);
  CHECK(code_of([] { enumerate_exhaustive(2, 3); }) == errc::instance_too_large);
}

TEST_CASE("sweep agrees with the exhaustive list on M_2(F_2)") {
  auto exhaustive = enumerate_exhaustive(2, 2);
  auto sweep = sweep_generated(2, 2, 2);
  REQUIRE(sweep.rings_found == exhaustive.rings_found);
  for (long i = 0; i < sweep.rings_found; ++i)
    CHECK(zspace_eq(sweep.rings[static_cast<std::size_t>(i)].space,
                    exhaustive.rings[static_cast<std::size_t>(i)].space));
}

TEST_CASE("sweeps over M_2(F_3) and M_3(F_2)") {
  auto r32 = sweep_generated(3, 2, 2);
  CHECK(r32.rings_found > 0);
  CHECK(r32.all_checks_passed);
  for (const auto& rec : r32.per_ring) {
    CHECK(rec.factor_count <= 2);
    CHECK(rec.j_equals_n);
    CHECK(rec.nil_index <= 2);
  }
  auto r23 = sweep_generated(2, 3, 2);
  CHECK(r23.rings_found > 0);
  CHECK(r23.all_checks_passed);
  for (const auto& rec : r23.per_ring) {
    CHECK(rec.factor_count <= 3);
    CHECK(rec.nil_index <= 3);
  }
}

TEST_CASE("the degenerate sweep over M_1(F_2) finds only the field itself") {
  auto report = sweep_generated(2, 1, 1);
  REQUIRE(report.rings_found == 1);
  CHECK(report.per_ring[0].dim == 1);
  CHECK(report.per_ring[0].factor_count == 1);
  PrimeField f2(2);
  CHECK(zspace_eq(report.rings[0].space, zspan(f2, 1, {mat_identity(f2, 1)})));
}

TEST_CASE("every discovered ring contains the scalars and equals its centralizer") {
  auto report = sweep_generated(3, 2, 2);
  PrimeField f3(3);
  for (const auto& ring : report.rings) {
    CHECK(zcontains(ring.space, mat_identity(f3, 2)));
    CHECK(zspace_eq(centralizer_of_subspace(ring.space), ring.space));
  }
}

TEST_CASE("sweep rejects oversized generator budgets") {
  CHECK(code_of([] { sweep_generated(97, 3, 2); }) == errc::instance_too_large);
}
