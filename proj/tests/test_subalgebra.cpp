#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace maxcomm;
using testutil::code_of;
using testutil::q;

namespace {

template <ScalarDomain D>
Subalgebra<D> closure_of(const D& dom, int n, std::vector<Matrix<D>> gens) {
  return algebra_closure(dom, n, gens);
}

template <ScalarDomain D>
bool kernel_meets_image(const Matrix<D>& a) {
  auto ki = kernel_image(a);
  std::vector<CenterVec<D>> kf, imf;
  for (auto& r : ki.kernel.rows) kf.push_back(flatten_row(a.dom, r));
  for (auto& r : ki.image.rows) imf.push_back(flatten_row(a.dom, r));
  return !intersect_spans(a.dom.center(), kf, imf, a.n * a.dom.center_degree()).empty();
}

}  // namespace

TEST_CASE("algebra closure") {
  PrimeField f2(2);
  auto s1 = closure_of(f2, 2, {mat_elementary(f2, 2, 1, 1)});
  CHECK(s1.dim() == 2);
  RationalField f;
  CHECK(closure_of(f, 3, {mat_jordan_nilpotent(f, 3)}).dim() == 3);
  auto full = closure_of(f2, 2, {mat_elementary(f2, 2, 1, 2), mat_elementary(f2, 2, 2, 1)});
  CHECK(full.dim() == 4);
  CHECK_FALSE(is_commutative(full));
}

TEST_CASE("maximal commutativity") {
  PrimeField f2(2);
  auto n = mat_jordan_nilpotent(f2, 2);
  CHECK(is_maximal_commutative(closure_of(f2, 2, {n})));
  CHECK_FALSE(is_maximal_commutative(closure_of(f2, 2, {})));
  CHECK(is_maximal_commutative(closure_of(f2, 2, {mat_elementary(f2, 2, 1, 1)})));
  auto full = closure_of(f2, 2, {mat_elementary(f2, 2, 1, 2), mat_elementary(f2, 2, 2, 1)});
  CHECK(code_of([&] { is_maximal_commutative(full); }) == errc::not_commutative);
}

TEST_CASE("nilradical on pinned instances") {
  PrimeField f2(2);
  auto n = mat_jordan_nilpotent(f2, 2);
  auto nil = nilradical(closure_of(f2, 2, {n}));
  CHECK(nil.dim() == 1);
  CHECK(zcontains(nil, n));
  RationalField f;
  Matrix<RationalField> d(f, 2);
  d.at(0, 0) = q(1);
  d.at(1, 1) = q(2);
  CHECK(nilradical(closure_of(f, 2, {d})).dim() == 0);
  auto full = closure_of(f2, 2, {mat_elementary(f2, 2, 1, 2), mat_elementary(f2, 2, 2, 1)});
  CHECK(code_of([&] { nilradical(full); }) == errc::not_commutative);
}

TEST_CASE("trace-form radical equals the brute-force nilpotent span") {
  Sampler s(71);
  auto run = [&](long p, int n, int iters) {
    PrimeField fp(p);
    for (int it = 0; it < iters; ++it) {
      auto a = s.matrix(fp, n);
      auto alg = closure_of(fp, n, {a});
      if (!trace_form_applicable(fp, alg.dim())) continue;
      auto sc = structure_constants(alg);
      auto coords = sc_trace_form_radical(sc);
      std::vector<CenterVec<PrimeField>> vecs;
      for (auto& c : coords) vecs.push_back(flatten(element_from_coords(alg, c)));
      auto via_trace = zspan_of_vectors(fp, n, std::move(vecs));
      CHECK(zspace_eq(via_trace, brute_nilpotent_span(alg)));
    }
  };
  run(5, 2, 60);
  run(7, 2, 60);
  run(5, 3, 30);
}

TEST_CASE("characteristic fallback cap is enforced") {
  PrimeField f2(2);
  int n = 22;
  std::vector<Matrix<PrimeField>> gens;
  for (int j = 2; j <= n; ++j) gens.push_back(mat_elementary(f2, n, 1, j));
  auto alg = closure_of(f2, n, gens);
  REQUIRE(alg.dim() == 22);  // p = 2 <= dim and 2^22 elements: both routes refuse
  CHECK(code_of([&] { nilradical(alg); }) == errc::characteristic_fallback_too_large);
}

TEST_CASE("Jacobson radical agrees with the nilradical") {
  PrimeField f2(2);
  auto n = mat_jordan_nilpotent(f2, 2);
  auto s = closure_of(f2, 2, {n});
  auto jac = jacobson_radical(s);
  CHECK(jac.dim() == 1);
  CHECK(zcontains(jac, n));
  CHECK(zspace_eq(jac, nilradical(s)));

  // characteristic-zero path goes through the certified candidate
  RationalField f;
  auto nil3 = closure_of(f, 3, {mat_jordan_nilpotent(f, 3)});
  CHECK(jacobson_radical(nil3).dim() == 2);
  CHECK(zspace_eq(jacobson_radical(nil3), nilradical(nil3)));
  Matrix<RationalField> d(f, 2);
  d.at(0, 0) = q(2);
  d.at(1, 1) = q(3);
  CHECK(jacobson_radical(closure_of(f, 2, {d})).dim() == 0);

  Sampler smp(73);
  for (int it = 0; it < 60; ++it) {
    PrimeField f3(3);
    auto a = smp.matrix(f3, 2);
    auto alg = closure_of(f3, 2, {a});
    CHECK(zspace_eq(jacobson_radical(alg), nilradical(alg)));
  }
}

TEST_CASE("locality") {
  PrimeField f2(2);
  CHECK(is_local(closure_of(f2, 2, {mat_jordan_nilpotent(f2, 2)})));
  CHECK_FALSE(is_local(closure_of(f2, 2, {mat_elementary(f2, 2, 1, 1)})));
  RationalField f;
  CHECK(is_local(closure_of(f, 3, {mat_jordan_nilpotent(f, 3)})));
  Matrix<RationalField> d(f, 2);
  d.at(0, 0) = q(2);
  d.at(1, 1) = q(3);
  CHECK_FALSE(is_local(closure_of(f, 2, {d})));
}

TEST_CASE("Fitting split of an already-split diagonal pair") {
  PrimeField f2(2);
  auto e11 = mat_elementary(f2, 2, 1, 1);
  auto s = closure_of(f2, 2, {e11});
  auto split = fitting_split(s, e11);
  CHECK(split.rank == 1);
  CHECK(mat_eq(split.basis_change, mat_identity(f2, 2)));
  CHECK(split.upper.dim() == 1);
  CHECK(split.lower.dim() == 1);
  CHECK(zcontains(split.upper.space, mat_identity(f2, 1)));
  CHECK(zcontains(split.lower.space, mat_identity(f2, 1)));
}

TEST_CASE("Fitting split on the pinned three-by-three example") {
  RationalField f;
  Matrix<RationalField> a(f, 3);
  a.at(0, 0) = q(1);
  a.at(1, 1) = q(1);
  Matrix<RationalField> nprime = mat_elementary(f, 3, 1, 2);
  auto s = closure_of(f, 3, {a, nprime});
  REQUIRE(s.dim() == 3);
  auto split = fitting_split(s, a);
  CHECK(split.rank == 2);
  CHECK(mat_eq(split.basis_change, mat_identity(f, 3)));
  CHECK(split.upper.dim() == 2);
  CHECK(zcontains(split.upper.space, mat_elementary(f, 2, 1, 2)));
  CHECK(split.lower.dim() == 1);
  // the maximality of the halves transfers
  CHECK(is_maximal_commutative(s));
  CHECK(is_maximal_commutative(split.upper));
  CHECK(is_maximal_commutative(split.lower));
  CHECK(maximality_transfer_holds(s));

  CHECK(code_of([&] { fitting_split(s, mat_identity(f, 3)); }) ==
        errc::nilpotent_or_invertible_input);
  CHECK(code_of([&] { fitting_split(s, nprime); }) == errc::nilpotent_or_invertible_input);
  CHECK(code_of([&] { fitting_split(s, mat_elementary(f, 3, 2, 2)); }) == errc::domain_mismatch);
}

TEST_CASE("decompose on pinned instances") {
  PrimeField f2(2);
  auto local = decompose(closure_of(f2, 2, {mat_jordan_nilpotent(f2, 2)}));
  CHECK(local.factors.size() == 1);
  CHECK(local.j_equals_n);
  CHECK(local.nil_index == 2);
  CHECK(local.nilradical_space.dim() == 1);

  auto diag = decompose(closure_of(f2, 2, {mat_elementary(f2, 2, 1, 1)}));
  CHECK(diag.factors.size() == 2);
  CHECK(diag.reduced_implies_fields);
  CHECK(diag.nilradical_space.dim() == 0);
  CHECK(diag.nil_index == 1);
  for (const auto& fac : diag.factors) {
    CHECK(fac.algebra.dim() == 1);
    CHECK(fac.residue_field_dim == 1);
  }

  auto full = closure_of(f2, 2, {mat_elementary(f2, 2, 1, 2), mat_elementary(f2, 2, 2, 1)});
  CHECK(code_of([&] { decompose(full); }) == errc::not_commutative);
}

TEST_CASE("decompose over Q splits semisimple diagonals") {
  RationalField f;
  Matrix<RationalField> d(f, 2);
  d.at(0, 0) = q(2);
  d.at(1, 1) = q(3);
  // every +-1 combination of {I, d} is invertible, so the witness comes
  // from the idempotent fallback
  auto report = decompose(closure_of(f, 2, {d}));
  CHECK(report.factors.size() == 2);
  CHECK(report.j_equals_n);
  CHECK(report.reduced_implies_fields);

  Matrix<RationalField> d3(f, 3);
  d3.at(0, 0) = q(1);
  d3.at(1, 1) = q(2);
  auto report3 = decompose(closure_of(f, 3, {d3}));
  CHECK(report3.factors.size() == 3);
}

TEST_CASE("decomposition basis change block-diagonalizes the algebra") {
  Sampler smp(79);
  PrimeField f3(3);
  for (int it = 0; it < 40; ++it) {
    auto alg = closure_of(f3, 3, {smp.matrix(f3, 3)});
    auto report = decompose(alg);
    auto qinv = mat_inverse(report.basis_change);
    for (const auto& b : alg.basis) {
      auto conj = mat_mul(mat_mul(report.basis_change, b), qinv);
      for (const auto& fac : report.factors)
        for (int i = fac.block_begin; i < fac.block_begin + fac.block_size; ++i)
          for (int j = 0; j < conj.n; ++j)
            if (j < fac.block_begin || j >= fac.block_begin + fac.block_size)
              CHECK(f3.is_zero(conj.at(i, j)));
    }
  }
}

TEST_CASE("idempotents via minimal polynomials") {
  PrimeField f2(2);
  auto parts = idempotents_via_minpoly(closure_of(f2, 2, {mat_elementary(f2, 2, 1, 1)}));
  REQUIRE(parts.size() == 2);
  auto e11 = mat_elementary(f2, 2, 1, 1);
  auto e22 = mat_elementary(f2, 2, 2, 2);
  CHECK(((mat_eq(parts[0], e11) && mat_eq(parts[1], e22)) ||
         (mat_eq(parts[0], e22) && mat_eq(parts[1], e11))));

  auto only_unit = idempotents_via_minpoly(closure_of(f2, 2, {mat_jordan_nilpotent(f2, 2)}));
  REQUIRE(only_unit.size() == 1);
  CHECK(mat_eq(only_unit[0], mat_identity(f2, 2)));

  RationalField f;
  Matrix<RationalField> d(f, 2);
  d.at(0, 0) = q(2);
  d.at(1, 1) = q(3);
  CHECK(idempotents_via_minpoly(closure_of(f, 2, {d})).size() == 2);

  Sampler smp(83);
  PrimeField f3(3);
  for (int it = 0; it < 40; ++it) {
    auto a = smp.matrix(f3, 2);
    auto b = smp.matrix(f3, 2);
    if (!commutes(a, b)) continue;
    auto alg = closure_of(f3, 2, {a, b});
    CHECK(idempotents_via_minpoly(alg).size() == decompose(alg).factors.size());
  }
}

TEST_CASE("unit absorption: inverses of units stay in the algebra") {
  Sampler smp(89);
  auto run = [&](auto dom, int n, int iters) {
    for (int it = 0; it < iters; ++it) {
      auto alg = closure_of(dom, n, {smp.matrix(dom, n)});
      for (int tries = 0; tries < 8; ++tries) {
        FVec<typename decltype(dom)::Center> coords;
        for (int t = 0; t < alg.dim(); ++t) coords.push_back(smp.scalar(dom.center()));
        auto el = element_from_coords(alg, coords);
        if (!mat_is_invertible(el)) continue;
        CHECK(zcontains(alg.space, mat_inverse(el)));
      }
    }
  };
  run(PrimeField(5), 2, 40);
  run(RationalField{}, 2, 40);
  run(QuaternionAlgebra{}, 2, 8);
}

TEST_CASE("non-nilpotent elements of minimal rank split the space") {
  // the key step of the block-splitting argument: a non-nilpotent element
  // of minimal rank in a commutative family has Ker meeting Im trivially
  Sampler smp(97);
  PrimeField f2(2);
  for (int it = 0; it < 60; ++it) {
    auto alg = closure_of(f2, 3, {smp.matrix(f2, 3)});
    long count = finite_element_count(f2, alg.dim(), 1L << 12);
    REQUIRE(count > 0);
    int min_rank = alg.n() + 1;
    std::vector<Matrix<PrimeField>> minimal;
    for (long idx = 1; idx < count; ++idx) {
      auto el = element_from_coords(alg, coords_of_index(f2, alg.dim(), idx));
      if (mat_is_nilpotent(el)) continue;
      int r = mat_rank(el);
      if (r < min_rank) {
        min_rank = r;
        minimal.clear();
      }
      if (r == min_rank) minimal.push_back(el);
    }
    for (const auto& el : minimal) CHECK_FALSE(kernel_meets_image(el));
  }
}
