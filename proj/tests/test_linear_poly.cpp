#include "doctest.h"
#include "test_util.hpp"

using namespace maxcomm;
using testutil::q;

namespace {

Poly<RationalField> qpoly(std::initializer_list<long> coeffs) {
  RationalField f;
  Poly<RationalField> p;
  for (long c : coeffs) p.push_back(q(c));
  poly_normalize(f, p);
  return p;
}

}  // namespace

TEST_CASE("rref canonicalizes row spaces") {
  RationalField f;
  std::vector<FVec<RationalField>> rows{{q(2), q(4), q(6)}, {q(1), q(2), q(3)}, {q(0), q(1), q(1)}};
  CHECK(rref(f, rows) == 2);
  std::vector<FVec<RationalField>> expect{{q(1), q(0), q(1)}, {q(0), q(1), q(1)}};
  CHECK(rows == expect);
  CHECK(in_span(f, rows, FVec<RationalField>{q(1), q(1), q(2)}));
  CHECK_FALSE(in_span(f, rows, FVec<RationalField>{q(0), q(0), q(1)}));
  auto coords = coordinates_in_basis(f, rows, FVec<RationalField>{q(3), q(-1), q(2)});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == q(3));
  CHECK((*coords)[1] == q(-1));
}

TEST_CASE("nullspace solves homogeneous systems") {
  PrimeField f5(5);
  // x + 2y + 3z = 0 over F_5
  std::vector<FVec<PrimeField>> constraints{{1, 2, 3}};
  auto basis = nullspace(f5, constraints, 3);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis)
    CHECK(f5.add(f5.add(v[0], f5.mul(2, v[1])), f5.mul(3, v[2])) == 0);
}

TEST_CASE("span intersection via the Zassenhaus block trick") {
  RationalField f;
  std::vector<FVec<RationalField>> a{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}};
  std::vector<FVec<RationalField>> b{{q(0), q(1), q(1)}, {q(0), q(0), q(1)}};
  auto meet = intersect_spans(f, a, b, 3);
  REQUIRE(meet.size() == 1);
  CHECK(meet[0] == FVec<RationalField>{q(0), q(1), q(0)});
  // random sanity: intersection is contained in both spans
  Sampler s(3);
  PrimeField f3(3);
  for (int it = 0; it < 200; ++it) {
    std::vector<FVec<PrimeField>> x, y;
    for (int r = 0; r < 2; ++r) {
      FVec<PrimeField> vx, vy;
      for (int c = 0; c < 4; ++c) {
        vx.push_back(s.scalar(f3));
        vy.push_back(s.scalar(f3));
      }
      x.push_back(vx);
      y.push_back(vy);
    }
    rref(f3, x);
    rref(f3, y);
    for (const auto& v : intersect_spans(f3, x, y, 4)) {
      CHECK(in_span(f3, x, v));
      CHECK(in_span(f3, y, v));
    }
  }
}

TEST_CASE("polynomial division, gcd and xgcd") {
  RationalField f;
  auto p = qpoly({-1, 0, 1});  // t^2 - 1
  auto d = qpoly({1, 1});      // t + 1
  auto [quot, rem] = poly_divmod(f, p, d);
  CHECK(poly_eq(f, quot, qpoly({-1, 1})));
  CHECK(poly_is_zero<RationalField>(rem));
  auto g = poly_gcd(f, qpoly({-1, 0, 1}), qpoly({1, 1}));
  CHECK(poly_eq(f, g, qpoly({1, 1})));
  auto [gg, u, v] = poly_xgcd(f, qpoly({-1, 0, 1}), qpoly({-2, 1}));  // gcd(t^2-1, t-2) = 1
  CHECK(poly_deg<RationalField>(gg) == 0);
  auto check = poly_add(f, poly_mul(f, u, qpoly({-1, 0, 1})), poly_mul(f, v, qpoly({-2, 1})));
  CHECK(poly_eq(f, check, gg));
}

TEST_CASE("Yun squarefree decomposition") {
  RationalField f;
  // (t^2+1)^2 * t^3 * (t-2)
  auto p = poly_mul(f, poly_mul(f, poly_pow(f, qpoly({1, 0, 1}), 2), qpoly({0, 0, 0, 1})),
                    qpoly({-2, 1}));
  auto parts = squarefree_decomposition(f, p);
  Poly<RationalField> rebuilt = qpoly({1});
  for (auto& [w, m] : parts) rebuilt = poly_mul(f, rebuilt, poly_pow(f, w, m));
  CHECK(poly_eq(f, rebuilt, poly_monic(f, p)));
  bool saw_mult2 = false, saw_mult3 = false;
  for (auto& [w, m] : parts) {
    if (m == 2) {
      saw_mult2 = true;
      CHECK(poly_eq(f, w, qpoly({1, 0, 1})));
    }
    if (m == 3) {
      saw_mult3 = true;
      CHECK(poly_eq(f, w, qpoly({0, 1})));
    }
  }
  CHECK(saw_mult2);
  CHECK(saw_mult3);
}

TEST_CASE("rational factorization: roots, Kronecker factors, primaries") {
  RationalField f;
  // (t^2+1)(t^2+2): no rational roots, two quadratic factors
  auto p = poly_mul(f, qpoly({1, 0, 1}), qpoly({2, 0, 1}));
  auto facs = primary_factorization(f, p);
  REQUIRE(facs.size() == 2);
  Poly<RationalField> rebuilt = qpoly({1});
  for (auto& fac : facs) {
    CHECK(fac.multiplicity == 1);
    rebuilt = poly_mul(f, rebuilt, fac.primary);
  }
  CHECK(poly_eq(f, rebuilt, p));

  // t^2 - 5t + 6 = (t-2)(t-3)
  auto roots = primary_factorization(f, qpoly({6, -5, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(poly_deg<RationalField>(roots[0].prime) == 1);

  // primary input stays whole: (t-1)^3
  auto pw = primary_factorization(f, poly_pow(f, qpoly({-1, 1}), 3));
  REQUIRE(pw.size() == 1);
  CHECK(pw[0].multiplicity == 3);

  // non-integer root: (t - 1/2)(t + 3)
  auto fr = primary_factorization(f, poly_mul(f, qpoly({-1, 2}), qpoly({3, 1})));
  REQUIRE(fr.size() == 2);

  // irreducible quartic t^4 + 1
  auto irr = primary_factorization(f, qpoly({1, 0, 0, 0, 1}));
  REQUIRE(irr.size() == 1);
  CHECK(poly_deg<RationalField>(irr[0].prime) == 4);
}

TEST_CASE("prime field factorization by trial division") {
  PrimeField f2(2);
  // t^2 + t = t(t+1)
  Poly<PrimeField> p{0, 1, 1};
  auto facs = primary_factorization(f2, p);
  REQUIRE(facs.size() == 2);
  // t^2 + t + 1 is irreducible over F_2
  Poly<PrimeField> irr{1, 1, 1};
  CHECK(primary_factorization(f2, irr).size() == 1);
  // (t^2+t+1)^2 * t over F_2
  auto big = poly_mul(f2, poly_pow(f2, irr, 2), Poly<PrimeField>{0, 1});
  auto bf = primary_factorization(f2, big);
  REQUIRE(bf.size() == 2);
  Poly<PrimeField> rebuilt{1};
  for (auto& fac : bf) rebuilt = poly_mul(f2, rebuilt, fac.primary);
  CHECK(poly_eq(f2, rebuilt, poly_monic(f2, big)));
  PrimeField f97(97);
  // (t - 5)(t - 9) over F_97
  auto q97 = poly_mul(f97, Poly<PrimeField>{f97.from_int(-5), 1},
                      Poly<PrimeField>{f97.from_int(-9), 1});
  CHECK(primary_factorization(f97, q97).size() == 2);
}

TEST_CASE("random factorizations rebuild their input") {
  RationalField f;
  Sampler s(19);
  for (int it = 0; it < 60; ++it) {
    // product of random monic linears and quadratics with small coefficients
    Poly<RationalField> p = qpoly({1});
    int pieces = 1 + static_cast<int>(s.below(3));
    for (int i = 0; i < pieces; ++i) {
      if (s.below(2) == 0)
        p = poly_mul(f, p, qpoly({s.in_range(-3, 3), 1}));
      else
        p = poly_mul(f, p, qpoly({s.in_range(-3, 3), s.in_range(-3, 3), 1}));
    }
    auto facs = primary_factorization(f, p);
    Poly<RationalField> rebuilt = qpoly({1});
    for (auto& fac : facs) rebuilt = poly_mul(f, rebuilt, fac.primary);
    CHECK(poly_eq(f, rebuilt, poly_monic(f, p)));
    // pairwise coprime
    for (std::size_t a = 0; a < facs.size(); ++a)
      for (std::size_t b = a + 1; b < facs.size(); ++b)
        CHECK(poly_deg<RationalField>(poly_gcd(f, facs[a].primary, facs[b].primary)) == 0);
  }
}
