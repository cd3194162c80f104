#pragma once

#include <vector>

#include "maxcomm/matrix.hpp"
#include "maxcomm/zsubspace.hpp"

namespace maxcomm {

template <ScalarDomain D>
bool commutes(const Matrix<D>& a, const Matrix<D>& b) {
  check_compatible(a, b);
  return mat_eq(mat_mul(a, b), mat_mul(b, a));
}

/// Centralizer of a generator set inside M_n(D), as a Z-subspace.
///
/// Commutation with a fixed G is not D-linear when D is noncommutative,
/// but it is always Z-linear, so the solve runs over the center: unknowns
/// are the n^2 * [D:Z] coordinates of X, equations are flatten(X*G - G*X)
/// = 0 for every generator. The result always contains the identity and is
/// closed under multiplication; both facts are re-checked after the solve.
template <ScalarDomain D>
ZSubspace<D> centralizer_basis(const D& dom, int n, const std::vector<Matrix<D>>& gens) {
  const auto& cf = dom.center();
  int m = n * n * dom.center_degree();
  std::vector<CenterVec<D>> constraints;
  for (const auto& g : gens) {
    require(g.dom.same(dom), errc::domain_mismatch, "generator over a different domain");
    require(g.n == n, errc::shape_mismatch, "generator of the wrong size");
    // columns of the constraint block: image of each coordinate basis matrix
    std::vector<CenterVec<D>> cols;
    cols.reserve(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
      CenterVec<D> unit = fvec_zero(cf, m);
      unit[static_cast<std::size_t>(t)] = cf.one();
      Matrix<D> bt = unflatten(dom, n, unit);
      cols.push_back(flatten(mat_sub(mat_mul(bt, g), mat_mul(g, bt))));
    }
    for (int e = 0; e < m; ++e) {
      CenterVec<D> row(static_cast<std::size_t>(m), cf.zero());
      bool nonzero = false;
      for (int t = 0; t < m; ++t) {
        row[static_cast<std::size_t>(t)] = cols[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)];
        nonzero = nonzero || !cf.is_zero(row[static_cast<std::size_t>(t)]);
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  }
  std::vector<CenterVec<D>> sol = nullspace(cf, std::move(constraints), m);
  ZSubspace<D> result{dom, n, std::move(sol)};

  require(zcontains(result, mat_identity(dom, n)), errc::internal_inconsistency,
          "centralizer does not contain the identity");
  auto mats = zbasis_matrices(result);
  for (const auto& x : mats)
    for (const auto& y : mats)
      require(zcontains(result, mat_mul(x, y)), errc::internal_inconsistency,
              "centralizer is not multiplicatively closed");
  return result;
}

/// Centralizer of a Z-subspace: centralizing a set equals centralizing any
/// Z-spanning family of it.
template <ScalarDomain D>
ZSubspace<D> centralizer_of_subspace(const ZSubspace<D>& v) {
  return centralizer_basis(v.dom, v.n, zbasis_matrices(v));
}

template <ScalarDomain D>
ZSubspace<D> bicommutant(const D& dom, int n, const std::vector<Matrix<D>>& gens) {
  return centralizer_of_subspace(centralizer_basis(dom, n, gens));
}

}  // namespace maxcomm
