#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxcomm/linear.hpp"
#include "maxcomm/matrix.hpp"

namespace maxcomm {

/// Z-linear subspace of M_n(D), stored as the canonical reduced echelon
/// basis of flattened coordinate vectors. Two subspaces are equal iff
/// their canonical bases are identical.
template <ScalarDomain D>
struct ZSubspace {
  D dom;
  int n = 0;
  std::vector<CenterVec<D>> basis;  // rref rows of width n*n*center_degree()

  int dim() const { return static_cast<int>(basis.size()); }
  int ambient_dim() const { return n * n * dom.center_degree(); }
};

template <ScalarDomain D>
ZSubspace<D> zspan_of_vectors(const D& dom, int n, std::vector<CenterVec<D>> vecs) {
  rref(dom.center(), vecs);
  return ZSubspace<D>{dom, n, std::move(vecs)};
}

template <ScalarDomain D>
ZSubspace<D> zspan(const D& dom, int n, const std::vector<Matrix<D>>& gens) {
  std::vector<CenterVec<D>> vecs;
  vecs.reserve(gens.size());
  for (const auto& g : gens) {
    require(g.dom.same(dom), errc::domain_mismatch, "generator over a different domain");
    require(g.n == n, errc::shape_mismatch, "generator of the wrong size");
    vecs.push_back(flatten(g));
  }
  return zspan_of_vectors(dom, n, std::move(vecs));
}

template <ScalarDomain D>
ZSubspace<D> zspace_full(const D& dom, int n) {
  int m = n * n * dom.center_degree();
  std::vector<CenterVec<D>> vecs;
  vecs.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    CenterVec<D> v = fvec_zero(dom.center(), m);
    v[static_cast<std::size_t>(t)] = dom.center().one();
    vecs.push_back(std::move(v));
  }
  return ZSubspace<D>{dom, n, std::move(vecs)};
}

template <ScalarDomain D>
bool zcontains(const ZSubspace<D>& space, const CenterVec<D>& v) {
  return in_span(space.dom.center(), space.basis, v);
}

template <ScalarDomain D>
bool zcontains(const ZSubspace<D>& space, const Matrix<D>& m) {
  return zcontains(space, flatten(m));
}

template <ScalarDomain D>
bool zspace_eq(const ZSubspace<D>& a, const ZSubspace<D>& b) {
  if (!a.dom.same(b.dom) || a.n != b.n || a.basis.size() != b.basis.size()) return false;
  const auto& cf = a.dom.center();
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (!fvec_eq(cf, a.basis[i], b.basis[i])) return false;
  return true;
}

template <ScalarDomain D>
bool zspace_subset(const ZSubspace<D>& small, const ZSubspace<D>& big) {
  return span_contains_span(small.dom.center(), big.basis, small.basis);
}

template <ScalarDomain D>
ZSubspace<D> zspace_intersect(const ZSubspace<D>& a, const ZSubspace<D>& b) {
  require(a.dom.same(b.dom) && a.n == b.n, errc::shape_mismatch,
          "intersection of subspaces of different ambient spaces");
  auto rows = intersect_spans(a.dom.center(), a.basis, b.basis, a.ambient_dim());
  return ZSubspace<D>{a.dom, a.n, std::move(rows)};
}

/// Sum of subspaces (canonicalized union of bases).
template <ScalarDomain D>
ZSubspace<D> zspace_sum(const ZSubspace<D>& a, const ZSubspace<D>& b) {
  require(a.dom.same(b.dom) && a.n == b.n, errc::shape_mismatch,
          "sum of subspaces of different ambient spaces");
  std::vector<CenterVec<D>> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return zspan_of_vectors(a.dom, a.n, std::move(rows));
}

template <ScalarDomain D>
std::vector<Matrix<D>> zbasis_matrices(const ZSubspace<D>& space) {
  std::vector<Matrix<D>> mats;
  mats.reserve(space.basis.size());
  for (const auto& v : space.basis) mats.push_back(unflatten(space.dom, space.n, v));
  return mats;
}

/// Deterministic serialization used as a deduplication key.
template <ScalarDomain D>
std::string zspace_key(const ZSubspace<D>& space) {
  const auto& cf = space.dom.center();
  std::string key = std::to_string(space.n) + "|";
  for (const auto& row : space.basis) {
    for (const auto& x : row) {
      key += cf.str(x);
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace maxcomm
