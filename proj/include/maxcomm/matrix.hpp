#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxcomm/domains.hpp"
#include "maxcomm/errors.hpp"
#include "maxcomm/linear.hpp"
#include "maxcomm/polynomial.hpp"

namespace maxcomm {

/// Square matrix over a division ring D, viewed as an endomorphism of the
/// LEFT D-vector space of row vectors D^n: matrices act on the right,
/// v |-> v*A, and all row operations use left scalars. Row/column indices
/// are 0-based in code; the builders speak the 1-based E_{i,j} language.
template <ScalarDomain D>
struct Matrix {
  D dom;
  int n = 0;
  std::vector<typename D::Elem> ent;  // row-major, n*n entries

  Matrix(const D& d, int size) : dom(d), n(size), ent() {
    require(size >= 1, errc::shape_mismatch, "matrix size must be at least 1");
    ent.assign(static_cast<std::size_t>(n) * n, dom.zero());
  }

  typename D::Elem& at(int i, int j) { return ent[static_cast<std::size_t>(i) * n + j]; }
  const typename D::Elem& at(int i, int j) const {
    return ent[static_cast<std::size_t>(i) * n + j];
  }
};

template <ScalarDomain D>
using RowVec = std::vector<typename D::Elem>;

template <ScalarDomain D>
void check_compatible(const Matrix<D>& a, const Matrix<D>& b) {
  require(a.dom.same(b.dom), errc::domain_mismatch, "matrices over different domains");
  require(a.n == b.n, errc::shape_mismatch, "matrix sizes differ");
}

template <ScalarDomain D>
Matrix<D> mat_zero(const D& dom, int n) {
  return Matrix<D>(dom, n);
}

template <ScalarDomain D>
Matrix<D> mat_identity(const D& dom, int n) {
  Matrix<D> m(dom, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = dom.from_int(1);
  return m;
}

/// E_{i,j} with 1-based indices, as in the usual matrix-unit notation.
template <ScalarDomain D>
Matrix<D> mat_elementary(const D& dom, int n, int i, int j) {
  require(i >= 1 && i <= n && j >= 1 && j <= n, errc::index_out_of_range,
          "elementary unit index outside 1.." + std::to_string(n));
  Matrix<D> m(dom, n);
  m.at(i - 1, j - 1) = dom.from_int(1);
  return m;
}

/// The regular nilpotent single Jordan block E_{1,2} + E_{2,3} + ... + E_{n-1,n}.
template <ScalarDomain D>
Matrix<D> mat_jordan_nilpotent(const D& dom, int n) {
  Matrix<D> m(dom, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = dom.from_int(1);
  return m;
}

/// The corner unit M = E_{1,n}.
template <ScalarDomain D>
Matrix<D> mat_corner(const D& dom, int n) {
  return mat_elementary(dom, n, 1, n);
}

template <ScalarDomain D>
bool mat_eq(const Matrix<D>& a, const Matrix<D>& b) {
  if (!a.dom.same(b.dom) || a.n != b.n) return false;
  for (std::size_t t = 0; t < a.ent.size(); ++t)
    if (!a.dom.eq(a.ent[t], b.ent[t])) return false;
  return true;
}

template <ScalarDomain D>
bool mat_is_zero(const Matrix<D>& a) {
  for (const auto& x : a.ent)
    if (!a.dom.is_zero(x)) return false;
  return true;
}

template <ScalarDomain D>
Matrix<D> mat_add(const Matrix<D>& a, const Matrix<D>& b) {
  check_compatible(a, b);
  Matrix<D> r = a;
  for (std::size_t t = 0; t < r.ent.size(); ++t) r.ent[t] = a.dom.add(a.ent[t], b.ent[t]);
  return r;
}

template <ScalarDomain D>
Matrix<D> mat_sub(const Matrix<D>& a, const Matrix<D>& b) {
  check_compatible(a, b);
  Matrix<D> r = a;
  for (std::size_t t = 0; t < r.ent.size(); ++t) r.ent[t] = a.dom.sub(a.ent[t], b.ent[t]);
  return r;
}

template <ScalarDomain D>
Matrix<D> mat_neg(const Matrix<D>& a) {
  Matrix<D> r = a;
  for (auto& x : r.ent) x = a.dom.neg(x);
  return r;
}

template <ScalarDomain D>
Matrix<D> mat_mul(const Matrix<D>& a, const Matrix<D>& b) {
  check_compatible(a, b);
  Matrix<D> r(a.dom, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const auto& aik = a.at(i, k);
      if (a.dom.is_zero(aik)) continue;
      for (int j = 0; j < a.n; ++j)
        r.at(i, j) = a.dom.add(r.at(i, j), a.dom.mul(aik, b.at(k, j)));
    }
  return r;
}

/// d * A entrywise from the left; realizes sets like D*E_{1,n} and L*N.
template <ScalarDomain D>
Matrix<D> mat_scale_left(const typename D::Elem& d, const Matrix<D>& a) {
  Matrix<D> r = a;
  for (auto& x : r.ent) x = a.dom.mul(d, x);
  return r;
}

template <ScalarDomain D>
Matrix<D> mat_pow(const Matrix<D>& a, int k) {
  require(k >= 0, errc::index_out_of_range, "negative matrix power");
  Matrix<D> acc = mat_identity(a.dom, a.n);
  Matrix<D> base = a;
  while (k > 0) {
    if (k & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return acc;
}

/// Left row space in reduced echelon form: pivots are 1, pivot columns are
/// cleared, pivot columns strictly increase. Canonical, so two row spaces
/// are equal iff the stored rows compare equal.
template <ScalarDomain D>
struct RowSpace {
  D dom;
  int width = 0;
  std::vector<RowVec<D>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
};

namespace detail {

/// In-place reduced echelon form of rows of the given width using LEFT
/// scalar row operations; entries beyond `width` (augmentation) ride along.
template <ScalarDomain D>
int echelon_left(const D& dom, std::vector<RowVec<D>>& rows, int width) {
  std::size_t r = 0;
  for (int col = 0; col < width && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && dom.is_zero(rows[piv][static_cast<std::size_t>(col)])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    typename D::Elem lead = rows[r][static_cast<std::size_t>(col)];
    if (!dom.eq(lead, dom.from_int(1))) {
      typename D::Elem s = dom.inv(lead);
      for (auto& x : rows[r]) x = dom.mul(s, x);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      typename D::Elem c = rows[i][static_cast<std::size_t>(col)];
      if (dom.is_zero(c)) continue;
      for (std::size_t t = 0; t < rows[i].size(); ++t)
        rows[i][t] = dom.sub(rows[i][t], dom.mul(c, rows[r][t]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace detail

template <ScalarDomain D>
RowSpace<D> row_space_from(const D& dom, int width, std::vector<RowVec<D>> rows) {
  int rank = detail::echelon_left(dom, rows, width);
  rows.resize(static_cast<std::size_t>(rank));
  return RowSpace<D>{dom, width, std::move(rows)};
}

template <ScalarDomain D>
struct RowReduceOutcome {
  RowSpace<D> echelon;
  int rank = 0;
};

/// Reduced echelon form of the rows of A over D; rank is the left row rank
/// (= right column rank over a division ring).
template <ScalarDomain D>
RowReduceOutcome<D> row_reduce(const Matrix<D>& a) {
  std::vector<RowVec<D>> rows;
  rows.reserve(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i)
    rows.emplace_back(a.ent.begin() + static_cast<std::size_t>(i) * a.n,
                      a.ent.begin() + static_cast<std::size_t>(i + 1) * a.n);
  RowSpace<D> sp = row_space_from(a.dom, a.n, std::move(rows));
  int rank = sp.dim();
  return {std::move(sp), rank};
}

template <ScalarDomain D>
int mat_rank(const Matrix<D>& a) {
  return row_reduce(a).rank;
}

template <ScalarDomain D>
struct KernelImage {
  RowSpace<D> kernel;  // {v : v*A = 0}
  RowSpace<D> image;   // left row space of A
};

/// Kernel and image of v |-> v*A. Row-reducing the augmented block [A | I]
/// keeps the invariant left = right * A, so rows whose left half vanishes
/// carry kernel vectors in the right half.
template <ScalarDomain D>
KernelImage<D> kernel_image(const Matrix<D>& a) {
  int n = a.n;
  std::vector<RowVec<D>> aug;
  aug.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RowVec<D> row(a.ent.begin() + static_cast<std::size_t>(i) * n,
                  a.ent.begin() + static_cast<std::size_t>(i + 1) * n);
    for (int j = 0; j < n; ++j)
      row.push_back(i == j ? a.dom.from_int(1) : a.dom.zero());
    aug.push_back(std::move(row));
  }
  int rank = detail::echelon_left(a.dom, aug, n);
  std::vector<RowVec<D>> image_rows, kernel_rows;
  for (int i = 0; i < n; ++i) {
    RowVec<D> left(aug[static_cast<std::size_t>(i)].begin(),
                   aug[static_cast<std::size_t>(i)].begin() + n);
    RowVec<D> right(aug[static_cast<std::size_t>(i)].begin() + n,
                    aug[static_cast<std::size_t>(i)].end());
    if (i < rank)
      image_rows.push_back(std::move(left));
    else
      kernel_rows.push_back(std::move(right));
  }
  return {row_space_from(a.dom, n, std::move(kernel_rows)),
          RowSpace<D>{a.dom, n, std::move(image_rows)}};
}

/// Two-sided inverse by Gauss-Jordan over D; throws `singular` when
/// rank < n.
template <ScalarDomain D>
Matrix<D> mat_inverse(const Matrix<D>& a) {
  int n = a.n;
  std::vector<RowVec<D>> aug;
  for (int i = 0; i < n; ++i) {
    RowVec<D> row(a.ent.begin() + static_cast<std::size_t>(i) * n,
                  a.ent.begin() + static_cast<std::size_t>(i + 1) * n);
    for (int j = 0; j < n; ++j)
      row.push_back(i == j ? a.dom.from_int(1) : a.dom.zero());
    aug.push_back(std::move(row));
  }
  int rank = detail::echelon_left(a.dom, aug, n);
  require(rank == n, errc::singular, "matrix is not invertible");
  Matrix<D> inv(a.dom, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv.at(i, j) = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
  return inv;
}

template <ScalarDomain D>
bool mat_is_invertible(const Matrix<D>& a) {
  return mat_rank(a) == a.n;
}

/// Nilpotency in M_n(D); the index of a nilpotent matrix is at most n.
template <ScalarDomain D>
bool mat_is_nilpotent(const Matrix<D>& a) {
  return mat_is_zero(mat_pow(a, a.n));
}

template <ScalarDomain D>
using CenterField = typename D::Center;

template <ScalarDomain D>
using CenterVec = FVec<typename D::Center>;

/// Z-coordinates of A: entry (i,j) contributes its center_degree()
/// coordinates at offset (i*n + j) * center_degree(). The bijective
/// coordinatization behind every Z-linear solve.
template <ScalarDomain D>
CenterVec<D> flatten(const Matrix<D>& a) {
  CenterVec<D> v;
  v.reserve(a.ent.size() * static_cast<std::size_t>(a.dom.center_degree()));
  for (const auto& x : a.ent) {
    auto coords = a.dom.center_coords(x);
    v.insert(v.end(), coords.begin(), coords.end());
  }
  return v;
}

template <ScalarDomain D>
Matrix<D> unflatten(const D& dom, int n, const CenterVec<D>& v) {
  int zdim = dom.center_degree();
  require(static_cast<std::size_t>(n) * n * zdim == v.size(), errc::length_mismatch,
          "flattened vector has wrong length");
  Matrix<D> m(dom, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t off = (static_cast<std::size_t>(i) * n + j) * zdim;
      std::vector<typename D::Center::Elem> coords(v.begin() + off, v.begin() + off + zdim);
      m.at(i, j) = dom.from_center_coords(coords);
    }
  return m;
}

/// Z-coordinates of a row vector in D^n (length n * center_degree()).
template <ScalarDomain D>
CenterVec<D> flatten_row(const D& dom, const RowVec<D>& row) {
  CenterVec<D> v;
  v.reserve(row.size() * static_cast<std::size_t>(dom.center_degree()));
  for (const auto& x : row) {
    auto coords = dom.center_coords(x);
    v.insert(v.end(), coords.begin(), coords.end());
  }
  return v;
}

/// Least-degree monic p over Z with p(A) = 0, relative to the unit
/// `one`: powers are one, A, A^2, ... (pass the ambient identity for the
/// ordinary minimal polynomial, or an idempotent e for the minimal
/// polynomial of A inside the corner algebra e*S*e).
template <ScalarDomain D>
Poly<typename D::Center> min_poly_relative(const Matrix<D>& a, const Matrix<D>& one) {
  const auto& cf = a.dom.center();
  using CF = typename D::Center;
  std::size_t m = a.ent.size() * static_cast<std::size_t>(a.dom.center_degree());
  std::size_t max_deg = m + 1;
  // incremental elimination rows: [flatten(power) | dependency tail]
  std::vector<FVec<CF>> rows;
  std::vector<int> pivots;
  Matrix<D> power = one;
  for (std::size_t k = 0; k <= max_deg; ++k) {
    FVec<CF> v = flatten(power);
    v.resize(m + max_deg + 1, cf.zero());
    v[m + k] = cf.one();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto c = v[static_cast<std::size_t>(pivots[r])];
      if (!cf.is_zero(c)) fvec_submul(cf, v, c, rows[r]);
    }
    int lead = -1;
    for (std::size_t t = 0; t < m; ++t)
      if (!cf.is_zero(v[t])) {
        lead = static_cast<int>(t);
        break;
      }
    if (lead < 0) {
      Poly<CF> p(v.begin() + m, v.begin() + m + k + 1);
      poly_normalize(cf, p);
      return p;
    }
    auto s = cf.inv(v[static_cast<std::size_t>(lead)]);
    fvec_scale(cf, v, s);
    // keep rows ordered by pivot column so reduction scans stay valid
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < lead) ++pos;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    power = mat_mul(power, a);
  }
  raise(errc::internal_inconsistency, "no linear dependency among matrix powers");
}

template <ScalarDomain D>
Poly<typename D::Center> min_poly(const Matrix<D>& a) {
  return min_poly_relative(a, mat_identity(a.dom, a.n));
}

/// Evaluates a polynomial over Z at the matrix A, with the constant term
/// landing on `one` (ambient identity or a relative idempotent).
template <ScalarDomain D>
Matrix<D> poly_eval_matrix(const Poly<typename D::Center>& p, const Matrix<D>& a,
                           const Matrix<D>& one) {
  Matrix<D> acc = mat_zero(a.dom, a.n);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = mat_mul(acc, a);
    acc = mat_add(acc, mat_scale_left(a.dom.from_center(p[i]), one));
  }
  return acc;
}

template <ScalarDomain D>
std::string mat_str(const Matrix<D>& a) {
  std::string s = "[";
  for (int i = 0; i < a.n; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < a.n; ++j) s += (j ? ", " : "") + a.dom.str(a.at(i, j));
  }
  return s + "]";
}

}  // namespace maxcomm
