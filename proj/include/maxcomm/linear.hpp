#pragma once

#include <optional>
#include <vector>

#include "maxcomm/domains.hpp"
#include "maxcomm/errors.hpp"

namespace maxcomm {

template <FieldDomain F>
using FVec = std::vector<typename F::Elem>;

template <FieldDomain F>
FVec<F> fvec_zero(const F& f, int width) {
  return FVec<F>(static_cast<std::size_t>(width), f.zero());
}

template <FieldDomain F>
bool fvec_is_zero(const F& f, const FVec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <FieldDomain F>
bool fvec_eq(const F& f, const FVec<F>& a, const FVec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

/// v -= c * w
template <FieldDomain F>
void fvec_submul(const F& f, FVec<F>& v, const typename F::Elem& c, const FVec<F>& w) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], f.mul(c, w[i]));
}

template <FieldDomain F>
void fvec_scale(const F& f, FVec<F>& v, const typename F::Elem& c) {
  for (auto& x : v) x = f.mul(c, x);
}

template <FieldDomain F>
int leading_column(const F& f, const FVec<F>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) return static_cast<int>(i);
  return -1;
}

/// In-place reduced row echelon form over the field F. Zero rows are
/// dropped, pivots are 1, pivot columns are cleared, rows are ordered by
/// pivot column, so the result is a canonical basis of the row space: two
/// subspaces are equal iff their rref bases compare equal.
template <FieldDomain F>
int rref(const F& f, std::vector<FVec<F>>& rows) {
  if (rows.empty()) return 0;
  std::size_t width = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && f.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    typename F::Elem scale = f.inv(rows[r][col]);
    fvec_scale(f, rows[r], scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][col])) continue;
      typename F::Elem c = rows[i][col];
      fvec_submul(f, rows[i], c, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return static_cast<int>(r);
}

/// Residue of v after elimination against an rref basis.
template <FieldDomain F>
FVec<F> reduce_against(const F& f, const std::vector<FVec<F>>& basis, FVec<F> v) {
  for (const auto& row : basis) {
    int piv = leading_column(f, row);
    if (piv < 0 || f.is_zero(v[static_cast<std::size_t>(piv)])) continue;
    typename F::Elem c = v[static_cast<std::size_t>(piv)];
    fvec_submul(f, v, c, row);
  }
  return v;
}

template <FieldDomain F>
bool in_span(const F& f, const std::vector<FVec<F>>& basis, const FVec<F>& v) {
  return fvec_is_zero(f, reduce_against(f, basis, v));
}

/// Coordinates of v with respect to an rref basis, or nullopt if v is
/// outside the span. For an rref basis the coordinate on row r is just the
/// entry of v at that row's pivot column.
template <FieldDomain F>
std::optional<FVec<F>> coordinates_in_basis(const F& f, const std::vector<FVec<F>>& basis,
                                            const FVec<F>& v) {
  FVec<F> coords;
  coords.reserve(basis.size());
  FVec<F> rest = v;
  for (const auto& row : basis) {
    int piv = leading_column(f, row);
    typename F::Elem c = piv < 0 ? f.zero() : rest[static_cast<std::size_t>(piv)];
    coords.push_back(c);
    if (!f.is_zero(c)) fvec_submul(f, rest, c, row);
  }
  if (!fvec_is_zero(f, rest)) return std::nullopt;
  return coords;
}

/// Canonical basis of {x : Mx = 0} where the rows of `constraints` are the
/// equations in `width` unknowns.
template <FieldDomain F>
std::vector<FVec<F>> nullspace(const F& f, std::vector<FVec<F>> constraints, int width) {
  rref(f, constraints);
  std::vector<int> pivot_of_col(static_cast<std::size_t>(width), -1);
  for (std::size_t r = 0; r < constraints.size(); ++r)
    pivot_of_col[static_cast<std::size_t>(leading_column(f, constraints[r]))] =
        static_cast<int>(r);
  std::vector<FVec<F>> basis;
  for (int col = 0; col < width; ++col) {
    if (pivot_of_col[static_cast<std::size_t>(col)] >= 0) continue;
    FVec<F> v = fvec_zero(f, width);
    v[static_cast<std::size_t>(col)] = f.one();
    for (int c = 0; c < width; ++c) {
      int r = pivot_of_col[static_cast<std::size_t>(c)];
      if (r >= 0) v[static_cast<std::size_t>(c)] =
          f.neg(constraints[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
    }
    basis.push_back(std::move(v));
  }
  rref(f, basis);
  return basis;
}

/// Zassenhaus intersection of two row spaces given by bases of width w:
/// row reduce [A | A; B | 0]; rows whose left half vanished carry a basis
/// of the intersection in the right half.
template <FieldDomain F>
std::vector<FVec<F>> intersect_spans(const F& f, const std::vector<FVec<F>>& a,
                                     const std::vector<FVec<F>>& b, int width) {
  std::vector<FVec<F>> stacked;
  stacked.reserve(a.size() + b.size());
  for (const auto& v : a) {
    FVec<F> row = v;
    row.insert(row.end(), v.begin(), v.end());
    stacked.push_back(std::move(row));
  }
  for (const auto& v : b) {
    FVec<F> row = v;
    row.insert(row.end(), static_cast<std::size_t>(width), f.zero());
    stacked.push_back(std::move(row));
  }
  rref(f, stacked);
  std::vector<FVec<F>> result;
  for (const auto& row : stacked) {
    int lead = leading_column(f, row);
    if (lead >= width) {
      result.emplace_back(row.begin() + width, row.end());
    }
  }
  rref(f, result);
  return result;
}

template <FieldDomain F>
bool span_contains_span(const F& f, const std::vector<FVec<F>>& big,
                        const std::vector<FVec<F>>& small) {
  for (const auto& v : small)
    if (!in_span(f, big, v)) return false;
  return true;
}

}  // namespace maxcomm
