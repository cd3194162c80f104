#pragma once

#include <vector>

#include "maxcomm/centralizer.hpp"
#include "maxcomm/subalgebra.hpp"

namespace maxcomm {

enum class Lemma1Variant { plain_n, l_n };

/// Z-spanning family of L*N (the subfield multiples of the regular
/// nilpotent) and of D*M (all division-ring multiples of the corner unit).
template <ScalarDomain D>
std::vector<Matrix<D>> subfield_multiples(const D& dom, const Matrix<D>& m) {
  std::vector<Matrix<D>> out;
  for (const auto& l : dom.subfield_basis()) out.push_back(mat_scale_left(l, m));
  return out;
}

template <ScalarDomain D>
std::vector<Matrix<D>> center_degree_multiples(const D& dom, const Matrix<D>& m) {
  std::vector<Matrix<D>> out;
  for (const auto& d : dom.center_basis()) out.push_back(mat_scale_left(d, m));
  return out;
}

/// Claimed centralizer of the regular nilpotent N: the banded sums
///   plain_n:  D*I + D*N + ... + D*N^{n-1}
///   l_n:      L*I + L*N + ... + L*N^{n-2} + D*N^{n-1}
/// (N^{n-1} is the corner unit E_{1,n}).
template <ScalarDomain D>
ZSubspace<D> lemma1_claim(const D& dom, int n, Lemma1Variant variant) {
  require(n >= 2, errc::shape_mismatch, "banded centralizer claims need n >= 2");
  std::vector<Matrix<D>> gens;
  Matrix<D> nmat = mat_jordan_nilpotent(dom, n);
  Matrix<D> power = mat_identity(dom, n);
  for (int k = 0; k < n; ++k) {
    bool full_ring = variant == Lemma1Variant::plain_n || k == n - 1;
    const auto coeffs = full_ring ? dom.center_basis() : dom.subfield_basis();
    for (const auto& c : coeffs) gens.push_back(mat_scale_left(c, power));
    power = mat_mul(power, nmat);
  }
  return zspan(dom, n, gens);
}

template <ScalarDomain D>
ZSubspace<D> lemma1_computed(const D& dom, int n, Lemma1Variant variant) {
  Matrix<D> nmat = mat_jordan_nilpotent(dom, n);
  std::vector<Matrix<D>> gens = variant == Lemma1Variant::plain_n
                                    ? std::vector<Matrix<D>>{nmat}
                                    : subfield_multiples(dom, nmat);
  return centralizer_basis(dom, n, gens);
}

template <ScalarDomain D>
bool lemma1_verify(const D& dom, int n, Lemma1Variant variant) {
  return zspace_eq(lemma1_computed(dom, n, variant), lemma1_claim(dom, n, variant));
}

/// Claimed centralizer of D*E_{1,n}: first column zero below the corner
/// of the diagonal, last row zero before the corner, and the (1,1) and
/// (n,n) entries equal and central; every other entry free over D.
template <ScalarDomain D>
ZSubspace<D> lemma2_claim(const D& dom, int n) {
  require(n >= 2, errc::shape_mismatch, "corner centralizer claims need n >= 2");
  std::vector<Matrix<D>> gens;
  Matrix<D> diag(dom, n);
  diag.at(0, 0) = dom.from_int(1);
  diag.at(n - 1, n - 1) = dom.from_int(1);
  gens.push_back(diag);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if ((i == 1 && j == 1) || (i == n && j == n)) continue;
      if (j == 1 && i > 1) continue;
      if (i == n && j < n) continue;
      for (const auto& d : dom.center_basis())
        gens.push_back(mat_scale_left(d, mat_elementary(dom, n, i, j)));
    }
  return zspan(dom, n, gens);
}

template <ScalarDomain D>
ZSubspace<D> lemma2_computed(const D& dom, int n) {
  return centralizer_basis(dom, n, center_degree_multiples(dom, mat_corner(dom, n)));
}

template <ScalarDomain D>
bool lemma2_verify(const D& dom, int n) {
  return zspace_eq(lemma2_computed(dom, n), lemma2_claim(dom, n));
}

template <ScalarDomain D>
void require_proper_subfield(const D& dom) {
  require(dom.subfield_degree() < dom.center_degree(), errc::unsupported_domain,
          "this construction needs a proper maximal subfield (L strictly inside D); "
          "over a field the construction degenerates");
}

/// The banded ring of Example 1: the centralizer of L*N together with all
/// of D*E_{1,n}. Equals Z*I + L*N + ... + L*N^{n-2} + D*E_{1,n}: upper
/// triangular bands with central diagonal, subfield bands and a free
/// corner.
template <ScalarDomain D>
Subalgebra<D> example1_ring(const D& dom, int n) {
  require_proper_subfield(dom);
  require(n >= 2, errc::shape_mismatch, "the banded ring needs n >= 2");
  Matrix<D> nmat = mat_jordan_nilpotent(dom, n);
  std::vector<Matrix<D>> gens = subfield_multiples(dom, nmat);
  for (auto& g : center_degree_multiples(dom, mat_corner(dom, n))) gens.push_back(std::move(g));
  Subalgebra<D> ring = make_subalgebra(centralizer_basis(dom, n, gens));

  // shape: Z*I, subfield bands, free corner
  std::vector<Matrix<D>> claim{mat_identity(dom, n)};
  Matrix<D> power = nmat;
  for (int k = 1; k <= n - 2; ++k) {
    for (const auto& l : dom.subfield_basis()) claim.push_back(mat_scale_left(l, power));
    power = mat_mul(power, nmat);
  }
  for (const auto& d : dom.center_basis())
    claim.push_back(mat_scale_left(d, mat_corner(dom, n)));
  require(zspace_eq(ring.space, zspan(dom, n, claim)), errc::verification_failed,
          "computed banded ring does not match its claimed shape");
  return ring;
}

struct Example1Verification {
  bool maximal_commutative = false;
  bool ideal_property = false;
  bool local = false;
  bool all() const { return maximal_commutative && ideal_property && local; }
};

/// Checks of the banded ring: maximal commutativity, the finitely
/// checkable ideal property of the corner line (r * dE_{1,n} and
/// dE_{1,n} * r stay inside Z * dE_{1,n}), and locality.
template <ScalarDomain D>
Example1Verification example1_verify(const D& dom, int n) {
  Subalgebra<D> ring = example1_ring(dom, n);
  Example1Verification v;
  v.maximal_commutative = is_maximal_commutative(ring);
  v.ideal_property = true;
  for (const auto& d : dom.center_basis()) {
    Matrix<D> corner_multiple = mat_scale_left(d, mat_corner(dom, n));
    ZSubspace<D> line = zspan(dom, n, {corner_multiple});
    for (const auto& r : ring.basis) {
      if (!zcontains(line, mat_mul(r, corner_multiple)) ||
          !zcontains(line, mat_mul(corner_multiple, r)))
        v.ideal_property = false;
    }
  }
  v.local = is_local(ring);
  return v;
}

/// The ring of Example 2: the centralizer of L*I together with L*N, i.e.
/// the polynomials L[N] inside M_n(L).
template <ScalarDomain D>
Subalgebra<D> example2_ring(const D& dom, int n) {
  require_proper_subfield(dom);
  require(n >= 2, errc::shape_mismatch, "the polynomial ring example needs n >= 2");
  Matrix<D> nmat = mat_jordan_nilpotent(dom, n);
  std::vector<Matrix<D>> gens = subfield_multiples(dom, mat_identity(dom, n));
  for (auto& g : subfield_multiples(dom, nmat)) gens.push_back(std::move(g));
  return make_subalgebra(centralizer_basis(dom, n, gens));
}

struct Example2Verification {
  bool equals_ln_polynomials = false;
  bool maximal_commutative = false;
  int dim_over_l = 0;
  bool has_nilpotents = false;
  bool all() const {
    return equals_ln_polynomials && maximal_commutative && has_nilpotents;
  }
};

template <ScalarDomain D>
Example2Verification example2_verify(const D& dom, int n) {
  Subalgebra<D> ring = example2_ring(dom, n);
  Example2Verification v;
  std::vector<Matrix<D>> claim;
  Matrix<D> nmat = mat_jordan_nilpotent(dom, n);
  Matrix<D> power = mat_identity(dom, n);
  for (int k = 0; k < n; ++k) {
    for (const auto& l : dom.subfield_basis()) claim.push_back(mat_scale_left(l, power));
    power = mat_mul(power, nmat);
  }
  v.equals_ln_polynomials = zspace_eq(ring.space, zspan(dom, n, claim));
  v.maximal_commutative = is_maximal_commutative(ring);
  v.dim_over_l = ring.dim() / dom.subfield_degree();
  v.has_nilpotents = zcontains(ring.space, nmat) && mat_is_nilpotent(nmat);
  return v;
}

}  // namespace maxcomm
