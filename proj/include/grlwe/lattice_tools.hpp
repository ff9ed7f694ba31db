#ifndef GRLWE_LATTICE_TOOLS_HPP
#define GRLWE_LATTICE_TOOLS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "grlwe/group_ring.hpp"

namespace grlwe {

using Rational = mpq_class;

/// Dense matrix over Q; all lattice computations in this module are exact.
struct RatMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}
  static RatMatrix identity(size_t n);
  static RatMatrix from_i64(size_t r, size_t c, const std::vector<int64_t>& entries);

  Rational& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Rational& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

Rational rat_det(const RatMatrix& mat);
RatMatrix rat_inverse(const RatMatrix& mat);  // throws SingularBasis
RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y);
RatMatrix rat_transpose(const RatMatrix& mat);

/// Exact quotient-ring element over Q (same layout as RingElement).
struct RatRingElement {
  std::vector<Rational> f;
  std::vector<Rational> g;

  uint32_t m() const { return static_cast<uint32_t>(f.size()); }
};

RatRingElement rat_gr_mul(const RatRingElement& x, const RatRingElement& y);

/// Exact inverse over Q via the central norm formula; nullopt if singular.
std::optional<RatRingElement> rat_gr_inverse(const RatRingElement& x);
RatRingElement rat_lift(const RingElement& x);       // centered lift
RatRingElement rat_lift(const IntRingElement& x);
bool invertible_over_Q(const RingElement& h);

enum class IdealSide { RightIdeal, LeftModule };

/**
 * Coefficient-embedded lattice of a principal one-sided ideal/module of the
 * integer quotient ring. Rows of `basis` are the embeddings of h*g_j
 * (RightIdeal) or g_j*h (LeftModule) over the 2m monomials g_j. The
 * generator is taken by centered lift of the given mod-q element.
 */
struct IdealLattice {
  RatMatrix basis;
  IdealSide side = IdealSide::RightIdeal;
  RingElement generator;
};

struct DualLattice {
  RatMatrix basis;  // rows dual to the primal rows: dual = (primal^-1)^T
};

/// Oracle-scale (n <= 16); requires h invertible over Q.
IdealLattice ideal_basis(const RingElement& h, IdealSide side);

DualLattice dual_basis(const IdealLattice& lattice);

/// Basis of I^{-1} = R h^{-1} (left fractional ideal), exact rationals.
IdealLattice left_inverse_ideal(const RingElement& h);

/**
 * The quotient-ring dual/inverse correspondence: applying the sign-carrying
 * reversal (x_0, -x_{m-1}, ..., -x_1) to the rotation block of each basis
 * row of the left inverse ideal (identity on the reflection block) must give
 * exactly the dual lattice of hR. In the full group ring the reversal
 * carries no signs; the quotient relation r^m = -1 introduces them.
 */
bool check_dual_permutation(const RingElement& h);

/// True iff v lies in the lattice spanned by the rows of `basis`.
bool lattice_contains(const RatMatrix& basis, const std::vector<Rational>& v);
bool lattice_equal(const RatMatrix& b1, const RatMatrix& b2);

/**
 * Image of the lattice point v (coefficient vector of an element of I)
 * under inclusion into the ring followed by reduction mod q. Throws
 * NotInLattice when v is not a point of L.
 */
RingElement mod_q_projection(const std::vector<int64_t>& v, const IdealLattice& lattice);

}  // namespace grlwe

#endif
