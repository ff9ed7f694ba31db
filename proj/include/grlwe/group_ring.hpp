#ifndef GRLWE_GROUP_RING_HPP
#define GRLWE_GROUP_RING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "grlwe/negacyclic.hpp"

namespace grlwe {

/**
 * Element f(r) + s*g(r) of the rank-n dihedral quotient ring over F_q,
 * with f, g of length m = n/2 in S_q = F_q[x]/(x^m+1). The coefficient
 * embedding is the length-n vector (f_0..f_{m-1}, g_0..g_{m-1}).
 */
struct RingElement {
  Poly f;
  Poly g;

  uint32_t m() const { return f.m(); }
  uint32_t n() const { return 2 * f.m(); }
  uint32_t q() const { return f.q; }
  bool operator==(const RingElement&) const = default;
};

RingElement gr_zero(uint32_t m, uint32_t q);
RingElement gr_one(uint32_t m, uint32_t q);
RingElement gr_from_parts(Poly f, Poly g);
RingElement gr_from_i64(const std::vector<int64_t>& f, const std::vector<int64_t>& g, uint32_t q);

std::vector<int64_t> coeff_embed_centered(const RingElement& x);

RingElement gr_add(const RingElement& x, const RingElement& y);
RingElement gr_sub(const RingElement& x, const RingElement& y);
RingElement gr_neg(const RingElement& x);
RingElement gr_scalar_mul(uint32_t c, const RingElement& x);

/**
 * Ring product via the four-multiplication decomposition
 *   (f1 + s f2)(f3 + s f4) = (f1 f3 + f2^s f4) + s (f2 f3 + f1^s f4),
 * exactly four poly_mul and two poly_involution calls.
 */
RingElement gr_mul(const RingElement& x, const RingElement& y, MulMode mode = MulMode::Auto);

/**
 * Ground-truth product through the full 2n x 2n dihedral Cayley table,
 * then reduction by r^m = -1. Test-scale only: n <= 64.
 */
RingElement gr_mul_oracle(const RingElement& x, const RingElement& y);

/// Conjugation by the reflection: s x s = f^s + s g^s. Involutive.
RingElement gr_involution_s(const RingElement& x);

/**
 * Two-sided inverse via the central norm N = f f^s - g^s g in S_q:
 * x^{-1} = (f^s N^{-1}, -g N^{-1}). Throws NotInvertible when N is not
 * a unit of S_q.
 */
RingElement gr_inverse(const RingElement& x);

enum class Norm { L2, Linf };

/// Norm of the centered-lift coefficient embedding.
double coeff_norm(const RingElement& x, Norm kind);

/**
 * Normal-form reduction: given samples (a1, b1), (a2, b2) with b_i = a_i s + e_i,
 * returns a' = a2 a1^{-1} and b' = a' b1 - b2 = a' e1 - e2 (secret eliminated;
 * a' multiplies e1 on the left). Throws NotInvertible when a1 is not a unit.
 */
std::pair<RingElement, RingElement> normal_form_transform(const RingElement& a1,
                                                          const RingElement& b1,
                                                          const RingElement& a2,
                                                          const RingElement& b2);

/**
 * Integer-coefficient twin of RingElement for norm experiments over Z
 * (no modular wrap). Inputs to products must stay below 2^24 in magnitude.
 */
struct IntRingElement {
  std::vector<int64_t> f;
  std::vector<int64_t> g;

  uint32_t m() const { return static_cast<uint32_t>(f.size()); }
  uint32_t n() const { return 2 * m(); }
  bool operator==(const IntRingElement&) const = default;
};

IntRingElement int_gr_mul(const IntRingElement& x, const IntRingElement& y);
IntRingElement int_gr_mul_oracle(const IntRingElement& x, const IntRingElement& y);
double int_norm(const IntRingElement& x, Norm kind);
IntRingElement centered_lift(const RingElement& x);
RingElement reduce_mod_q(const IntRingElement& x, uint32_t q);

}  // namespace grlwe

#endif
