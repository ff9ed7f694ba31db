#ifndef GRLWE_NEGACYCLIC_HPP
#define GRLWE_NEGACYCLIC_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace grlwe {

/**
 * Element of S_q = F_q[x]/(x^m + 1), stored as m canonical residues in [0, q).
 * The centered lift [-q/2, q/2) appears only at decode/norm boundaries.
 */
struct Poly {
  std::vector<uint32_t> coeffs;
  uint32_t q = 0;

  uint32_t m() const { return static_cast<uint32_t>(coeffs.size()); }
  bool operator==(const Poly&) const = default;
};

Poly poly_zero(uint32_t m, uint32_t q);
Poly poly_one(uint32_t m, uint32_t q);
Poly poly_from_i64(const std::vector<int64_t>& c, uint32_t q);
std::vector<int64_t> poly_centered(const Poly& a);

/**
 * Twiddle tables for the negacyclic NTT of length m modulo q, q = 1 (mod 2m).
 * root is a primitive 2m-th root of unity: root^m = -1, root^{2m} = 1.
 * Forward/inverse power tables are stored in bit-reversed order with Shoup
 * precomputations for single-word modular multiplication.
 */
struct NttTables {
  uint32_t q = 0;
  uint32_t m = 0;
  uint32_t root = 0;
  std::vector<uint32_t> zetas;
  std::vector<uint64_t> zetas_shoup;
  std::vector<uint32_t> inv_zetas;
  std::vector<uint64_t> inv_zetas_shoup;
  uint32_t m_inv = 0;
  uint64_t m_inv_shoup = 0;
};

bool ntt_friendly(uint32_t q, uint32_t m);

/// Tables are built once per (q, m) and shared read-only. Throws NttUnavailable.
std::shared_ptr<const NttTables> ntt_tables(uint32_t q, uint32_t m);

enum class MulMode { Schoolbook, Ntt, Auto };

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scalar_mul(uint32_t c, const Poly& a);

/// Product in F_q[x]/(x^m+1). Schoolbook and NTT agree exactly; Auto picks
/// NTT whenever q = 1 (mod 2m).
Poly poly_mul(const Poly& a, const Poly& b, MulMode mode = MulMode::Auto);

/// The ring automorphism f(x) -> f(x^{-1}): fixes the constant term and maps
/// coefficient i to -coefficient (m-i). Involutive.
Poly poly_involution(const Poly& a);

/// Multiplicative inverse; NTT pointwise inversion when available, extended
/// Euclid against x^m + 1 otherwise. Throws NotInvertible.
Poly poly_inverse(const Poly& a);

/// Evaluations at the odd powers of the 2m-th root, bit-reversed order.
std::vector<uint32_t> ntt_forward(const Poly& a);
Poly ntt_inverse(const std::vector<uint32_t>& evals, uint32_t q);

}  // namespace grlwe

#endif
