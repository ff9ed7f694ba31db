#ifndef GRLWE_SPECTRAL_HPP
#define GRLWE_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "grlwe/group_ring.hpp"
#include "grlwe/rng.hpp"

namespace grlwe {

/**
 * Magnitudes of the two coefficient polynomials at the odd roots of unity
 * zeta^k, zeta = e^{2*pi*i/n}. Only odd k appear: the quotient relation
 * r^m = -1 annihilates the even-k (and one-dimensional) components of the
 * full group algebra, leaving evaluations at the roots of x^m + 1.
 * Conjugate pairs k and n-k coincide, so the canonical storage keeps odd k
 * with 1 <= k < n/2 only; tests validate this restriction against the dense
 * regular representation.
 */
struct SpectralEntry {
  uint32_t k = 0;
  double abs_f = 0.0;
  double abs_g = 0.0;
};

struct SpectralProfile {
  uint32_t n = 0;
  std::vector<SpectralEntry> evals;
};

/// Profile of an element given by real coefficient vectors (length m each).
SpectralProfile spectral_profile(const std::vector<double>& f, const std::vector<double>& g);

/// Profile of a mod-q element; coefficients are centered-lifted first.
SpectralProfile spectral_profile(const RingElement& x);

/// Largest |f| + |g| over the profile: the square root of the top eigenvalue
/// of A(h) A(h)^T on the quotient.
double matrix_norm(const SpectralProfile& profile);
double matrix_norm(const RingElement& x);
double matrix_norm(const std::vector<double>& f, const std::vector<double>& g);

/**
 * Eigenvalue multiset of A(h) A(h)^T predicted by the profile:
 * (|f| + |g|)^2 and (|f| - |g|)^2 per stored k, each with multiplicity 2
 * from the conjugate pair. Returned sorted ascending, length n.
 */
std::vector<double> formula_eigenvalues(const RingElement& x);

/**
 * Invertibility over the rationalized ring: true iff every stored k keeps
 * | |f(zeta^k)| - |g(zeta^k)| | above tol * (1 + matrix_norm).
 */
bool is_invertible_real(const RingElement& x, double tol = 1e-9);

enum class RepField { Integers, ModQ };

/**
 * Dense matrix of left multiplication by x on the monomial basis
 * {1, r, ..., r^{m-1}, s, sr, ..., sr^{m-1}}; column j is the coefficient
 * embedding of x * (basis monomial j). Oracle-scale: n <= 64.
 */
struct RegRepMatrix {
  uint32_t n = 0;
  std::vector<int64_t> entries;  // row-major n x n

  int64_t at(uint32_t row, uint32_t col) const { return entries[row * n + col]; }
};

RegRepMatrix reg_rep_matrix(const RingElement& x, RepField field);

/**
 * Monte Carlo tail of the matrix norm for elements with i.i.d. N(0, sigma^2)
 * coefficients: fraction of `trials` samples whose matrix norm exceeds
 * threshold_mult * sigma * sqrt(n).
 */
double gauss_norm_tail(double sigma, uint32_t n, uint32_t trials, double threshold_mult, Rng& rng);

}  // namespace grlwe

#endif
