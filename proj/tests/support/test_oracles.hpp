#ifndef GRLWE_TEST_ORACLES_HPP
#define GRLWE_TEST_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "grlwe/group_ring.hpp"
#include "grlwe/rng.hpp"
#include "grlwe/spectral.hpp"

namespace grlwe::test {

/// Eigenvalues of A(x) A(x)^T from the dense integer regular representation,
/// via an independent dense symmetric eigensolver (Eigen). Sorted ascending.
std::vector<double> dense_gram_eigenvalues(const RegRepMatrix& rep);

/// Determinant of an integer matrix modulo a prime (Gaussian elimination).
uint32_t det_mod_q(const RegRepMatrix& rep, uint32_t q);

RingElement random_element(uint32_t m, uint32_t q, Rng& rng);
RingElement random_ternary(uint32_t m, uint32_t q, Rng& rng);
IntRingElement random_int_element(uint32_t m, int64_t lo, int64_t hi, Rng& rng);

}  // namespace grlwe::test

#endif
