#ifndef GRLWE_PKE_HPP
#define GRLWE_PKE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "grlwe/group_ring.hpp"
#include "grlwe/params.hpp"
#include "grlwe/rng.hpp"
#include "grlwe/sampler.hpp"

namespace grlwe {

struct SecretKey {
  RingElement s;
  RingElement e;  // kept for diagnostics; decryption never reads it
  ParamSet params;
};

struct PublicKey {
  RingElement a;
  RingElement b;  // b = s a + e
  ParamSet params;
};

struct Ciphertext {
  RingElement u;
  RingElement v;
};

/// A message is one bit per coefficient: exactly n bits.
struct Plaintext {
  std::vector<uint8_t> bits;
};

/// Bits as a 0/1-coefficient ring element (first m bits -> f, rest -> g).
RingElement encode_bits(const Plaintext& z, uint32_t m, uint32_t q);

/**
 * s, e from the error distribution; a uniform; b = s a + e. The secret
 * multiplies on the left throughout the scheme.
 */
std::pair<PublicKey, SecretKey> keygen(const ParamSet& params, Rng& rng,
                                       ErrorMode mode = ErrorMode::Rounded);

struct EncryptionTrace {
  RingElement r;
  RingElement e1;
  RingElement e2;
};

/**
 * u = a r + e1, v = b r + e2 + floor(q/2) z with fresh error-distributed
 * r, e1, e2 (the ephemeral r multiplies on the right of a and b). The
 * optional trace captures the randomness for identity-checking tests.
 */
Ciphertext encrypt(const PublicKey& pk, const Plaintext& z, Rng& rng,
                   ErrorMode mode = ErrorMode::Rounded, EncryptionTrace* trace = nullptr);

/// Encryption with caller-supplied randomness (e.g. all-zero for the
/// noiseless path).
Ciphertext encrypt_with(const PublicKey& pk, const Plaintext& z, const RingElement& r,
                        const RingElement& e1, const RingElement& e2);

/**
 * d = v - s u; bit i is 0 when the centered lift of d_i is closer to 0 than
 * to floor(q/2) (distance mod q), 1 otherwise; exact midpoints decode to 1.
 */
Plaintext decrypt(const SecretKey& sk, const Ciphertext& ct);

struct FailureEstimate {
  uint32_t trials = 0;
  uint32_t message_failures = 0;
  uint64_t bit_failures = 0;
  double per_message_rate = 0.0;
  double per_bit_rate = 0.0;
  double wilson_low = 0.0;    // 95% interval for the per-message rate
  double wilson_high = 0.0;
  int64_t max_noise_inf = 0;  // max over trials of ||e r - s e1 + e2||_inf
  double noise_within_quarter_q = 0.0;  // fraction of trials with the above < q/4
};

/// Monte Carlo over fresh keys and messages; trials >= 100.
FailureEstimate estimate_failure_rate(const ParamSet& params, uint32_t trials, Rng& rng);

}  // namespace grlwe

#endif
