#include "grlwe/pke.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

void check_message_length(const Plaintext& z, uint32_t n) {
  if (z.bits.size() != n)
    raise(errc::dimension_mismatch,
          "message must be exactly n = " + std::to_string(n) + " bits");
}

// Distance from residue a to residue b on the mod-q circle.
uint32_t circle_distance(uint32_t a, uint32_t b, uint32_t q) {
  const uint32_t d = a >= b ? a - b : b - a;
  return std::min(d, q - d);
}

}  // namespace

RingElement encode_bits(const Plaintext& z, uint32_t m, uint32_t q) {
  check_message_length(z, 2 * m);
  RingElement x = gr_zero(m, q);
  for (uint32_t i = 0; i < m; ++i) x.f.coeffs[i] = z.bits[i] & 1;
  for (uint32_t i = 0; i < m; ++i) x.g.coeffs[i] = z.bits[m + i] & 1;
  return x;
}

std::pair<PublicKey, SecretKey> keygen(const ParamSet& params, Rng& rng, ErrorMode mode) {
  const ErrorDist dist = ErrorDist::from_params(params, mode);
  SecretKey sk;
  sk.params = params;
  sk.s = sample_error(dist, rng);
  sk.e = sample_error(dist, rng);
  PublicKey pk;
  pk.params = params;
  pk.a = sample_uniform(params.m, params.q, rng);
  pk.b = gr_add(gr_mul(sk.s, pk.a), sk.e);
  return {pk, sk};
}

Ciphertext encrypt_with(const PublicKey& pk, const Plaintext& z, const RingElement& r,
                        const RingElement& e1, const RingElement& e2) {
  const uint32_t m = pk.params.m;
  const uint32_t q = pk.params.q;
  check_message_length(z, pk.params.n);
  const RingElement encoded = gr_scalar_mul(q / 2, encode_bits(z, m, q));
  Ciphertext ct;
  ct.u = gr_add(gr_mul(pk.a, r), e1);
  ct.v = gr_add(gr_add(gr_mul(pk.b, r), e2), encoded);
  return ct;
}

Ciphertext encrypt(const PublicKey& pk, const Plaintext& z, Rng& rng, ErrorMode mode,
                   EncryptionTrace* trace) {
  const ErrorDist dist = ErrorDist::from_params(pk.params, mode);
  const RingElement r = sample_error(dist, rng);
  const RingElement e1 = sample_error(dist, rng);
  const RingElement e2 = sample_error(dist, rng);
  if (trace) *trace = {r, e1, e2};
  return encrypt_with(pk, z, r, e1, e2);
}

Plaintext decrypt(const SecretKey& sk, const Ciphertext& ct) {
  const uint32_t q = sk.params.q;
  const uint32_t half = q / 2;
  const RingElement d = gr_sub(ct.v, gr_mul(sk.s, ct.u));
  Plaintext z;
  z.bits.resize(sk.params.n);
  const uint32_t m = sk.params.m;
  for (uint32_t i = 0; i < sk.params.n; ++i) {
    const uint32_t c = i < m ? d.f.coeffs[i] : d.g.coeffs[i - m];
    const uint32_t to_zero = circle_distance(c, 0, q);
    const uint32_t to_half = circle_distance(c, half, q);
    z.bits[i] = to_half <= to_zero ? 1 : 0;
  }
  return z;
}

FailureEstimate estimate_failure_rate(const ParamSet& params, uint32_t trials, Rng& rng) {
  if (trials < 100) raise(errc::param_mismatch, "failure estimation needs trials >= 100");
  const uint32_t n = params.n;
  const int64_t quarter = params.q / 4;
  FailureEstimate est;
  est.trials = trials;
  uint32_t noise_ok = 0;
  Plaintext msg;
  msg.bits.resize(n);
  for (uint32_t t = 0; t < trials; ++t) {
    auto [pk, sk] = keygen(params, rng);
    for (auto& b : msg.bits) b = static_cast<uint8_t>(rng.next_u64() & 1);
    EncryptionTrace trace;
    const Ciphertext ct = encrypt(pk, msg, rng, ErrorMode::Rounded, &trace);
    const Plaintext back = decrypt(sk, ct);
    uint32_t bad = 0;
    for (uint32_t i = 0; i < n; ++i) bad += back.bits[i] != msg.bits[i];
    est.bit_failures += bad;
    est.message_failures += bad != 0;
    // noise = e r - s e1 + e2, centered
    const RingElement noise =
        gr_add(gr_sub(gr_mul(sk.e, trace.r), gr_mul(sk.s, trace.e1)), trace.e2);
    int64_t inf = 0;
    for (int64_t c : coeff_embed_centered(noise)) inf = std::max<int64_t>(inf, std::llabs(c));
    est.max_noise_inf = std::max<int64_t>(est.max_noise_inf, inf);
    noise_ok += inf < quarter;
  }
  est.per_message_rate = static_cast<double>(est.message_failures) / trials;
  est.per_bit_rate = static_cast<double>(est.bit_failures) / (static_cast<double>(trials) * n);
  est.noise_within_quarter_q = static_cast<double>(noise_ok) / trials;
  // Wilson 95% interval for the per-message rate.
  const double z = 1.959963984540054;
  const double nn = trials;
  const double p = est.per_message_rate;
  const double denom = 1.0 + z * z / nn;
  const double center = (p + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
  // clamp fp residue so the interval always contains the point estimate
  est.wilson_low = std::min(std::max(0.0, center - half), p);
  est.wilson_high = std::max(std::min(1.0, center + half), p);
  return est;
}

}  // namespace grlwe
