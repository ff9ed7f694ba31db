#ifndef GRLWE_CODEC_HPP
#define GRLWE_CODEC_HPP

#include <cstdint>
#include <vector>

#include "grlwe/pke.hpp"

namespace grlwe {

/**
 * Wire format, version 0x01. 16-byte header:
 *   magic "GRLW" | version u8 | kind u8 | reserved u16 (zero) | n u32le | q u32le
 * Body: each ring element as f then g coefficients, u32le residues in [0, q);
 * pk = a,b; sk = s,e; ct = u,v; msg = ceil(n/8) bytes, LSB-first bit packing.
 */
enum class ObjectKind : uint8_t {
  PublicKey = 0x01,
  SecretKey = 0x02,
  Ciphertext = 0x03,
  Message = 0x04,
};

struct WireHeader {
  uint8_t version = 1;
  ObjectKind kind = ObjectKind::PublicKey;
  uint32_t n = 0;
  uint32_t q = 0;
};

constexpr size_t kHeaderSize = 16;

std::vector<uint8_t> serialize(const PublicKey& pk);
std::vector<uint8_t> serialize(const SecretKey& sk);
std::vector<uint8_t> serialize(const Ciphertext& ct, const ParamSet& params);
std::vector<uint8_t> serialize(const Plaintext& msg, const ParamSet& params);

/// Parses and validates the 16-byte header only.
WireHeader peek_header(const std::vector<uint8_t>& bytes);

PublicKey deserialize_public_key(const std::vector<uint8_t>& bytes);
SecretKey deserialize_secret_key(const std::vector<uint8_t>& bytes);
Ciphertext deserialize_ciphertext(const std::vector<uint8_t>& bytes, ParamSet* params = nullptr);
Plaintext deserialize_message(const std::vector<uint8_t>& bytes, ParamSet* params = nullptr);

}  // namespace grlwe

#endif
