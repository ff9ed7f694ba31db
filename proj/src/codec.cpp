#include "grlwe/codec.hpp"

#include <cstring>
#include <string>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

constexpr char kMagic[4] = {'G', 'R', 'L', 'W'};
constexpr uint8_t kVersion = 0x01;

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 24));
}

uint32_t get_u32le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

std::vector<uint8_t> make_header(ObjectKind kind, uint32_t n, uint32_t q) {
  std::vector<uint8_t> out;
  out.reserve(kHeaderSize);
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(kind));
  out.push_back(0);
  out.push_back(0);
  put_u32le(out, n);
  put_u32le(out, q);
  return out;
}

void append_element(std::vector<uint8_t>& out, const RingElement& x) {
  for (uint32_t c : x.f.coeffs) put_u32le(out, c);
  for (uint32_t c : x.g.coeffs) put_u32le(out, c);
}

RingElement read_element(const uint8_t* p, uint32_t m, uint32_t q) {
  RingElement x = gr_zero(m, q);
  for (uint32_t i = 0; i < m; ++i) {
    const uint32_t c = get_u32le(p + 4 * i);
    if (c >= q) raise(errc::coefficient_out_of_range, "residue >= q in body");
    x.f.coeffs[i] = c;
  }
  for (uint32_t i = 0; i < m; ++i) {
    const uint32_t c = get_u32le(p + 4 * (m + i));
    if (c >= q) raise(errc::coefficient_out_of_range, "residue >= q in body");
    x.g.coeffs[i] = c;
  }
  return x;
}

bool is_power_of_two(uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

WireHeader parse_header(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize) raise(errc::truncated_body, "shorter than the 16-byte header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) raise(errc::bad_magic, "magic is not GRLW");
  if (bytes[4] != kVersion)
    raise(errc::unsupported_version, "version " + std::to_string(bytes[4]) + " unknown");
  if (bytes[6] != 0 || bytes[7] != 0) raise(errc::bad_magic, "reserved header bytes set");
  const uint8_t kind = bytes[5];
  if (kind < 0x01 || kind > 0x04)
    raise(errc::param_mismatch, "object kind " + std::to_string(kind) + " unknown");
  WireHeader h;
  h.version = bytes[4];
  h.kind = static_cast<ObjectKind>(kind);
  h.n = get_u32le(bytes.data() + 8);
  h.q = get_u32le(bytes.data() + 12);
  if (!is_power_of_two(h.n) || h.n < 4) raise(errc::param_mismatch, "n is not a power of two >= 4");
  if (h.q < 3 || h.q % 2 == 0 || !is_prime(h.q))
    raise(errc::param_mismatch, "q is not an odd prime");
  return h;
}

void expect_kind(const WireHeader& h, ObjectKind want) {
  if (h.kind != want)
    raise(errc::param_mismatch, "object kind does not match the requested type");
}

void expect_body(const std::vector<uint8_t>& bytes, size_t body_len) {
  if (bytes.size() != kHeaderSize + body_len)
    raise(errc::truncated_body, "body length " + std::to_string(bytes.size() - kHeaderSize) +
                                    ", expected " + std::to_string(body_len));
}

std::vector<uint8_t> serialize_pair(ObjectKind kind, const RingElement& first,
                                    const RingElement& second, uint32_t n, uint32_t q) {
  std::vector<uint8_t> out = make_header(kind, n, q);
  out.reserve(kHeaderSize + 8ULL * n);
  append_element(out, first);
  append_element(out, second);
  return out;
}

}  // namespace

std::vector<uint8_t> serialize(const PublicKey& pk) {
  return serialize_pair(ObjectKind::PublicKey, pk.a, pk.b, pk.params.n, pk.params.q);
}

std::vector<uint8_t> serialize(const SecretKey& sk) {
  return serialize_pair(ObjectKind::SecretKey, sk.s, sk.e, sk.params.n, sk.params.q);
}

std::vector<uint8_t> serialize(const Ciphertext& ct, const ParamSet& params) {
  return serialize_pair(ObjectKind::Ciphertext, ct.u, ct.v, params.n, params.q);
}

std::vector<uint8_t> serialize(const Plaintext& msg, const ParamSet& params) {
  if (msg.bits.size() != params.n)
    raise(errc::dimension_mismatch, "message must be exactly n bits");
  std::vector<uint8_t> out = make_header(ObjectKind::Message, params.n, params.q);
  const size_t nbytes = (params.n + 7) / 8;
  for (size_t j = 0; j < nbytes; ++j) {
    uint8_t byte = 0;
    for (uint32_t b = 0; b < 8; ++b) {
      const size_t idx = 8 * j + b;
      if (idx < msg.bits.size() && (msg.bits[idx] & 1)) byte |= static_cast<uint8_t>(1u << b);
    }
    out.push_back(byte);
  }
  return out;
}

WireHeader peek_header(const std::vector<uint8_t>& bytes) { return parse_header(bytes); }

PublicKey deserialize_public_key(const std::vector<uint8_t>& bytes) {
  const WireHeader h = parse_header(bytes);
  expect_kind(h, ObjectKind::PublicKey);
  expect_body(bytes, 8ULL * h.n);
  PublicKey pk;
  pk.params = params_from_wire(h.n, h.q);
  const uint32_t m = h.n / 2;
  pk.a = read_element(bytes.data() + kHeaderSize, m, h.q);
  pk.b = read_element(bytes.data() + kHeaderSize + 4ULL * h.n, m, h.q);
  return pk;
}

SecretKey deserialize_secret_key(const std::vector<uint8_t>& bytes) {
  const WireHeader h = parse_header(bytes);
  expect_kind(h, ObjectKind::SecretKey);
  expect_body(bytes, 8ULL * h.n);
  SecretKey sk;
  sk.params = params_from_wire(h.n, h.q);
  const uint32_t m = h.n / 2;
  sk.s = read_element(bytes.data() + kHeaderSize, m, h.q);
  sk.e = read_element(bytes.data() + kHeaderSize + 4ULL * h.n, m, h.q);
  return sk;
}

Ciphertext deserialize_ciphertext(const std::vector<uint8_t>& bytes, ParamSet* params) {
  const WireHeader h = parse_header(bytes);
  expect_kind(h, ObjectKind::Ciphertext);
  expect_body(bytes, 8ULL * h.n);
  if (params) *params = params_from_wire(h.n, h.q);
  const uint32_t m = h.n / 2;
  Ciphertext ct;
  ct.u = read_element(bytes.data() + kHeaderSize, m, h.q);
  ct.v = read_element(bytes.data() + kHeaderSize + 4ULL * h.n, m, h.q);
  return ct;
}

Plaintext deserialize_message(const std::vector<uint8_t>& bytes, ParamSet* params) {
  const WireHeader h = parse_header(bytes);
  expect_kind(h, ObjectKind::Message);
  expect_body(bytes, (h.n + 7) / 8);
  if (params) *params = params_from_wire(h.n, h.q);
  Plaintext msg;
  msg.bits.resize(h.n);
  for (uint32_t i = 0; i < h.n; ++i)
    msg.bits[i] = (bytes[kHeaderSize + i / 8] >> (i % 8)) & 1;
  return msg;
}

}  // namespace grlwe
