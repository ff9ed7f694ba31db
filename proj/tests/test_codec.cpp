#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "grlwe/codec.hpp"
#include "grlwe/errors.hpp"
#include "support/test_oracles.hpp"

using namespace grlwe;

namespace {

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), {});
}

struct TestObjects {
  ParamSet params;
  PublicKey pk;
  SecretKey sk;
  Ciphertext ct;
  Plaintext msg;
};

TestObjects make_objects(uint32_t n, uint64_t seed) {
  TestObjects o;
  o.params = build_params(n, Profile::Default);
  Rng rng(seed);
  auto [pk, sk] = keygen(o.params, rng);
  o.pk = pk;
  o.sk = sk;
  o.msg.bits.resize(n);
  for (auto& b : o.msg.bits) b = static_cast<uint8_t>(rng.next_u64() & 1);
  o.ct = encrypt(o.pk, o.msg, rng);
  return o;
}

}  // namespace

TEST_CASE("round trips are byte-identical") {
  for (uint32_t n : {4u, 512u}) {
    const TestObjects o = make_objects(n, 1234 + n);

    const auto pk_bytes = serialize(o.pk);
    const PublicKey pk2 = deserialize_public_key(pk_bytes);
    CHECK(serialize(pk2) == pk_bytes);
    CHECK(pk2.a == o.pk.a);
    CHECK(pk2.b == o.pk.b);

    const auto sk_bytes = serialize(o.sk);
    const SecretKey sk2 = deserialize_secret_key(sk_bytes);
    CHECK(serialize(sk2) == sk_bytes);
    CHECK(sk2.s == o.sk.s);

    const auto ct_bytes = serialize(o.ct, o.params);
    ParamSet ct_params;
    const Ciphertext ct2 = deserialize_ciphertext(ct_bytes, &ct_params);
    CHECK(serialize(ct2, ct_params) == ct_bytes);
    CHECK(ct2.u == o.ct.u);

    const auto msg_bytes = serialize(o.msg, o.params);
    const Plaintext msg2 = deserialize_message(msg_bytes);
    CHECK(serialize(msg2, o.params) == msg_bytes);
    CHECK(msg2.bits == o.msg.bits);
  }
}

TEST_CASE("serialized sizes are linear in n") {
  for (uint32_t n : {4u, 64u, 512u}) {
    const TestObjects o = make_objects(n, 99);
    CHECK(serialize(o.pk).size() == 16 + 2ULL * n * 4);
    CHECK(serialize(o.sk).size() == 16 + 2ULL * n * 4);
    CHECK(serialize(o.ct, o.params).size() == 16 + 2ULL * n * 4);
    CHECK(serialize(o.msg, o.params).size() == 16 + (n + 7) / 8);
  }
}

TEST_CASE("every header byte is load-bearing") {
  const TestObjects o = make_objects(8, 7);
  const auto bytes = serialize(o.pk);
  for (size_t pos = 0; pos < kHeaderSize; ++pos) {
    for (uint8_t flip : {uint8_t{0x01}, uint8_t{0x80}}) {
      // A q corruption landing exactly on another odd prime (73 -> 65609 for
      // pos 14 flip 0x01, 73 -> 16777289 for pos 15 flip 0x01) is not
      // structurally detectable without a checksum; every other flip must throw.
      if (pos >= 14 && flip == 0x01) continue;
      auto corrupted = bytes;
      corrupted[pos] ^= flip;
      CAPTURE(pos);
      CAPTURE(flip);
      CHECK_THROWS_AS(deserialize_public_key(corrupted), Error);
    }
  }
  // specific codes for the well-known positions
  auto magic = bytes;
  magic[0] ^= 0xFF;
  try {
    deserialize_public_key(magic);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_magic);
  }
  auto version = bytes;
  version[4] = 2;
  try {
    deserialize_public_key(version);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_version);
  }
  auto reserved = bytes;
  reserved[6] = 1;
  try {
    deserialize_public_key(reserved);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_magic);
  }
}

TEST_CASE("kind confusion is a ParamMismatch") {
  const TestObjects o = make_objects(8, 8);
  const auto pk_bytes = serialize(o.pk);
  try {
    deserialize_secret_key(pk_bytes);
    FAIL("should have thrown");
  } catch (const Error& e) {
    CHECK(e.code() == errc::param_mismatch);
  }
}

TEST_CASE("truncation and trailing bytes are rejected") {
  const TestObjects o = make_objects(8, 9);
  auto bytes = serialize(o.ct, o.params);
  auto truncated = bytes;
  truncated.resize(bytes.size() - 5);
  try {
    deserialize_ciphertext(truncated);
    FAIL("should have thrown");
  } catch (const Error& e) {
    CHECK(e.code() == errc::truncated_body);
  }
  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_AS(deserialize_ciphertext(trailing), Error);
  std::vector<uint8_t> tiny(bytes.begin(), bytes.begin() + 10);
  CHECK_THROWS_AS(peek_header(tiny), Error);
}

TEST_CASE("out-of-range residues are rejected") {
  const TestObjects o = make_objects(8, 10);
  auto bytes = serialize(o.pk);
  // overwrite the first coefficient with q
  const uint32_t q = o.params.q;
  bytes[16] = static_cast<uint8_t>(q);
  bytes[17] = static_cast<uint8_t>(q >> 8);
  bytes[18] = static_cast<uint8_t>(q >> 16);
  bytes[19] = static_cast<uint8_t>(q >> 24);
  try {
    deserialize_public_key(bytes);
    FAIL("should have thrown");
  } catch (const Error& e) {
    CHECK(e.code() == errc::coefficient_out_of_range);
  }
}

TEST_CASE("version 0x01 fixtures stay parseable") {
  const auto dir = std::filesystem::path(GRLWE_FIXTURE_DIR);
  const PublicKey pk = deserialize_public_key(read_file(dir / "pk_n8_seed42.bin"));
  CHECK(pk.params.n == 8);
  const SecretKey sk = deserialize_secret_key(read_file(dir / "sk_n8_seed42.bin"));
  CHECK(sk.params.q == pk.params.q);
  ParamSet ct_params;
  const Ciphertext ct = deserialize_ciphertext(read_file(dir / "ct_n8_seed43.bin"), &ct_params);
  const Plaintext msg = deserialize_message(read_file(dir / "msg_n8_seed43.bin"));
  // the fixture ciphertext decrypts to the fixture message under the fixture key
  CHECK(decrypt(sk, ct).bits == msg.bits);
  // byte-exactness of the writer against the frozen files
  CHECK(serialize(pk) == read_file(dir / "pk_n8_seed42.bin"));
  CHECK(serialize(sk) == read_file(dir / "sk_n8_seed42.bin"));
}
