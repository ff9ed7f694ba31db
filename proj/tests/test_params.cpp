#include <numeric>

#include "doctest.h"
#include "grlwe/errors.hpp"
#include "grlwe/params.hpp"

using namespace grlwe;

namespace {

bool has(const std::vector<Violation>& v, Violation w) {
  for (auto x : v)
    if (x == w) return true;
  return false;
}

}  // namespace

TEST_CASE("toy preset at n=4: smallest prime = 1 (mod 4) above 2n") {
  const ParamSet p = build_params(4, Profile::Toy);
  CHECK(p.m == 2);
  CHECK(p.q == 13);
  CHECK(p.ntt_enabled);
  CHECK(p.sigma > 0.0);
}

TEST_CASE("default preset at n=4 stays in [n^2, 2n^2]") {
  const ParamSet p = build_params(4, Profile::Default);
  CHECK(p.q == 17);
  CHECK(p.q % 4 == 1);
}

TEST_CASE("rank below minimum is rejected") {
  CHECK_THROWS_AS(build_params(2, Profile::Default), Error);
  CHECK_THROWS_AS(build_params(12, Profile::Default), Error);  // not a power of two
  try {
    build_params(2, Profile::Default);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_rank);
  }
}

TEST_CASE("default preset fixtures") {
  CHECK(build_params(8, Profile::Default).q == 73);
  CHECK(build_params(16, Profile::Default).q == 257);
  CHECK(build_params(256, Profile::Default).q == 65537);
  const ParamSet p512 = build_params(512, Profile::Default);
  CHECK(p512.q == 262657);
  CHECK(p512.q % 512 == 1);
  CHECK(p512.q >= 512u * 512u);
  CHECK(p512.q <= 2u * 512u * 512u);
  CHECK(build_params(1024, Profile::Default).q == 1051649);
}

TEST_CASE("constructor output validates clean") {
  for (uint32_t n : {4u, 8u, 16u, 64u, 256u, 1024u}) {
    for (Profile prof : {Profile::Toy, Profile::Default}) {
      const ParamSet p = build_params(n, prof);
      CHECK(validate(p).empty());
      CHECK(p.q % (2 * p.m) == 1);
      CHECK(std::gcd<uint64_t, uint64_t>(p.q, 2ULL * p.n) == 1);
      CHECK(is_prime(p.q));
    }
  }
}

TEST_CASE("build_params is deterministic") {
  const ParamSet a = build_params(64, Profile::Default);
  const ParamSet b = build_params(64, Profile::Default);
  CHECK(a.q == b.q);
  CHECK(a.sigma == b.sigma);
  CHECK(a.security_note == b.security_note);
}

TEST_CASE("validate reports composite modulus") {
  ParamSet p = build_params(4, Profile::Default);
  p.q = 16;
  const auto v = validate(p);
  CHECK(!v.empty());
  CHECK(has(v, Violation::NotPrime));
}

TEST_CASE("validate reports out-of-range modulus for the default profile") {
  ParamSet p = build_params(4, Profile::Default);
  p.q = 3;
  p.ntt_enabled = false;
  const auto v = validate(p);
  CHECK(has(v, Violation::ModulusOutOfRange));
  CHECK(!has(v, Violation::ModulusSharesFactorWith2n));  // gcd(3, 8) = 1
}

TEST_CASE("validate reports shared factors and NTT mismatch") {
  ParamSet p = build_params(4, Profile::Toy);
  p.q = 2;  // even: shares a factor with 2n and cannot be = 1 (mod 2m)
  const auto v = validate(p);
  CHECK(has(v, Violation::ModulusSharesFactorWith2n));
  CHECK(has(v, Violation::NttModulusMismatch));

  ParamSet p2 = build_params(4, Profile::Toy);
  p2.sigma = 0.0;
  CHECK(has(validate(p2), Violation::NonPositiveSigma));
}

TEST_CASE("report is one key=value line per field") {
  const std::string report = param_report(build_params(8, Profile::Toy));
  for (const char* key : {"n=8", "m=4", "q=17", "sigma=", "ntt_enabled=true", "profile=toy",
                          "security_note=", "alpha="}) {
    CAPTURE(key);
    CHECK(report.find(key) != std::string::npos);
  }
}
