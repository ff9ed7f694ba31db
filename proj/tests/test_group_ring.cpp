#include <cmath>

#include "doctest.h"
#include "grlwe/errors.hpp"
#include "grlwe/group_ring.hpp"
#include "grlwe/spectral.hpp"
#include "support/test_oracles.hpp"

using namespace grlwe;
using test::random_element;
using test::random_int_element;

namespace {

// r and s as ring elements at rank n = 2m.
RingElement rot(uint32_t m, uint32_t q) {
  RingElement x = gr_zero(m, q);
  x.f.coeffs[1] = 1;
  return x;
}

RingElement refl(uint32_t m, uint32_t q) {
  RingElement x = gr_zero(m, q);
  x.g.coeffs[0] = 1;
  return x;
}

}  // namespace

TEST_CASE("addition examples at n=4") {
  const uint32_t q = 17;
  const RingElement sum = gr_add(rot(2, q), refl(2, q));
  CHECK(sum.f == poly_from_i64({0, 1}, q));
  CHECK(sum.g == poly_from_i64({1, 0}, q));
  Rng rng(1);
  const RingElement x = random_element(2, q, rng);
  CHECK(gr_add(x, gr_zero(2, q)) == x);
  CHECK(gr_add(x, gr_neg(x)) == gr_zero(2, q));
}

TEST_CASE("rs = -sr and sr = sr: the ring is non-commutative") {
  const uint32_t q = 17;
  const RingElement rs = gr_mul(rot(2, q), refl(2, q));
  CHECK(rs.f == poly_from_i64({0, 0}, q));
  CHECK(rs.g == poly_from_i64({0, -1}, q));
  const RingElement sr = gr_mul(refl(2, q), rot(2, q));
  CHECK(sr.f == poly_from_i64({0, 0}, q));
  CHECK(sr.g == poly_from_i64({0, 1}, q));
  CHECK(rs != sr);
}

TEST_CASE("a non-commutativity witness exists at every oracle rank") {
  for (uint32_t m : {2u, 4u, 8u, 16u}) {
    const uint32_t q = 17;
    CHECK(gr_mul(rot(m, q), refl(m, q)) != gr_mul(refl(m, q), rot(m, q)));
  }
}

TEST_CASE("multiplicative identity") {
  Rng rng(2);
  const RingElement x = random_element(8, 97, rng);
  const RingElement one = gr_one(8, 97);
  CHECK(gr_mul(x, one) == x);
  CHECK(gr_mul(one, x) == x);
}

TEST_CASE("four-product decomposition equals the Cayley oracle") {
  // all pairs of unit monomials at n=4
  const uint32_t q = 17;
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) {
      RingElement gi = gr_zero(2, q), gj = gr_zero(2, q);
      (i < 2 ? gi.f.coeffs[i] : gi.g.coeffs[i - 2]) = 1;
      (j < 2 ? gj.f.coeffs[j] : gj.g.coeffs[j - 2]) = 1;
      CHECK(gr_mul(gi, gj) == gr_mul_oracle(gi, gj));
    }
  // exhaustive over the whole ring at n=4, q=3 (81 elements, 6561 pairs);
  // q = 3 is not NTT-friendly, so this also covers the schoolbook route
  {
    std::vector<RingElement> all;
    for (int64_t a = 0; a < 3; ++a)
      for (int64_t b = 0; b < 3; ++b)
        for (int64_t c = 0; c < 3; ++c)
          for (int64_t d = 0; d < 3; ++d) all.push_back(gr_from_i64({a, b}, {c, d}, 3));
    for (const auto& x : all)
      for (const auto& y : all) CHECK(gr_mul(x, y) == gr_mul_oracle(x, y));
  }
  // randomized across oracle ranks and both moduli of the acceptance gate
  Rng rng(3);
  for (uint32_t m : {2u, 4u, 8u, 16u}) {
    for (uint32_t q2 : {17u, 97u}) {
      for (int t = 0; t < 60; ++t) {
        const RingElement x = random_element(m, q2, rng);
        const RingElement y = random_element(m, q2, rng);
        CHECK(gr_mul(x, y) == gr_mul_oracle(x, y));
      }
    }
  }
}

TEST_CASE("oracle basics") {
  const uint32_t q = 17;
  Rng rng(4);
  const RingElement x = random_element(4, q, rng);
  CHECK(gr_mul_oracle(gr_one(4, q), x) == x);
  const RingElement s = refl(4, q);
  CHECK(gr_mul_oracle(s, s) == gr_one(4, q));  // s^2 = 1
  CHECK_THROWS_AS(gr_mul_oracle(random_element(64, q, rng), random_element(64, q, rng)), Error);
}

TEST_CASE("conjugation by s") {
  const uint32_t q = 17;
  CHECK(gr_involution_s(gr_one(2, q)) == gr_one(2, q));
  // s r s = r^{-1} = -r at n=4
  CHECK(gr_involution_s(rot(2, q)) == gr_neg(rot(2, q)));
  Rng rng(5);
  const RingElement x = random_element(8, 97, rng);
  CHECK(gr_involution_s(gr_involution_s(x)) == x);
  // matches the oracle product s * x * s
  const RingElement s = refl(8, 97);
  CHECK(gr_involution_s(x) == gr_mul_oracle(gr_mul_oracle(s, x), s));
}

TEST_CASE("inverses via the central norm") {
  const uint32_t q = 17;
  CHECK(gr_inverse(gr_one(2, q)) == gr_one(2, q));
  CHECK(gr_inverse(refl(2, q)) == refl(2, q));
  const RingElement one_plus_s = gr_add(gr_one(2, q), refl(2, q));
  CHECK_THROWS_AS(gr_inverse(one_plus_s), Error);
  try {
    gr_inverse(one_plus_s);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_invertible);
  }

  Rng rng(6);
  int done = 0;
  while (done < 25) {
    const RingElement x = random_element(8, 97, rng);
    RingElement inv;
    try {
      inv = gr_inverse(x);
    } catch (const Error&) {
      continue;
    }
    ++done;
    CHECK(gr_mul(x, inv) == gr_one(8, 97));
    CHECK(gr_mul(inv, x) == gr_one(8, 97));
  }
}

TEST_CASE("gr_inverse succeeds exactly when the regular representation is a unit") {
  for (uint32_t m : {2u, 4u, 8u}) {
    const uint32_t q = 17;
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
      const RingElement x = random_element(m, q, rng);
      bool invertible = true;
      try {
        gr_inverse(x);
      } catch (const Error&) {
        invertible = false;
      }
      const auto rep = reg_rep_matrix(x, RepField::ModQ);
      CHECK(invertible == (test::det_mod_q(rep, q) != 0));
    }
  }
}

TEST_CASE("coefficient norms") {
  const uint32_t q = 17;
  CHECK(coeff_norm(gr_zero(2, q), Norm::L2) == 0.0);
  const RingElement rp = gr_add(rot(2, q), refl(2, q));
  CHECK(coeff_norm(rp, Norm::L2) == doctest::Approx(std::sqrt(2.0)));
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const RingElement x = random_element(8, 97, rng);
    CHECK(coeff_norm(x, Norm::Linf) <= coeff_norm(x, Norm::L2) + 1e-12);
  }
}

TEST_CASE("associativity and distributivity on random triples") {
  Rng rng(9);
  for (int t = 0; t < 25; ++t) {
    const RingElement x = random_element(4, 73, rng);
    const RingElement y = random_element(4, 73, rng);
    const RingElement z = random_element(4, 73, rng);
    CHECK(gr_mul(gr_mul(x, y), z) == gr_mul(x, gr_mul(y, z)));
    CHECK(gr_mul(x, gr_add(y, z)) == gr_add(gr_mul(x, y), gr_mul(x, z)));
    CHECK(gr_mul(gr_add(x, y), z) == gr_add(gr_mul(x, z), gr_mul(y, z)));
  }
}

TEST_CASE("integer products: no-wrap path matches its oracle and bounds hold") {
  Rng rng(10);
  for (uint32_t m : {2u, 8u, 32u}) {
    for (int t = 0; t < 40; ++t) {
      const IntRingElement x = random_int_element(m, -50, 50, rng);
      const IntRingElement y = random_int_element(m, -50, 50, rng);
      const IntRingElement p = int_gr_mul(x, y);
      CHECK(p == int_gr_mul_oracle(x, y));
      // product lengths behave: ||xy|| <= sqrt(n) ||x|| ||y||
      const double n = 2.0 * m;
      CHECK(int_norm(p, Norm::L2) <=
            std::sqrt(n) * int_norm(x, Norm::L2) * int_norm(y, Norm::L2) + 1e-6);
    }
  }
}

TEST_CASE("integer path refuses oversized coefficients") {
  IntRingElement big{{1LL << 24, 0}, {0, 0}};
  IntRingElement ok{{1, 0}, {0, 0}};
  CHECK_THROWS_AS(int_gr_mul(big, ok), Error);
}

TEST_CASE("normal form transform eliminates the secret") {
  const uint32_t m = 2, q = 17;
  Rng rng(11);
  // zero-error samples: b' = 0 for any secret
  for (int t = 0; t < 10; ++t) {
    const RingElement s = random_element(m, q, rng);
    RingElement a1 = random_element(m, q, rng);
    try {
      gr_inverse(a1);
    } catch (const Error&) {
      continue;
    }
    const RingElement a2 = random_element(m, q, rng);
    const auto [ap, bp] = normal_form_transform(a1, gr_mul(a1, s), a2, gr_mul(a2, s));
    CHECK(bp == gr_zero(m, q));
    CHECK(ap == gr_mul(a2, gr_inverse(a1)));
  }
  // a1 = 1: (a', b') = (a2, a2 b1 - b2)
  const RingElement one = gr_one(m, q);
  const RingElement b1 = random_element(m, q, rng);
  const RingElement a2 = random_element(m, q, rng);
  const RingElement b2 = random_element(m, q, rng);
  const auto [ap, bp] = normal_form_transform(one, b1, a2, b2);
  CHECK(ap == a2);
  CHECK(bp == gr_sub(gr_mul(a2, b1), b2));
  // instrumented errors: b' = a' e1 - e2 exactly
  int done = 0;
  while (done < 20) {
    const RingElement s = random_element(m, q, rng);
    const RingElement a1 = random_element(m, q, rng);
    const RingElement a2b = random_element(m, q, rng);
    const RingElement e1 = random_element(m, q, rng);
    const RingElement e2 = random_element(m, q, rng);
    try {
      gr_inverse(a1);
    } catch (const Error&) {
      continue;
    }
    ++done;
    const auto [a_prime, b_prime] = normal_form_transform(
        a1, gr_add(gr_mul(a1, s), e1), a2b, gr_add(gr_mul(a2b, s), e2));
    CHECK(b_prime == gr_sub(gr_mul(a_prime, e1), e2));
  }
}
