#include "grlwe/negacyclic.hpp"

#include <map>
#include <mutex>
#include <string>

#include "grlwe/errors.hpp"
#include "grlwe/params.hpp"

namespace grlwe {

namespace {

bool is_power_of_two(uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

uint32_t addmod(uint32_t a, uint32_t b, uint32_t q) {
  uint32_t s = a + b;
  return s >= q ? s - q : s;
}

uint32_t submod(uint32_t a, uint32_t b, uint32_t q) { return a >= b ? a - b : a + q - b; }

uint32_t mulmod(uint32_t a, uint32_t b, uint32_t q) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % q);
}

uint32_t powmod(uint32_t base, uint64_t exp, uint32_t q) {
  uint64_t acc = 1 % q, b = base % q;
  while (exp) {
    if (exp & 1) acc = acc * b % q;
    b = b * b % q;
    exp >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint64_t shoup_precompute(uint32_t w, uint32_t q) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(w) << 64) / q);
}

// a * w mod q + {0, q} with w' = floor(w * 2^64 / q) precomputed; the result
// stays below 2q for any 32-bit a when w < q (Harvey's lazy variant).
uint32_t mulmod_shoup_lazy(uint32_t a, uint32_t w, uint64_t w_shoup, uint32_t q) {
  const uint64_t hi = static_cast<uint64_t>((static_cast<__uint128_t>(w_shoup) * a) >> 64);
  return static_cast<uint32_t>(static_cast<uint64_t>(w) * a - hi * static_cast<uint64_t>(q));
}

// a * b mod q by Barrett reduction; bar = floor(2^64 / q), a*b < 2^62.
uint32_t mulmod_barrett(uint32_t a, uint32_t b, uint64_t bar, uint32_t q) {
  const uint64_t prod = static_cast<uint64_t>(a) * b;
  const uint64_t approx = static_cast<uint64_t>((static_cast<__uint128_t>(prod) * bar) >> 64);
  uint64_t r = prod - approx * q;
  if (r >= q) r -= q;
  if (r >= q) r -= q;
  return static_cast<uint32_t>(r);
}

void check_compatible(const Poly& a, const Poly& b) {
  if (a.q != b.q || a.coeffs.size() != b.coeffs.size())
    raise(errc::dimension_mismatch, "polynomials disagree on (m, q)");
}

std::vector<uint32_t> prime_factors(uint32_t x) {
  std::vector<uint32_t> out;
  uint64_t n = x;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<uint32_t>(n));
  return out;
}

uint32_t find_generator(uint32_t q) {
  const auto factors = prime_factors(q - 1);
  for (uint32_t g = 2;; ++g) {
    bool ok = true;
    for (uint32_t p : factors) {
      if (powmod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

uint32_t bit_reverse(uint32_t x, int bits) {
  uint32_t y = 0;
  for (int i = 0; i < bits; ++i) {
    y = (y << 1) | (x & 1);
    x >>= 1;
  }
  return y;
}

std::shared_ptr<const NttTables> build_tables(uint32_t q, uint32_t m) {
  auto t = std::make_shared<NttTables>();
  t->q = q;
  t->m = m;
  const uint32_t g = find_generator(q);
  t->root = powmod(g, (q - 1) / (2ULL * m), q);
  int bits = 0;
  while ((1u << bits) < m) ++bits;
  t->zetas.resize(m);
  t->zetas_shoup.resize(m);
  t->inv_zetas.resize(m);
  t->inv_zetas_shoup.resize(m);
  const uint32_t root_inv = powmod(t->root, q - 2, q);
  for (uint32_t i = 0; i < m; ++i) {
    const uint32_t e = bit_reverse(i, bits);
    t->zetas[i] = powmod(t->root, e, q);
    t->inv_zetas[i] = powmod(root_inv, e, q);
    t->zetas_shoup[i] = shoup_precompute(t->zetas[i], q);
    t->inv_zetas_shoup[i] = shoup_precompute(t->inv_zetas[i], q);
  }
  t->m_inv = powmod(m % q, q - 2, q);
  t->m_inv_shoup = shoup_precompute(t->m_inv, q);
  return t;
}

// Lazy Cooley-Tukey pass: inputs in [0, 4q), outputs in [0, 4q); requires
// q < 2^30 so intermediate values fit 32 bits. Output left unnormalized.
void ntt_forward_lazy(std::vector<uint32_t>& a, const NttTables& t) {
  const uint32_t q = t.q;
  const uint32_t two_q = 2 * q;
  const uint32_t m = t.m;
  uint32_t k = 1;
  for (uint32_t len = m / 2; len >= 1; len >>= 1) {
    for (uint32_t start = 0; start < m; start += 2 * len) {
      const uint32_t zeta = t.zetas[k];
      const uint64_t zeta_shoup = t.zetas_shoup[k];
      ++k;
      for (uint32_t j = start; j < start + len; ++j) {
        uint32_t x = a[j];
        if (x >= two_q) x -= two_q;
        const uint32_t u = mulmod_shoup_lazy(a[j + len], zeta, zeta_shoup, q);
        a[j] = x + u;
        a[j + len] = x + two_q - u;
      }
    }
  }
}

void reduce_to_canonical(std::vector<uint32_t>& a, uint32_t q) {
  const uint32_t two_q = 2 * q;
  for (auto& c : a) {
    if (c >= two_q) c -= two_q;
    if (c >= q) c -= q;
  }
}

void ntt_forward_inplace(std::vector<uint32_t>& a, const NttTables& t) {
  ntt_forward_lazy(a, t);
  reduce_to_canonical(a, t.q);
}

// Lazy Gentleman-Sande pass: inputs in [0, 2q), result normalized to [0, q).
void ntt_inverse_inplace(std::vector<uint32_t>& a, const NttTables& t) {
  const uint32_t q = t.q;
  const uint32_t two_q = 2 * q;
  const uint32_t m = t.m;
  for (uint32_t len = 1; len < m; len <<= 1) {
    for (uint32_t start = 0; start < m; start += 2 * len) {
      // undo the forward butterfly that ran at this (len, start) block
      const uint32_t k = m / (2 * len) + start / (2 * len);
      const uint32_t zeta = t.inv_zetas[k];
      const uint64_t zeta_shoup = t.inv_zetas_shoup[k];
      for (uint32_t j = start; j < start + len; ++j) {
        const uint32_t x = a[j];
        const uint32_t y = a[j + len];
        uint32_t s = x + y;
        if (s >= two_q) s -= two_q;
        a[j] = s;
        a[j + len] = mulmod_shoup_lazy(x + two_q - y, zeta, zeta_shoup, q);
      }
    }
  }
  for (auto& c : a) {
    c = mulmod_shoup_lazy(c, t.m_inv, t.m_inv_shoup, q);
    if (c >= q) c -= q;
  }
}

Poly poly_mul_schoolbook(const Poly& a, const Poly& b) {
  const uint32_t m = a.m();
  const uint32_t q = a.q;
  Poly out = poly_zero(m, q);
  for (uint32_t l = 0; l < m; ++l) {
    __uint128_t pos = 0, neg = 0;
    for (uint32_t i = 0; i <= l; ++i)
      pos += static_cast<uint64_t>(a.coeffs[i]) * b.coeffs[l - i];
    for (uint32_t i = l + 1; i < m; ++i)
      neg += static_cast<uint64_t>(a.coeffs[i]) * b.coeffs[l + m - i];
    const uint32_t p = static_cast<uint32_t>(pos % q);
    const uint32_t n = static_cast<uint32_t>(neg % q);
    out.coeffs[l] = submod(p, n, q);
  }
  return out;
}

Poly poly_mul_ntt(const Poly& a, const Poly& b) {
  const auto tables = ntt_tables(a.q, a.m());
  std::vector<uint32_t> fa = a.coeffs, fb = b.coeffs;
  ntt_forward_lazy(fa, *tables);
  ntt_forward_lazy(fb, *tables);
  reduce_to_canonical(fa, a.q);
  reduce_to_canonical(fb, a.q);
  const uint64_t bar = static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) / a.q);
  for (uint32_t i = 0; i < a.m(); ++i) fa[i] = mulmod_barrett(fa[i], fb[i], bar, a.q);
  ntt_inverse_inplace(fa, *tables);
  return Poly{std::move(fa), a.q};
}

// Long division helpers over F_q for the extended-Euclid inverse path.
using FieldPoly = std::vector<uint32_t>;  // coefficient i of x^i, no trailing zeros

int degree(const FieldPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(FieldPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

FieldPoly poly_mod_reduce(const FieldPoly& num, const FieldPoly& den, FieldPoly& quotient,
                          uint32_t q) {
  FieldPoly r = num;
  quotient.assign(num.size(), 0);
  const uint32_t lead_inv = powmod(den.back(), q - 2, q);
  while (degree(r) >= degree(den)) {
    const int shift = degree(r) - degree(den);
    const uint32_t c = mulmod(r.back(), lead_inv, q);
    quotient[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) {
      const size_t idx = i + shift;
      r[idx] = submod(r[idx], mulmod(c, den[i], q), q);
    }
    trim(r);
    if (r.empty()) break;
  }
  trim(quotient);
  return r;
}

}  // namespace

Poly poly_zero(uint32_t m, uint32_t q) { return Poly{std::vector<uint32_t>(m, 0), q}; }

Poly poly_one(uint32_t m, uint32_t q) {
  Poly p = poly_zero(m, q);
  p.coeffs[0] = 1 % q;
  return p;
}

Poly poly_from_i64(const std::vector<int64_t>& c, uint32_t q) {
  Poly p;
  p.q = q;
  p.coeffs.reserve(c.size());
  for (int64_t v : c) {
    int64_t r = v % static_cast<int64_t>(q);
    if (r < 0) r += q;
    p.coeffs.push_back(static_cast<uint32_t>(r));
  }
  return p;
}

std::vector<int64_t> poly_centered(const Poly& a) {
  std::vector<int64_t> out;
  out.reserve(a.coeffs.size());
  const int64_t q = a.q;
  for (uint32_t c : a.coeffs) {
    int64_t v = c;
    if (2 * v >= q) v -= q;
    out.push_back(v);
  }
  return out;
}

bool ntt_friendly(uint32_t q, uint32_t m) {
  // q < 2^30 keeps the lazy butterfly domain [0, 4q) inside 32 bits
  return is_power_of_two(m) && m >= 2 && q < (1u << 30) && q % (2ULL * m) == 1 && is_prime(q);
}

std::shared_ptr<const NttTables> ntt_tables(uint32_t q, uint32_t m) {
  if (!ntt_friendly(q, m))
    raise(errc::ntt_unavailable,
          "q = " + std::to_string(q) + " is not an NTT-friendly prime for m = " + std::to_string(m));
  static std::map<uint64_t, std::shared_ptr<const NttTables>> cache;
  static std::mutex mu;
  const uint64_t key = (static_cast<uint64_t>(q) << 32) | m;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto tables = build_tables(q, m);
  cache.emplace(key, tables);
  return tables;
}

Poly poly_add(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  Poly out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = addmod(a.coeffs[i], b.coeffs[i], a.q);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  Poly out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = submod(a.coeffs[i], b.coeffs[i], a.q);
  return out;
}

Poly poly_neg(const Poly& a) {
  Poly out = a;
  for (auto& c : out.coeffs) c = c == 0 ? 0 : a.q - c;
  return out;
}

Poly poly_scalar_mul(uint32_t c, const Poly& a) {
  Poly out = a;
  const uint32_t cr = c % a.q;
  for (auto& v : out.coeffs) v = mulmod(v, cr, a.q);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, MulMode mode) {
  check_compatible(a, b);
  switch (mode) {
    case MulMode::Schoolbook:
      return poly_mul_schoolbook(a, b);
    case MulMode::Ntt:
      return poly_mul_ntt(a, b);
    case MulMode::Auto:
      return ntt_friendly(a.q, a.m()) ? poly_mul_ntt(a, b) : poly_mul_schoolbook(a, b);
  }
  raise(errc::dimension_mismatch, "bad MulMode");
}

Poly poly_involution(const Poly& a) {
  const uint32_t m = a.m();
  Poly out = poly_zero(m, a.q);
  out.coeffs[0] = a.coeffs[0];
  for (uint32_t i = 1; i < m; ++i) {
    const uint32_t c = a.coeffs[m - i];
    out.coeffs[i] = c == 0 ? 0 : a.q - c;
  }
  return out;
}

Poly poly_inverse(const Poly& a) {
  const uint32_t m = a.m();
  const uint32_t q = a.q;
  if (ntt_friendly(q, m)) {
    const auto tables = ntt_tables(q, m);
    std::vector<uint32_t> fa = a.coeffs;
    ntt_forward_inplace(fa, *tables);
    for (auto& e : fa) {
      if (e == 0) raise(errc::not_invertible, "polynomial shares a root with x^m+1 mod q");
      e = powmod(e, q - 2, q);
    }
    ntt_inverse_inplace(fa, *tables);
    return Poly{std::move(fa), q};
  }
  // Extended Euclid against x^m + 1.
  FieldPoly modulus(m + 1, 0);
  modulus[0] = 1;
  modulus[m] = 1;
  FieldPoly r0 = modulus, r1 = a.coeffs;
  trim(r1);
  if (r1.empty()) raise(errc::not_invertible, "zero polynomial");
  FieldPoly t0, t1 = {1};
  while (!r1.empty()) {
    FieldPoly quotient;
    FieldPoly r2 = poly_mod_reduce(r0, r1, quotient, q);
    // t2 = t0 - quotient * t1
    FieldPoly t2(std::max(t0.size(), quotient.size() + t1.size()), 0);
    for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
    for (size_t i = 0; i < quotient.size(); ++i) {
      if (quotient[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); ++j)
        t2[i + j] = submod(t2[i + j], mulmod(quotient[i], t1[j], q), q);
    }
    trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) raise(errc::not_invertible, "gcd(a, x^m+1) is non-constant mod q");
  const uint32_t scale = powmod(r0[0], q - 2, q);
  Poly out = poly_zero(m, q);
  for (size_t i = 0; i < t0.size(); ++i) out.coeffs[i] = mulmod(t0[i], scale, q);
  return out;
}

std::vector<uint32_t> ntt_forward(const Poly& a) {
  const auto tables = ntt_tables(a.q, a.m());
  std::vector<uint32_t> v = a.coeffs;
  ntt_forward_inplace(v, *tables);
  return v;
}

Poly ntt_inverse(const std::vector<uint32_t>& evals, uint32_t q) {
  const auto tables = ntt_tables(q, static_cast<uint32_t>(evals.size()));
  std::vector<uint32_t> v = evals;
  ntt_inverse_inplace(v, *tables);
  return Poly{std::move(v), q};
}

}  // namespace grlwe
