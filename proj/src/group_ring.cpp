#include "grlwe/group_ring.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

void check_compatible(const RingElement& x, const RingElement& y) {
  if (x.q() != y.q() || x.m() != y.m())
    raise(errc::dimension_mismatch, "ring elements disagree on (n, q)");
}

void check_wellformed(const RingElement& x) {
  if (x.f.q != x.g.q || x.f.m() != x.g.m())
    raise(errc::dimension_mismatch, "f and g parts disagree on (m, q)");
}

constexpr int64_t kIntCoeffBound = 1LL << 24;

void check_int_range(const IntRingElement& x) {
  for (int64_t v : x.f)
    if (std::llabs(v) >= kIntCoeffBound)
      raise(errc::coefficient_out_of_range, "integer product path requires |coeff| < 2^24");
  for (int64_t v : x.g)
    if (std::llabs(v) >= kIntCoeffBound)
      raise(errc::coefficient_out_of_range, "integer product path requires |coeff| < 2^24");
}

std::vector<int64_t> int_negacyclic_mul(const std::vector<int64_t>& a,
                                        const std::vector<int64_t>& b) {
  const size_t m = a.size();
  std::vector<int64_t> c(m, 0);
  for (size_t i = 0; i < m; ++i) {
    const int64_t ai = a[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < m; ++j) {
      const size_t k = i + j;
      if (k < m)
        c[k] += ai * b[j];
      else
        c[k - m] -= ai * b[j];
    }
  }
  return c;
}

std::vector<int64_t> int_sigma(const std::vector<int64_t>& f) {
  const size_t m = f.size();
  std::vector<int64_t> out(m, 0);
  out[0] = f[0];
  for (size_t i = 1; i < m; ++i) out[i] = -f[m - i];
  return out;
}

}  // namespace

RingElement gr_zero(uint32_t m, uint32_t q) { return {poly_zero(m, q), poly_zero(m, q)}; }

RingElement gr_one(uint32_t m, uint32_t q) { return {poly_one(m, q), poly_zero(m, q)}; }

RingElement gr_from_parts(Poly f, Poly g) {
  RingElement x{std::move(f), std::move(g)};
  check_wellformed(x);
  return x;
}

RingElement gr_from_i64(const std::vector<int64_t>& f, const std::vector<int64_t>& g, uint32_t q) {
  return gr_from_parts(poly_from_i64(f, q), poly_from_i64(g, q));
}

std::vector<int64_t> coeff_embed_centered(const RingElement& x) {
  std::vector<int64_t> out = poly_centered(x.f);
  const std::vector<int64_t> tail = poly_centered(x.g);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

RingElement gr_add(const RingElement& x, const RingElement& y) {
  check_compatible(x, y);
  return {poly_add(x.f, y.f), poly_add(x.g, y.g)};
}

RingElement gr_sub(const RingElement& x, const RingElement& y) {
  check_compatible(x, y);
  return {poly_sub(x.f, y.f), poly_sub(x.g, y.g)};
}

RingElement gr_neg(const RingElement& x) { return {poly_neg(x.f), poly_neg(x.g)}; }

RingElement gr_scalar_mul(uint32_t c, const RingElement& x) {
  return {poly_scalar_mul(c, x.f), poly_scalar_mul(c, x.g)};
}

RingElement gr_mul(const RingElement& x, const RingElement& y, MulMode mode) {
  check_compatible(x, y);
  const Poly f1_sigma = poly_involution(x.f);
  const Poly f2_sigma = poly_involution(x.g);
  RingElement out;
  out.f = poly_add(poly_mul(x.f, y.f, mode), poly_mul(f2_sigma, y.g, mode));
  out.g = poly_add(poly_mul(x.g, y.f, mode), poly_mul(f1_sigma, y.g, mode));
  return out;
}

RingElement gr_mul_oracle(const RingElement& x, const RingElement& y) {
  check_compatible(x, y);
  const uint32_t m = x.m();
  const uint32_t n = 2 * m;
  const uint32_t q = x.q();
  if (n > 64) raise(errc::oracle_size_exceeded, "Cayley oracle is capped at n <= 64");

  // Lift both factors to F_q[D_2n]: coefficient [eps][i] of s^eps r^i, i < n.
  auto lift = [&](const RingElement& e) {
    std::vector<std::vector<uint64_t>> full(2, std::vector<uint64_t>(n, 0));
    for (uint32_t i = 0; i < m; ++i) {
      full[0][i] = e.f.coeffs[i];
      full[1][i] = e.g.coeffs[i];
    }
    return full;
  };
  const auto X = lift(x);
  const auto Y = lift(y);
  std::vector<std::vector<uint64_t>> Z(2, std::vector<uint64_t>(n, 0));
  // Convolution over the group law (s^e1 r^i1)(s^e2 r^i2) = s^(e1^e2) r^((-1)^e2 i1 + i2).
  for (uint32_t e1 = 0; e1 < 2; ++e1)
    for (uint32_t i1 = 0; i1 < n; ++i1) {
      const uint64_t a = X[e1][i1];
      if (a == 0) continue;
      for (uint32_t e2 = 0; e2 < 2; ++e2)
        for (uint32_t i2 = 0; i2 < n; ++i2) {
          const uint64_t b = Y[e2][i2];
          if (b == 0) continue;
          const uint32_t eps = e1 ^ e2;
          const uint32_t idx = ((e2 ? n - i1 : i1) + i2) % n;
          Z[eps][idx] = (Z[eps][idx] + a * b) % q;
        }
    }
  // Fold the quotient relation r^m = -1.
  RingElement out = gr_zero(m, q);
  for (uint32_t i = 0; i < m; ++i) {
    out.f.coeffs[i] = static_cast<uint32_t>((Z[0][i] + q - Z[0][i + m] % q) % q);
    out.g.coeffs[i] = static_cast<uint32_t>((Z[1][i] + q - Z[1][i + m] % q) % q);
  }
  return out;
}

RingElement gr_involution_s(const RingElement& x) {
  return {poly_involution(x.f), poly_involution(x.g)};
}

RingElement gr_inverse(const RingElement& x) {
  check_wellformed(x);
  const Poly f_sigma = poly_involution(x.f);
  const Poly g_sigma = poly_involution(x.g);
  const Poly norm = poly_sub(poly_mul(x.f, f_sigma), poly_mul(g_sigma, x.g));
  const Poly norm_inv = poly_inverse(norm);  // throws NotInvertible
  return {poly_mul(f_sigma, norm_inv), poly_neg(poly_mul(x.g, norm_inv))};
}

double coeff_norm(const RingElement& x, Norm kind) {
  const auto v = coeff_embed_centered(x);
  if (kind == Norm::Linf) {
    int64_t best = 0;
    for (int64_t c : v) best = std::max<int64_t>(best, std::llabs(c));
    return static_cast<double>(best);
  }
  double acc = 0;
  for (int64_t c : v) acc += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(acc);
}

std::pair<RingElement, RingElement> normal_form_transform(const RingElement& a1,
                                                          const RingElement& b1,
                                                          const RingElement& a2,
                                                          const RingElement& b2) {
  const RingElement a1_inv = gr_inverse(a1);
  const RingElement a_prime = gr_mul(a2, a1_inv);
  const RingElement b_prime = gr_sub(gr_mul(a_prime, b1), b2);
  return {a_prime, b_prime};
}

IntRingElement int_gr_mul(const IntRingElement& x, const IntRingElement& y) {
  if (x.m() != y.m()) raise(errc::dimension_mismatch, "integer elements disagree on m");
  check_int_range(x);
  check_int_range(y);
  IntRingElement out;
  auto acc = [](std::vector<int64_t> a, const std::vector<int64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  out.f = acc(int_negacyclic_mul(x.f, y.f), int_negacyclic_mul(int_sigma(x.g), y.g));
  out.g = acc(int_negacyclic_mul(x.g, y.f), int_negacyclic_mul(int_sigma(x.f), y.g));
  return out;
}

IntRingElement int_gr_mul_oracle(const IntRingElement& x, const IntRingElement& y) {
  if (x.m() != y.m()) raise(errc::dimension_mismatch, "integer elements disagree on m");
  check_int_range(x);
  check_int_range(y);
  const uint32_t m = x.m();
  const uint32_t n = 2 * m;
  if (n > 64) raise(errc::oracle_size_exceeded, "Cayley oracle is capped at n <= 64");
  std::vector<std::vector<int64_t>> X(2, std::vector<int64_t>(n, 0)), Y = X, Z = X;
  for (uint32_t i = 0; i < m; ++i) {
    X[0][i] = x.f[i];
    X[1][i] = x.g[i];
    Y[0][i] = y.f[i];
    Y[1][i] = y.g[i];
  }
  for (uint32_t e1 = 0; e1 < 2; ++e1)
    for (uint32_t i1 = 0; i1 < n; ++i1) {
      if (X[e1][i1] == 0) continue;
      for (uint32_t e2 = 0; e2 < 2; ++e2)
        for (uint32_t i2 = 0; i2 < n; ++i2) {
          if (Y[e2][i2] == 0) continue;
          const uint32_t idx = ((e2 ? n - i1 : i1) + i2) % n;
          Z[e1 ^ e2][idx] += X[e1][i1] * Y[e2][i2];
        }
    }
  IntRingElement out;
  out.f.resize(m);
  out.g.resize(m);
  for (uint32_t i = 0; i < m; ++i) {
    out.f[i] = Z[0][i] - Z[0][i + m];
    out.g[i] = Z[1][i] - Z[1][i + m];
  }
  return out;
}

double int_norm(const IntRingElement& x, Norm kind) {
  if (kind == Norm::Linf) {
    int64_t best = 0;
    for (int64_t c : x.f) best = std::max<int64_t>(best, std::llabs(c));
    for (int64_t c : x.g) best = std::max<int64_t>(best, std::llabs(c));
    return static_cast<double>(best);
  }
  double acc = 0;
  for (int64_t c : x.f) acc += static_cast<double>(c) * static_cast<double>(c);
  for (int64_t c : x.g) acc += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(acc);
}

IntRingElement centered_lift(const RingElement& x) {
  return {poly_centered(x.f), poly_centered(x.g)};
}

RingElement reduce_mod_q(const IntRingElement& x, uint32_t q) {
  return gr_from_i64(x.f, x.g, q);
}

}  // namespace grlwe
