#include "grlwe/params.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t mod) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t acc = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, mod);
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return acc;
}

bool is_power_of_two(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

bool is_prime(uint64_t x) {
  if (x < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the first 12 prime bases.
  uint64_t d = x - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t y = powmod_u64(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1; ++i) {
      y = mulmod_u64(y, y, x);
      if (y == x - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

const char* profile_name(Profile p) {
  switch (p) {
    case Profile::Toy: return "toy";
    case Profile::Default: return "default";
    case Profile::Custom: return "custom";
  }
  return "?";
}

double alpha_for(uint32_t n) {
  const double lg = std::log2(static_cast<double>(n));
  return 1.0 / (std::sqrt(static_cast<double>(n)) * lg * lg * lg);
}

double sigma_from_alpha(double alpha, uint32_t q) {
  return alpha * static_cast<double>(q) / std::sqrt(kTwoPi);
}

namespace {

// Smallest prime p = 1 (mod step) with lo <= p <= hi, or 0 if none.
uint64_t smallest_ntt_prime(uint64_t lo, uint64_t hi, uint64_t step) {
  uint64_t k = (lo / step) * step + 1;
  while (k < lo) k += step;
  for (; k <= hi; k += step) {
    if (is_prime(k)) return k;
  }
  return 0;
}

}  // namespace

ParamSet build_params(uint32_t n, Profile profile) {
  if (!is_power_of_two(n) || n < 4)
    raise(errc::invalid_rank, "n must be a power of two, n >= 4 (got " + std::to_string(n) + ")");
  if (profile == Profile::Custom)
    raise(errc::invalid_rank, "build_params only derives toy/default presets");

  const uint32_t m = n / 2;
  const uint64_t step = 2ULL * m;
  ParamSet p;
  p.n = n;
  p.m = m;
  p.profile = profile;

  uint64_t q = 0;
  if (profile == Profile::Toy) {
    // Smallest prime = 1 (mod 2m) strictly above 2n; always exists.
    uint64_t start = 2ULL * n + 1;
    q = smallest_ntt_prime(start, UINT32_MAX, step);
  } else {
    const uint64_t lo = static_cast<uint64_t>(n) * n;
    const uint64_t hi = 2 * lo;
    q = smallest_ntt_prime(lo, hi, step);
    if (q == 0) {
      // Window can miss only at tiny n; take the next prime past 2n^2.
      q = smallest_ntt_prime(hi + 1, 16 * lo, step);
      if (q == 0) raise(errc::no_suitable_prime, "no prime = 1 (mod 2m) near [n^2, 2n^2]");
      p.security_note = "q exceeds 2n^2: no NTT-friendly prime in [n^2, 2n^2]; ";
    }
  }
  if (q == 0 || q > UINT32_MAX) raise(errc::no_suitable_prime, "modulus search failed");
  p.q = static_cast<uint32_t>(q);
  p.ntt_enabled = p.q % (2ULL * m) == 1 && p.q < (1u << 30);
  p.sigma = sigma_from_alpha(alpha_for(n), p.q);
  p.security_note +=
      "preset is an implementation choice (the construction fixes no concrete (n,q,sigma)); "
      "alpha = 1/(sqrt(n)*(log2 n)^3)";
  return p;
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::InvalidRank: return "InvalidRank";
    case Violation::NotPrime: return "NotPrime";
    case Violation::ModulusSharesFactorWith2n: return "ModulusSharesFactorWith2n";
    case Violation::ModulusOutOfRange: return "ModulusOutOfRange";
    case Violation::NttModulusMismatch: return "NttModulusMismatch";
    case Violation::NonPositiveSigma: return "NonPositiveSigma";
  }
  return "?";
}

std::vector<Violation> validate(const ParamSet& p) {
  std::vector<Violation> out;
  const bool rank_ok = is_power_of_two(p.n) && p.n >= 4 && p.m == p.n / 2;
  if (!rank_ok) out.push_back(Violation::InvalidRank);
  if (!is_prime(p.q)) out.push_back(Violation::NotPrime);
  if (rank_ok && std::gcd<uint64_t, uint64_t>(p.q, 2ULL * p.n) != 1)
    out.push_back(Violation::ModulusSharesFactorWith2n);
  if (rank_ok && p.profile == Profile::Default) {
    const uint64_t lo = static_cast<uint64_t>(p.n) * p.n;
    if ((p.q < lo || p.q > 2 * lo) && p.security_note.find("q exceeds 2n^2") == std::string::npos)
      out.push_back(Violation::ModulusOutOfRange);
  }
  if (rank_ok && p.ntt_enabled && p.q % (2ULL * p.m) != 1)
    out.push_back(Violation::NttModulusMismatch);
  if (!(p.sigma > 0.0)) out.push_back(Violation::NonPositiveSigma);
  return out;
}

std::string param_report(const ParamSet& p) {
  std::ostringstream os;
  os << "n=" << p.n << '\n'
     << "m=" << p.m << '\n'
     << "q=" << p.q << '\n'
     << "sigma=" << p.sigma << '\n'
     << "alpha=" << (p.sigma * std::sqrt(kTwoPi) / p.q) << '\n'
     << "ntt_enabled=" << (p.ntt_enabled ? "true" : "false") << '\n'
     << "profile=" << profile_name(p.profile) << '\n'
     << "security_note=" << p.security_note << '\n';
  return os.str();
}

ParamSet params_from_wire(uint32_t n, uint32_t q) {
  if (!is_power_of_two(n) || n < 4)
    raise(errc::param_mismatch, "wire n must be a power of two >= 4");
  ParamSet p;
  p.n = n;
  p.m = n / 2;
  p.q = q;
  p.sigma = sigma_from_alpha(alpha_for(n), q);
  p.ntt_enabled = (q % (2ULL * p.m) == 1) && is_prime(q);
  p.profile = Profile::Custom;
  p.security_note = "reconstructed from serialized header";
  return p;
}

}  // namespace grlwe
