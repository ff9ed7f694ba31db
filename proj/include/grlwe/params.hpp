#ifndef GRLWE_PARAMS_HPP
#define GRLWE_PARAMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace grlwe {

enum class Profile { Toy, Default, Custom };

const char* profile_name(Profile p);

/**
 * Parameter set for the rank-n dihedral quotient ring working modulo q.
 *
 * Invariants: n a power of two, n >= 4; m = n/2; q an odd prime with
 * gcd(q, 2n) = 1; for the Default profile q lies in [n^2, 2n^2]; if
 * ntt_enabled then q = 1 (mod 2m) so x^m + 1 splits mod q; sigma > 0.
 * sigma is the error standard deviation in absolute coefficient units.
 */
struct ParamSet {
  uint32_t n = 0;
  uint32_t m = 0;
  uint32_t q = 0;
  double sigma = 0.0;
  bool ntt_enabled = false;
  Profile profile = Profile::Custom;
  std::string security_note;
};

/**
 * Derive a parameter set for rank n.
 *
 * Default profile: q is the smallest prime = 1 (mod 2m) in [n^2, 2n^2]
 * (falling back past 2n^2 with a security note if the window is empty).
 * Toy profile: q is the smallest prime = 1 (mod 2m) above 2n.
 * sigma = q * alpha / sqrt(2*pi) with alpha = alpha_for(n).
 */
ParamSet build_params(uint32_t n, Profile profile);

/// Relative error rate: 1 / (sqrt(n) * (log2 n)^3). See the params report
/// for the rationale of the chosen exponents.
double alpha_for(uint32_t n);

/// sigma in absolute coefficient units from the width parameter alpha.
double sigma_from_alpha(double alpha, uint32_t q);

enum class Violation {
  InvalidRank,
  NotPrime,
  ModulusSharesFactorWith2n,
  ModulusOutOfRange,
  NttModulusMismatch,
  NonPositiveSigma,
};

const char* violation_name(Violation v);

/// Empty iff every ParamSet invariant holds. Reports, never throws.
std::vector<Violation> validate(const ParamSet& p);

/// One `key=value` line per field (the CLI `params` report).
std::string param_report(const ParamSet& p);

bool is_prime(uint64_t x);

/// Reconstruct a Custom-profile ParamSet from (n, q) as read off the wire.
ParamSet params_from_wire(uint32_t n, uint32_t q);

}  // namespace grlwe

#endif
