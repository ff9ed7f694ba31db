#ifndef GRLWE_SAMPLER_HPP
#define GRLWE_SAMPLER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "grlwe/group_ring.hpp"
#include "grlwe/params.hpp"
#include "grlwe/rng.hpp"

namespace grlwe {

enum class ErrorMode { Rounded, Integrated };

/**
 * Per-coefficient error distribution on Z/qZ of standard deviation sigma
 * (absolute coefficient units).
 *
 * Rounded: draw N(0, sigma^2), round to nearest, reduce mod q.
 * Integrated: exact per-residue probabilities by integrating the wrapped
 * Gaussian over [k - 1/2, k + 1/2) + qZ, inverse-sampled from a CDF table.
 * The two modes define the same distribution; the table is exact to ~1e-12.
 */
class ErrorDist {
 public:
  ErrorDist(double sigma, uint32_t q, uint32_t m, ErrorMode mode = ErrorMode::Rounded);
  static ErrorDist from_params(const ParamSet& p, ErrorMode mode = ErrorMode::Rounded);

  double sigma() const { return sigma_; }
  uint32_t q() const { return q_; }
  uint32_t m() const { return m_; }
  ErrorMode mode() const { return mode_; }

  uint32_t sample_coeff(Rng& rng) const;

  /// Exact residue probabilities (index k = residue); built on demand.
  const std::vector<double>& pmf() const;

 private:
  double sigma_;
  uint32_t q_;
  uint32_t m_;
  ErrorMode mode_;
  mutable std::shared_ptr<const std::vector<double>> pmf_;
  std::shared_ptr<const std::vector<double>> cdf_;
};

/// Element with all n coefficients uniform on [0, q).
RingElement sample_uniform(uint32_t m, uint32_t q, Rng& rng);

/// Element with i.i.d. error-distributed coefficients.
RingElement sample_error(const ErrorDist& dist, Rng& rng);

/// Which side the secret multiplies on: b = s a + e (left) or b = a s + e (right).
enum class SampleOrder { LeftSecret, RightSecret };

struct LweSample {
  RingElement a;
  RingElement b;
};

LweSample sample_lwe(const RingElement& s, const ErrorDist& dist, Rng& rng,
                     SampleOrder order = SampleOrder::LeftSecret);

/**
 * Normal-form reduction of a pair of right-secret samples (b_i = a_i s + e_i):
 * the output sample has b' = a' e1 - e2, i.e. its secret is the first error.
 * Throws NotInvertible when the first sample's a is not a unit.
 */
LweSample to_normal_form(const LweSample& s1, const LweSample& s2);

}  // namespace grlwe

#endif
