#include "grlwe/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

// P[X in [a, b]] for X ~ N(0, sigma^2).
double gaussian_mass(double a, double b, double sigma) {
  const double inv = 1.0 / (sigma * std::sqrt(2.0));
  return 0.5 * (std::erf(b * inv) - std::erf(a * inv));
}

// Exact symmetric residue probabilities of the wrapped, bucketed Gaussian.
std::vector<double> build_pmf(double sigma, uint32_t q) {
  std::vector<double> pmf(q, 0.0);
  // Residue k collects mass over [k - 1/2, k + 1/2) + jq; wraps matter once
  // sigma is within a few multiples of q.
  const int64_t wraps = 2 + static_cast<int64_t>(std::ceil(10.0 * sigma / q));
  auto mass_at = [&](uint32_t k) {
    double p = 0.0;
    for (int64_t j = -wraps; j <= wraps; ++j) {
      const double center = static_cast<double>(k) + static_cast<double>(j) * q;
      p += gaussian_mass(center - 0.5, center + 0.5, sigma);
    }
    return p;
  };
  pmf[0] = mass_at(0);
  for (uint32_t k = 1; k <= q / 2; ++k) {
    const double p = mass_at(k);
    pmf[k] = p;
    pmf[q - k] = p;  // mirror: exact symmetry Pr[k] = Pr[q-k]
  }
  // Normalize the tiny truncation remainder onto residue 0.
  double total = 0.0;
  for (double p : pmf) total += p;
  pmf[0] += 1.0 - total;
  return pmf;
}

}  // namespace

ErrorDist::ErrorDist(double sigma, uint32_t q, uint32_t m, ErrorMode mode)
    : sigma_(sigma), q_(q), m_(m), mode_(mode) {
  if (!(sigma > 0.0)) raise(errc::param_mismatch, "error width sigma must be positive");
  if (mode_ == ErrorMode::Integrated) {
    auto pmf = std::make_shared<std::vector<double>>(build_pmf(sigma_, q_));
    auto cdf = std::make_shared<std::vector<double>>(*pmf);
    double acc = 0.0;
    for (auto& v : *cdf) {
      acc += v;
      v = acc;
    }
    cdf->back() = 1.0;
    pmf_ = std::move(pmf);
    cdf_ = std::move(cdf);
  }
}

ErrorDist ErrorDist::from_params(const ParamSet& p, ErrorMode mode) {
  return ErrorDist(p.sigma, p.q, p.m, mode);
}

const std::vector<double>& ErrorDist::pmf() const {
  if (!pmf_) pmf_ = std::make_shared<const std::vector<double>>(build_pmf(sigma_, q_));
  return *pmf_;
}

uint32_t ErrorDist::sample_coeff(Rng& rng) const {
  if (mode_ == ErrorMode::Rounded) {
    const double x = rng.gaussian(sigma_);
    int64_t k = std::llround(x) % static_cast<int64_t>(q_);
    if (k < 0) k += q_;
    return static_cast<uint32_t>(k);
  }
  const double u = rng.uniform_unit();
  const auto& cdf = *cdf_;
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<uint32_t>(std::min<size_t>(it - cdf.begin(), q_ - 1));
}

RingElement sample_uniform(uint32_t m, uint32_t q, Rng& rng) {
  RingElement x = gr_zero(m, q);
  for (auto& c : x.f.coeffs) c = rng.uniform_below(q);
  for (auto& c : x.g.coeffs) c = rng.uniform_below(q);
  return x;
}

RingElement sample_error(const ErrorDist& dist, Rng& rng) {
  RingElement x = gr_zero(dist.m(), dist.q());
  for (auto& c : x.f.coeffs) c = dist.sample_coeff(rng);
  for (auto& c : x.g.coeffs) c = dist.sample_coeff(rng);
  return x;
}

LweSample sample_lwe(const RingElement& s, const ErrorDist& dist, Rng& rng, SampleOrder order) {
  LweSample out;
  out.a = sample_uniform(dist.m(), dist.q(), rng);
  const RingElement e = sample_error(dist, rng);
  const RingElement prod =
      order == SampleOrder::LeftSecret ? gr_mul(s, out.a) : gr_mul(out.a, s);
  out.b = gr_add(prod, e);
  return out;
}

LweSample to_normal_form(const LweSample& s1, const LweSample& s2) {
  auto [a_prime, b_prime] = normal_form_transform(s1.a, s1.b, s2.a, s2.b);
  return {a_prime, b_prime};
}

}  // namespace grlwe
