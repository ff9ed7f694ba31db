#include "grlwe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> to_double(const std::vector<int64_t>& v) {
  return std::vector<double>(v.begin(), v.end());
}

}  // namespace

SpectralProfile spectral_profile(const std::vector<double>& f, const std::vector<double>& g) {
  if (f.size() != g.size()) raise(errc::dimension_mismatch, "f and g parts disagree on m");
  const uint32_t m = static_cast<uint32_t>(f.size());
  const uint32_t n = 2 * m;
  SpectralProfile out;
  out.n = n;
  out.evals.reserve(m / 2);
  for (uint32_t k = 1; k < m; k += 2) {
    const double theta = kTwoPi * k / n;
    const std::complex<double> zeta(std::cos(theta), std::sin(theta));
    std::complex<double> vf = 0, vg = 0;
    // Horner evaluation at zeta^k.
    for (uint32_t j = m; j-- > 0;) {
      vf = vf * zeta + f[j];
      vg = vg * zeta + g[j];
    }
    out.evals.push_back({k, std::abs(vf), std::abs(vg)});
  }
  return out;
}

SpectralProfile spectral_profile(const RingElement& x) {
  return spectral_profile(to_double(poly_centered(x.f)), to_double(poly_centered(x.g)));
}

double matrix_norm(const SpectralProfile& profile) {
  double best = 0;
  for (const auto& e : profile.evals) best = std::max(best, e.abs_f + e.abs_g);
  return best;
}

double matrix_norm(const RingElement& x) { return matrix_norm(spectral_profile(x)); }

double matrix_norm(const std::vector<double>& f, const std::vector<double>& g) {
  return matrix_norm(spectral_profile(f, g));
}

std::vector<double> formula_eigenvalues(const RingElement& x) {
  const SpectralProfile profile = spectral_profile(x);
  std::vector<double> out;
  out.reserve(2 * profile.n);
  for (const auto& e : profile.evals) {
    const double plus = (e.abs_f + e.abs_g) * (e.abs_f + e.abs_g);
    const double minus = (e.abs_f - e.abs_g) * (e.abs_f - e.abs_g);
    // k and n-k contribute conjugate blocks with identical spectra.
    out.insert(out.end(), {plus, plus, minus, minus});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_invertible_real(const RingElement& x, double tol) {
  const SpectralProfile profile = spectral_profile(x);
  double gap = std::numeric_limits<double>::infinity();
  for (const auto& e : profile.evals) gap = std::min(gap, std::fabs(e.abs_f - e.abs_g));
  return gap > tol * (1.0 + matrix_norm(profile));
}

RegRepMatrix reg_rep_matrix(const RingElement& x, RepField field) {
  const uint32_t m = x.m();
  const uint32_t n = x.n();
  const uint32_t q = x.q();
  if (n > 64) raise(errc::oracle_size_exceeded, "regular representation is capped at n <= 64");
  RegRepMatrix out;
  out.n = n;
  out.entries.assign(static_cast<size_t>(n) * n, 0);
  const IntRingElement xi = centered_lift(x);
  for (uint32_t col = 0; col < n; ++col) {
    IntRingElement monomial{std::vector<int64_t>(m, 0), std::vector<int64_t>(m, 0)};
    if (col < m)
      monomial.f[col] = 1;
    else
      monomial.g[col - m] = 1;
    const IntRingElement prod = int_gr_mul_oracle(xi, monomial);
    for (uint32_t row = 0; row < n; ++row) {
      int64_t v = row < m ? prod.f[row] : prod.g[row - m];
      if (field == RepField::ModQ) {
        v %= static_cast<int64_t>(q);
        if (v < 0) v += q;
      }
      out.entries[static_cast<size_t>(row) * n + col] = v;
    }
  }
  return out;
}

double gauss_norm_tail(double sigma, uint32_t n, uint32_t trials, double threshold_mult,
                       Rng& rng) {
  const uint32_t m = n / 2;
  const double threshold = threshold_mult * sigma * std::sqrt(static_cast<double>(n));
  uint32_t exceed = 0;
  std::vector<double> f(m), g(m);
  for (uint32_t t = 0; t < trials; ++t) {
    for (auto& v : f) v = rng.gaussian(sigma);
    for (auto& v : g) v = rng.gaussian(sigma);
    if (matrix_norm(f, g) > threshold) ++exceed;
  }
  return static_cast<double>(exceed) / trials;
}

}  // namespace grlwe
