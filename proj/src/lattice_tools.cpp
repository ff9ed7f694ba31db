#include "grlwe/lattice_tools.hpp"

#include <string>

#include "grlwe/errors.hpp"

namespace grlwe {

namespace {

void check_oracle_scale(uint32_t n) {
  if (n > 16) raise(errc::oracle_size_exceeded, "exact lattice checks are capped at n <= 16");
}

std::vector<Rational> rat_negacyclic_mul(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
  const size_t m = a.size();
  std::vector<Rational> c(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) {
      const size_t k = i + j;
      if (k < m)
        c[k] += a[i] * b[j];
      else
        c[k - m] -= a[i] * b[j];
    }
  }
  return c;
}

std::vector<Rational> rat_sigma(const std::vector<Rational>& f) {
  const size_t m = f.size();
  std::vector<Rational> out(m, Rational(0));
  out[0] = f[0];
  for (size_t i = 1; i < m; ++i) out[i] = -f[m - i];
  return out;
}

std::vector<Rational> rat_add(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Inverse of N in Q[x]/(x^m+1) through the negacirculant linear system.
std::optional<std::vector<Rational>> rat_poly_inverse(const std::vector<Rational>& n_poly) {
  const size_t m = n_poly.size();
  RatMatrix mat(m, m);
  for (size_t j = 0; j < m; ++j) {
    std::vector<Rational> e(m, Rational(0));
    e[j] = 1;
    const auto col = rat_negacyclic_mul(n_poly, e);
    for (size_t i = 0; i < m; ++i) mat.at(i, j) = col[i];
  }
  if (rat_det(mat) == 0) return std::nullopt;
  const RatMatrix inv = rat_inverse(mat);
  std::vector<Rational> out(m);
  for (size_t i = 0; i < m; ++i) out[i] = inv.at(i, 0);
  return out;
}

std::vector<Rational> embed(const RatRingElement& x) {
  std::vector<Rational> v = x.f;
  v.insert(v.end(), x.g.begin(), x.g.end());
  return v;
}

RatRingElement monomial(uint32_t m, uint32_t idx) {
  RatRingElement e;
  e.f.assign(m, Rational(0));
  e.g.assign(m, Rational(0));
  if (idx < m)
    e.f[idx] = 1;
  else
    e.g[idx - m] = 1;
  return e;
}

}  // namespace

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix out(n, n);
  for (size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

RatMatrix RatMatrix::from_i64(size_t r, size_t c, const std::vector<int64_t>& entries) {
  RatMatrix out(r, c);
  for (size_t i = 0; i < r * c; ++i) out.a[i] = Rational(static_cast<long>(entries[i]));
  return out;
}

Rational rat_det(const RatMatrix& mat) {
  if (mat.rows != mat.cols) raise(errc::dimension_mismatch, "determinant needs a square matrix");
  RatMatrix w = mat;
  const size_t n = w.rows;
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && w.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (size_t j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      det = -det;
    }
    det *= w.at(col, col);
    const Rational inv_pivot = 1 / w.at(col, col);
    for (size_t r = col + 1; r < n; ++r) {
      if (w.at(r, col) == 0) continue;
      const Rational factor = w.at(r, col) * inv_pivot;
      for (size_t j = col; j < n; ++j) w.at(r, j) -= factor * w.at(col, j);
    }
  }
  return det;
}

RatMatrix rat_inverse(const RatMatrix& mat) {
  if (mat.rows != mat.cols) raise(errc::dimension_mismatch, "inverse needs a square matrix");
  const size_t n = mat.rows;
  RatMatrix w = mat;
  RatMatrix inv = RatMatrix::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && w.at(pivot, col) == 0) ++pivot;
    if (pivot == n) raise(errc::singular_basis, "matrix is singular over Q");
    if (pivot != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Rational scale = 1 / w.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      w.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || w.at(r, col) == 0) continue;
      const Rational factor = w.at(r, col);
      for (size_t j = 0; j < n; ++j) {
        w.at(r, j) -= factor * w.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) raise(errc::dimension_mismatch, "matrix product shape mismatch");
  RatMatrix out(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

RatMatrix rat_transpose(const RatMatrix& mat) {
  RatMatrix out(mat.cols, mat.rows);
  for (size_t i = 0; i < mat.rows; ++i)
    for (size_t j = 0; j < mat.cols; ++j) out.at(j, i) = mat.at(i, j);
  return out;
}

RatRingElement rat_gr_mul(const RatRingElement& x, const RatRingElement& y) {
  if (x.m() != y.m()) raise(errc::dimension_mismatch, "elements disagree on m");
  RatRingElement out;
  out.f = rat_add(rat_negacyclic_mul(x.f, y.f), rat_negacyclic_mul(rat_sigma(x.g), y.g));
  out.g = rat_add(rat_negacyclic_mul(x.g, y.f), rat_negacyclic_mul(rat_sigma(x.f), y.g));
  return out;
}

std::optional<RatRingElement> rat_gr_inverse(const RatRingElement& x) {
  const auto ff = rat_negacyclic_mul(x.f, rat_sigma(x.f));
  const auto gg = rat_negacyclic_mul(rat_sigma(x.g), x.g);
  std::vector<Rational> central_norm(x.m(), Rational(0));
  for (size_t i = 0; i < central_norm.size(); ++i) central_norm[i] = ff[i] - gg[i];
  const auto norm_inv = rat_poly_inverse(central_norm);
  if (!norm_inv) return std::nullopt;
  RatRingElement out;
  out.f = rat_negacyclic_mul(rat_sigma(x.f), *norm_inv);
  out.g = rat_negacyclic_mul(x.g, *norm_inv);
  for (auto& c : out.g) c = -c;
  return out;
}

RatRingElement rat_lift(const RingElement& x) { return rat_lift(centered_lift(x)); }

RatRingElement rat_lift(const IntRingElement& x) {
  RatRingElement out;
  out.f.reserve(x.f.size());
  out.g.reserve(x.g.size());
  for (int64_t v : x.f) out.f.emplace_back(static_cast<long>(v));
  for (int64_t v : x.g) out.g.emplace_back(static_cast<long>(v));
  return out;
}

bool invertible_over_Q(const RingElement& h) {
  return rat_gr_inverse(rat_lift(h)).has_value();
}

IdealLattice ideal_basis(const RingElement& h, IdealSide side) {
  const uint32_t m = h.m();
  const uint32_t n = h.n();
  check_oracle_scale(n);
  const RatRingElement hq = rat_lift(h);
  if (!rat_gr_inverse(hq)) raise(errc::not_invertible, "generator is not invertible over Q");
  IdealLattice lattice;
  lattice.side = side;
  lattice.generator = h;
  lattice.basis = RatMatrix(n, n);
  for (uint32_t j = 0; j < n; ++j) {
    const RatRingElement mono = monomial(m, j);
    const RatRingElement row_elem =
        side == IdealSide::RightIdeal ? rat_gr_mul(hq, mono) : rat_gr_mul(mono, hq);
    const auto row = embed(row_elem);
    for (uint32_t c = 0; c < n; ++c) lattice.basis.at(j, c) = row[c];
  }
  if (rat_det(lattice.basis) == 0)
    raise(errc::not_invertible, "ideal basis is singular");  // cannot happen for invertible h
  return lattice;
}

DualLattice dual_basis(const IdealLattice& lattice) {
  if (rat_det(lattice.basis) == 0) raise(errc::singular_basis, "primal basis is singular");
  return {rat_transpose(rat_inverse(lattice.basis))};
}

IdealLattice left_inverse_ideal(const RingElement& h) {
  const uint32_t m = h.m();
  const uint32_t n = h.n();
  check_oracle_scale(n);
  const auto h_inv = rat_gr_inverse(rat_lift(h));
  if (!h_inv) raise(errc::not_invertible, "generator is not invertible over Q");
  IdealLattice lattice;
  lattice.side = IdealSide::LeftModule;
  lattice.generator = h;
  lattice.basis = RatMatrix(n, n);
  for (uint32_t j = 0; j < n; ++j) {
    const auto row = embed(rat_gr_mul(monomial(m, j), *h_inv));
    for (uint32_t c = 0; c < n; ++c) lattice.basis.at(j, c) = row[c];
  }
  return lattice;
}

bool lattice_contains(const RatMatrix& basis, const std::vector<Rational>& v) {
  // x * basis = v has an integer solution x  <=>  v * basis^{-1} integral.
  const RatMatrix inv = rat_inverse(basis);
  for (size_t j = 0; j < inv.cols; ++j) {
    Rational coord = 0;
    for (size_t i = 0; i < inv.rows; ++i) coord += v[i] * inv.at(i, j);
    if (coord.get_den() != 1) return false;
  }
  return true;
}

bool lattice_equal(const RatMatrix& b1, const RatMatrix& b2) {
  if (b1.rows != b2.rows || b1.cols != b2.cols) return false;
  const size_t n = b1.rows;
  auto rows_inside = [n](const RatMatrix& rows, const RatMatrix& lattice) {
    const RatMatrix inv = rat_inverse(lattice);
    for (size_t r = 0; r < n; ++r) {
      for (size_t j = 0; j < n; ++j) {
        Rational coord = 0;
        for (size_t i = 0; i < n; ++i) coord += rows.at(r, i) * inv.at(i, j);
        if (coord.get_den() != 1) return false;
      }
    }
    return true;
  };
  return rows_inside(b1, b2) && rows_inside(b2, b1);
}

bool check_dual_permutation(const RingElement& h) {
  const uint32_t m = h.m();
  const IdealLattice primal = ideal_basis(h, IdealSide::RightIdeal);
  const DualLattice dual = dual_basis(primal);
  const IdealLattice inverse = left_inverse_ideal(h);
  const uint32_t n = 2 * m;
  RatMatrix transformed(n, n);
  for (uint32_t r = 0; r < n; ++r) {
    transformed.at(r, 0) = inverse.basis.at(r, 0);
    for (uint32_t i = 1; i < m; ++i) transformed.at(r, i) = -inverse.basis.at(r, m - i);
    for (uint32_t i = m; i < n; ++i) transformed.at(r, i) = inverse.basis.at(r, i);
  }
  return lattice_equal(transformed, dual.basis);
}

RingElement mod_q_projection(const std::vector<int64_t>& v, const IdealLattice& lattice) {
  const uint32_t n = lattice.generator.n();
  const uint32_t m = lattice.generator.m();
  const uint32_t q = lattice.generator.q();
  if (v.size() != n) raise(errc::dimension_mismatch, "point has wrong dimension");
  std::vector<Rational> vr;
  vr.reserve(n);
  for (int64_t c : v) vr.emplace_back(static_cast<long>(c));
  if (!lattice_contains(lattice.basis, vr))
    raise(errc::not_in_lattice, "point is not a member of the ideal lattice");
  const std::vector<int64_t> f(v.begin(), v.begin() + m);
  const std::vector<int64_t> g(v.begin() + m, v.end());
  return gr_from_i64(f, g, q);
}

}  // namespace grlwe
