#include "sphclif/multivector.hpp"

#include <bit>
#include <cmath>

namespace sphclif {

Multivector::Multivector(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("Multivector: dimension must be in [1, 12]");
  }
  coeff_.assign(std::size_t{1} << n, Complex(0.0));
}

Multivector Multivector::scalar(int n, Complex z) {
  Multivector m(n);
  m.coeff_[0] = z;
  return m;
}

Multivector Multivector::basis_vector(int n, int i) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("basis_vector: index out of range");
  }
  return blade(n, std::uint32_t{1} << (i - 1));
}

Multivector Multivector::blade(int n, std::uint32_t mask, Complex z) {
  Multivector m(n);
  if (mask >= m.coeff_.size()) {
    throw std::invalid_argument("blade: mask out of range for dimension");
  }
  m.coeff_[mask] = z;
  return m;
}

Multivector Multivector::vector(int n, const std::vector<Complex>& comps) {
  if (static_cast<int>(comps.size()) != n) {
    throw std::invalid_argument("vector: expected n components");
  }
  Multivector m(n);
  for (int i = 0; i < n; ++i) m.coeff_[std::uint32_t{1} << i] = comps[i];
  return m;
}

void Multivector::check_same_dim(const Multivector& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("Multivector: operands have different dimensions");
  }
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_dim(rhs);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_dim(rhs);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  return *this;
}

Multivector& Multivector::operator*=(Complex z) {
  for (auto& c : coeff_) c *= z;
  return *this;
}

bool Multivector::is_zero(double tol) const {
  for (const auto& c : coeff_) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

double Multivector::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeff_) m = std::max(m, std::abs(c));
  return m;
}

double Multivector::frob_norm() const {
  double s = 0.0;
  for (const auto& c : coeff_) s += std::norm(c);
  return std::sqrt(s);
}

int blade_grade(std::uint32_t mask) { return std::popcount(mask); }

double blade_product_sign(std::uint32_t a, std::uint32_t b) {
  // Count transpositions needed to interleave b into a, plus one sign
  // flip for every repeated generator (e_i^2 = -1).
  int flips = 0;
  std::uint32_t rest = a;
  while (b != 0) {
    const int i = std::countr_zero(b);
    b &= b - 1;
    // e_{i+1} moves left past the generators of `rest` with higher index
    flips += std::popcount(rest >> (i + 1));
    if (rest & (std::uint32_t{1} << i)) ++flips;  // square to -1
  }
  return (flips % 2 == 0) ? 1.0 : -1.0;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("geometric_product: dimension mismatch");
  }
  Multivector out(a.dim());
  const int sz = a.size();
  for (int i = 0; i < sz; ++i) {
    const Complex ca = a[static_cast<std::uint32_t>(i)];
    if (ca == Complex(0.0)) continue;
    for (int j = 0; j < sz; ++j) {
      const Complex cb = b[static_cast<std::uint32_t>(j)];
      if (cb == Complex(0.0)) continue;
      const auto mi = static_cast<std::uint32_t>(i);
      const auto mj = static_cast<std::uint32_t>(j);
      out[mi ^ mj] += blade_product_sign(mi, mj) * ca * cb;
    }
  }
  return out;
}

namespace {
bool pure_grade(const Multivector& x, int k) {
  for (int m = 0; m < x.size(); ++m) {
    if (blade_grade(static_cast<std::uint32_t>(m)) != k &&
        x[static_cast<std::uint32_t>(m)] != Complex(0.0)) {
      return false;
    }
  }
  return true;
}
}  // namespace

VectorParts vector_parts(const Multivector& x, const Multivector& y) {
  if (!pure_grade(x, 1) || !pure_grade(y, 1)) {
    throw std::invalid_argument("vector_parts: inputs must be pure grade 1");
  }
  Multivector p = geometric_product(x, y);
  VectorParts out{p[0], grade_project(p, 2)};
  return out;
}

Multivector conjugate(const Multivector& a) {
  Multivector out(a.dim());
  for (int m = 0; m < a.size(); ++m) {
    const int k = blade_grade(static_cast<std::uint32_t>(m));
    const double sgn = (k * (k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    out[static_cast<std::uint32_t>(m)] = sgn * std::conj(a[static_cast<std::uint32_t>(m)]);
  }
  return out;
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.dim()) {
    throw std::invalid_argument("grade_project: grade out of range");
  }
  Multivector out(a.dim());
  for (int m = 0; m < a.size(); ++m) {
    if (blade_grade(static_cast<std::uint32_t>(m)) == k) {
      out[static_cast<std::uint32_t>(m)] = a[static_cast<std::uint32_t>(m)];
    }
  }
  return out;
}

Complex clifford_norm_sq(const Multivector& a) {
  return geometric_product(a, conjugate(a))[0];
}

Multivector vector_inverse(const Multivector& x) {
  if (!pure_grade(x, 1)) {
    throw std::invalid_argument("vector_inverse: input must be pure grade 1");
  }
  for (int i = 0; i < x.dim(); ++i) {
    const Complex c = x[std::uint32_t{1} << i];
    if (std::abs(c.imag()) > 1e-14 * (1.0 + std::abs(c.real()))) {
      throw std::invalid_argument("vector_inverse: input must have real components");
    }
  }
  const Complex nsq = clifford_norm_sq(x);
  if (!(nsq.real() > 0.0)) {
    throw std::domain_error("vector_inverse: zero vector is not invertible");
  }
  Multivector out = x;
  out *= Complex(-1.0 / nsq.real());
  return out;
}

}  // namespace sphclif
