#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sphclif {

using Complex = std::complex<double>;

/// Element of the complexified Clifford algebra Cl_n(C) with the
/// negative-definite signature e_i^2 = -1, 1 <= i,j <= n,
/// e_i e_j + e_j e_i = -2 delta_ij.
///
/// Coefficients are stored densely, indexed by blade bitmask: bit i set
/// means e_{i+1} is a factor of the blade. Mask 0 is the scalar unit.
class Multivector {
 public:
  static constexpr int kMaxDim = 12;

  explicit Multivector(int n);

  /// Scalar z in Cl_n.
  static Multivector scalar(int n, Complex z);
  /// Basis vector e_i, 1-based index.
  static Multivector basis_vector(int n, int i);
  /// Basis blade for a bitmask, with coefficient z.
  static Multivector blade(int n, std::uint32_t mask, Complex z = 1.0);
  /// Grade-1 element from n real (or complex) components.
  static Multivector vector(int n, const std::vector<Complex>& comps);

  int dim() const { return n_; }
  int size() const { return static_cast<int>(coeff_.size()); }

  Complex operator[](std::uint32_t mask) const { return coeff_[mask]; }
  Complex& operator[](std::uint32_t mask) { return coeff_[mask]; }

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(Complex z);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, Complex z) { return a *= z; }
  friend Multivector operator*(Complex z, Multivector a) { return a *= z; }
  friend Multivector operator-(Multivector a) { return a *= Complex(-1.0); }

  bool is_zero(double tol = 0.0) const;

  /// Largest |coefficient|.
  double max_abs_coeff() const;

  /// Frobenius norm sqrt(sum |c_A|^2); coincides with the scalar part of
  /// x conj(x) for any x, and is used as the numerical magnitude.
  double frob_norm() const;

 private:
  int n_;
  std::vector<Complex> coeff_;

  void check_same_dim(const Multivector& rhs) const;
};

/// Geometric (Clifford) product. Throws std::invalid_argument on
/// dimension mismatch.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Splits the product of two grade-1 elements x y into its scalar part
/// -sum x_i y_i and its grade-2 part. Throws if an input is not pure
/// grade 1.
struct VectorParts {
  Complex scalar;
  Multivector bivector;
};
VectorParts vector_parts(const Multivector& x, const Multivector& y);

/// Complexified Clifford conjugate: blade reversal with e_j -> -e_j,
/// i.e. conj(e_A) = (-1)^{k(k+1)/2} e_A for grade k, and complex
/// conjugation of every coefficient. Involution.
Multivector conjugate(const Multivector& a);

/// Keeps only the blades of grade k.
Multivector grade_project(const Multivector& a, int k);

/// Scalar part of a conj(a). Real and equal to sum x_i^2 for a real
/// grade-1 vector.
Complex clifford_norm_sq(const Multivector& a);

/// Inverse of a nonzero real grade-1 vector: x^{-1} = -x / |x|^2.
/// Throws std::domain_error for the zero vector and
/// std::invalid_argument for non-vector input.
Multivector vector_inverse(const Multivector& x);

/// Grade of a single blade mask (popcount).
int blade_grade(std::uint32_t mask);

/// Sign of the product of basis blades a*b under e_i^2 = -1; the
/// resulting blade is a XOR b.
double blade_product_sign(std::uint32_t a, std::uint32_t b);

}  // namespace sphclif
