#pragma once

#include <complex>

#include "sphclif/multivector.hpp"

namespace sphclif {

/// Parameters shared by the kernel and its Gegenbauer series.
///
/// `alpha` must stay away from the integers (the kernel prefactor has
/// 1/sin(pi alpha)). `antipode_guard` is the minimum allowed value of
/// 1 + w.v, with w.v the negative (Clifford) inner product of unit
/// vectors; equivalently it keeps the hypergeometric argument
/// (1 - z)/2 away from its divergence point.
struct KernelConfig {
  Complex alpha{0.5, 0.0};
  int n = 3;
  int max_terms = 400;
  double series_tol = 1e-14;
  double antipode_guard = 1e-9;

  void validate() const;
};

struct SeriesResult {
  Complex value{0.0};
  Complex dvalue{0.0};  ///< derivative with respect to d
  int terms = 0;
  bool converged = false;
  bool diverged = false;
};

/// Rising factorial (x)_k = prod_{i=1..k} (x + i - 1); (x)_0 = 1.
Complex pochhammer(Complex x, int k);

/// Log-gamma for complex argument (Lanczos approximation, principal
/// branch, reflection for Re z < 1/2).
Complex log_gamma(Complex z);

/// Digamma for complex argument (recurrence + asymptotic series).
Complex digamma(Complex z);

/// F(a,b;a+b-1;d) with its d-derivative for d near 1, through the
/// logarithmic connection formula
///   F = G(a+b-1)/(G(a)G(b)) (1-d)^{-1}
///     + G(a+b-1)/(G(a-1)G(b-1)) sum_k p_k (1-d)^k
///       [ln(1-d) - psi(k+1) - psi(k+2) + psi(a+k) + psi(b+k)],
/// p_k = (a)_k (b)_k / (k! (k+1)!). Needed because the direct series
/// stalls near the kernel singularity; applies to n = 3, where the
/// Gegenbauer parameters satisfy c = a + b - 1 exactly.
SeriesResult hyp2f1_log_m1(Complex a, Complex b, Complex d, const KernelConfig& cfg);

/// Gauss hypergeometric series F(a,b;c;d) = sum_k (a)_k (b)_k d^k / ((c)_k k!),
/// evaluated with the product-form term recurrence
///   t_k = t_{k-1} * (ab + (i-1)(a+b) + (i-1)^2) / ((c+i-1) i) * d,  i = k,
/// together with its d-derivative. Stops when |t_k| <= tol*|sum| or at
/// max_terms; five consecutive growing terms flag divergence instead of
/// throwing. A pole of (c)_k within reach throws std::domain_error.
SeriesResult hyp2f1_product(Complex a, Complex b, Complex c, Complex d,
                            const KernelConfig& cfg);

struct GegenbauerResult {
  Complex value{0.0};
  Complex dvalue{0.0};  ///< d/dz
  int terms = 0;
  bool converged = false;
  bool diverged = false;
};

/// Gegenbauer function of complex degree alpha and order lambda,
///   C_alpha^lambda(z) = Gamma(alpha+2 lambda) / (Gamma(alpha+1) Gamma(2 lambda))
///                       * F(-alpha, alpha+2 lambda; lambda+1/2; (1-z)/2).
/// When 2 lambda is a positive integer the Gamma ratio reduces to a
/// Pochhammer product and avoids Gamma poles entirely; otherwise it is
/// evaluated through complex log-gamma.
GegenbauerResult gegenbauer(Complex alpha, Complex lambda, Complex z,
                            const KernelConfig& cfg);

/// C_alpha^lambda(1) = Gamma(alpha+2 lambda)/(Gamma(alpha+1) Gamma(2 lambda)).
Complex gegenbauer_at_one(Complex alpha, Complex lambda);

/// Surface area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

}  // namespace sphclif
