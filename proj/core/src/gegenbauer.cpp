#include "sphclif/gegenbauer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphclif {

void KernelConfig::validate() const {
  if (n < 2 || n > Multivector::kMaxDim) {
    throw std::invalid_argument("KernelConfig: n out of range");
  }
  if (max_terms < 1) throw std::invalid_argument("KernelConfig: max_terms < 1");
  if (!(series_tol > 0.0)) throw std::invalid_argument("KernelConfig: series_tol <= 0");
  if (!(antipode_guard > 0.0)) throw std::invalid_argument("KernelConfig: antipode_guard <= 0");
  const double dist_int = std::abs(alpha.real() - std::round(alpha.real()));
  if (std::abs(alpha.imag()) < 1e-9 && dist_int < 1e-9) {
    throw std::domain_error("KernelConfig: alpha too close to an integer (kernel pole)");
  }
}

Complex pochhammer(Complex x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative k");
  Complex p(1.0);
  for (int i = 1; i <= k; ++i) p *= x + Complex(i - 1);
  return p;
}

Complex log_gamma(Complex z) {
  // Lanczos, g = 7, 9 coefficients.
  static const double kCoef[9] = {
      0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,  12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const Complex pi(std::numbers::pi);
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(Complex(1.0) - z);
  }
  z -= Complex(1.0);
  Complex x(kCoef[0]);
  for (int i = 1; i < 9; ++i) x += kCoef[i] / (z + Complex(i));
  const Complex t = z + Complex(7.5);
  return 0.5 * std::log(Complex(2.0 * std::numbers::pi)) +
         (z + Complex(0.5)) * std::log(t) - t + std::log(x);
}

SeriesResult hyp2f1_product(Complex a, Complex b, Complex c, Complex d,
                            const KernelConfig& cfg) {
  if (std::abs(d) > 1.0 + 1e-12) {
    throw std::domain_error("hyp2f1_product: |d| > 1");
  }
  SeriesResult out;
  Complex term(1.0);       // t_{k-1}, starting with t_0 = 1
  Complex sum(1.0);        // includes the k = 0 term
  Complex dsum(0.0);       // derivative w.r.t. d
  double prev_abs = 1.0;
  int grow = 0;
  const Complex ab = a * b;
  const Complex apb = a + b;
  for (int k = 1; k <= cfg.max_terms; ++k) {
    const Complex im1(k - 1);
    const Complex denom = (c + im1) * Complex(k);
    if (std::abs(denom) < 1e-300) {
      throw std::domain_error("hyp2f1_product: pole of (c)_k within reach");
    }
    const Complex ratio = (ab + im1 * apb + im1 * im1) / denom;
    // t'_k = k t_k / d, computed without dividing by d
    const Complex dterm = Complex(k) * ratio * term;
    term *= ratio * d;
    sum += term;
    dsum += dterm;
    out.terms = k;
    const double ta = std::abs(term);
    if (ta <= cfg.series_tol * std::abs(sum)) {
      out.converged = true;
      break;
    }
    // growing terms are normal while the series climbs toward its peak;
    // only sustained growth past any plausible peak is divergence
    if (ta > prev_abs) {
      if (++grow >= 5 && ta > 1e8 * (1.0 + std::abs(sum))) {
        out.diverged = true;
        break;
      }
    } else {
      grow = 0;
    }
    prev_abs = ta;
  }
  out.value = sum;
  out.dvalue = dsum;
  return out;
}

Complex digamma(Complex z) {
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    const Complex pi(std::numbers::pi);
    return digamma(Complex(1.0) - z) - pi / std::tan(pi * z);
  }
  Complex acc(0.0);
  while (std::abs(z) < 9.0) {
    acc -= Complex(1.0) / z;
    z += Complex(1.0);
  }
  // asymptotic: ln z - 1/(2z) - sum B_{2n}/(2n z^{2n})
  const Complex inv = Complex(1.0) / z;
  const Complex inv2 = inv * inv;
  Complex s = std::log(z) - 0.5 * inv;
  static const double kB[6] = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                               -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0};
  Complex p = inv2;
  for (double bcoef : kB) {
    s -= bcoef * p;
    p *= inv2;
  }
  return acc + s;
}

SeriesResult hyp2f1_log_m1(Complex a, Complex b, Complex d, const KernelConfig& cfg) {
  const Complex w = Complex(1.0) - d;
  if (std::abs(w) >= 1.0) {
    throw std::domain_error("hyp2f1_log_m1: |1-d| >= 1");
  }
  if (std::abs(w) < 1e-300) {
    throw std::domain_error("hyp2f1_log_m1: evaluation at the singular point");
  }
  const Complex c1 = std::exp(log_gamma(a + b - Complex(1.0)) - log_gamma(a) -
                              log_gamma(b));
  const Complex c2 = std::exp(log_gamma(a + b - Complex(1.0)) -
                              log_gamma(a - Complex(1.0)) - log_gamma(b - Complex(1.0)));
  const Complex lnw = std::log(w);

  SeriesResult out;
  Complex value = c1 / w;
  Complex dvalue = c1 / (w * w);
  Complex poch(1.0);  // (a)_k (b)_k / (k! (k+1)!)
  Complex wk(1.0);    // w^k
  for (int k = 0; k <= cfg.max_terms; ++k) {
    const Complex ck = -digamma(Complex(k + 1)) - digamma(Complex(k + 2)) +
                       digamma(a + Complex(k)) + digamma(b + Complex(k));
    const Complex wkm1 = wk / w;  // w^{k-1}
    const Complex term = c2 * poch * wk * (lnw + ck);
    value += term;
    // d/dd [w^k (ln w + ck)] = -k w^{k-1} (ln w + ck) - w^{k-1}
    dvalue += c2 * poch * (-Complex(k) * wkm1 * (lnw + ck) - wkm1);
    out.terms = k;
    if (k > 0 && std::abs(term) <= cfg.series_tol * std::abs(value)) {
      out.converged = true;
      break;
    }
    wk *= w;
    poch *= (a + Complex(k)) * (b + Complex(k)) /
            (Complex(k + 1) * Complex(k + 2));
  }
  out.value = value;
  out.dvalue = dvalue;
  return out;
}

namespace {

/// Gamma(alpha+2 lambda) / (Gamma(alpha+1) Gamma(2 lambda)).
Complex gegenbauer_prefactor(Complex alpha, Complex lambda) {
  const Complex two_lambda = 2.0 * lambda;
  const double tl_re = two_lambda.real();
  const double tl_int = std::round(tl_re);
  if (std::abs(two_lambda.imag()) < 1e-13 && std::abs(tl_re - tl_int) < 1e-12 &&
      tl_int >= 1.0) {
    // Gamma(alpha + m) / Gamma(alpha + 1) = (alpha + 1)_{m-1} for integer m >= 1
    const int m = static_cast<int>(tl_int);
    Complex num = pochhammer(alpha + Complex(1.0), m - 1);
    double fact = 1.0;
    for (int i = 2; i < m; ++i) fact *= i;  // Gamma(m) = (m-1)!
    return num / fact;
  }
  const Complex la = log_gamma(alpha + two_lambda);
  const Complex lb = log_gamma(alpha + Complex(1.0));
  const Complex lc = log_gamma(two_lambda);
  if (!std::isfinite(lb.real()) || !std::isfinite(la.real()) ||
      !std::isfinite(lc.real())) {
    throw std::domain_error("gegenbauer: Gamma pole in prefactor");
  }
  return std::exp(la - lb - lc);
}

}  // namespace

GegenbauerResult gegenbauer(Complex alpha, Complex lambda, Complex z,
                            const KernelConfig& cfg) {
  const Complex d = (Complex(1.0) - z) / 2.0;
  if (std::abs(d) > 1.0 + 1e-9) {
    throw std::domain_error("gegenbauer: series argument (1-z)/2 outside unit disk");
  }
  const Complex c = lambda + Complex(0.5);
  const Complex a = -alpha;
  const Complex b = alpha + 2.0 * lambda;
  SeriesResult f;
  // Near d = 1 the direct series stalls; when c = a + b - 1 (lambda =
  // 3/2, the n = 3 kernel) switch to the logarithmic connection formula.
  const bool log_case = std::abs(c - (a + b - Complex(1.0))) < 1e-12;
  if (log_case && std::abs(d) > 0.9 && std::abs(Complex(1.0) - d) < 1.0) {
    f = hyp2f1_log_m1(a, b, d, cfg);
  } else {
    f = hyp2f1_product(a, b, c, d, cfg);
  }
  const Complex pref = gegenbauer_prefactor(alpha, lambda);
  GegenbauerResult out;
  out.value = pref * f.value;
  out.dvalue = pref * f.dvalue * Complex(-0.5);  // d/dz of (1-z)/2
  out.terms = f.terms;
  out.converged = f.converged;
  out.diverged = f.diverged;
  return out;
}

Complex gegenbauer_at_one(Complex alpha, Complex lambda) {
  return gegenbauer_prefactor(alpha, lambda);
}

double sphere_area(int n) {
  if (n < 2) throw std::invalid_argument("sphere_area: n must be >= 2");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

}  // namespace sphclif
