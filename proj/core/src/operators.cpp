#include "sphclif/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace sphclif {

namespace {

/// -sum_{i<j} sign e_ij (w_i d_j f - w_j d_i f) with sign = +1, plus a0 f.
Multivector angular_part(const AnalyticField& f, const SpherePoint& w, double sign,
                         Complex a0) {
  Multivector acc = a0 * f.value(w);
  std::array<Multivector, 3> parts{f.partial(w, 0), f.partial(w, 1), f.partial(w, 2)};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const std::uint32_t mask = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
      Multivector comb = w[i] * parts[static_cast<std::size_t>(j)] -
                         w[j] * parts[static_cast<std::size_t>(i)];
      acc += (-sign) * geometric_product(Multivector::blade(3, mask), comb);
    }
  }
  return acc;
}

}  // namespace

Multivector gamma_omega(const AnalyticField& f, const SpherePoint& w) {
  return angular_part(f, w, +1.0, Complex(0.0));
}

Multivector gamma_alpha(const AnalyticField& f, const SpherePoint& w, Complex alpha) {
  return angular_part(f, w, +1.0, alpha);
}

Multivector gamma_alpha_bar(const AnalyticField& f, const SpherePoint& w, Complex alpha) {
  return angular_part(f, w, -1.0, std::conj(alpha));
}

AnalyticField gamma_alpha_field(const AnalyticField& f, Complex alpha) {
  if (!f.has_second()) {
    throw std::invalid_argument("gamma_alpha_field: second partials required");
  }
  AnalyticField g;
  g.value = [f, alpha](const SpherePoint& w) { return gamma_alpha(f, w, alpha); };
  g.partial = [f, alpha](const SpherePoint& w, int m) {
    // d_m [ -sum e_ij (w_i d_j f - w_j d_i f) + alpha f ]
    Multivector acc = alpha * f.partial(w, m);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const std::uint32_t mask = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
        Multivector comb = w[i] * f.second_partial(w, m, j) -
                           w[j] * f.second_partial(w, m, i);
        if (i == m) comb += f.partial(w, j);
        if (j == m) comb -= f.partial(w, i);
        acc += (-1.0) * geometric_product(Multivector::blade(3, mask), comb);
      }
    }
    return acc;
  };
  return g;
}

Multivector spherical_laplacian_factored(const AnalyticField& f, const SpherePoint& w,
                                         Complex alpha) {
  const Complex beta = Complex(-2.0) - alpha;  // alpha + beta = -n + 1, n = 3
  AnalyticField gf = gamma_alpha_field(f, alpha);
  return gamma_alpha(gf, w, beta);
}

MonogenicityReport is_monogenic(const AnalyticField& f, const SphericalDomain& dom,
                                Complex alpha, double tol) {
  MonogenicityReport rep;
  for (const auto& p : dom.interior_nodes) {
    const double r = gamma_alpha(f, p, alpha).frob_norm() / (1.0 + f.value(p).frob_norm());
    rep.max_residual = std::max(rep.max_residual, r);
  }
  rep.monogenic = rep.max_residual <= tol;
  return rep;
}

}  // namespace sphclif
