#pragma once

#include "sphclif/geometry.hpp"
#include "sphclif/multivector.hpp"

namespace sphclif {

/// Angular Dirac operator at a sphere point,
///   Gamma_w f = -sum_{i<j} e_ij (w_i d_j - w_j d_i) f,
/// evaluated from the field's exact ambient partials.
Multivector gamma_omega(const AnalyticField& f, const SpherePoint& w);

/// Gamma_alpha = Gamma_w + alpha.
Multivector gamma_alpha(const AnalyticField& f, const SpherePoint& w, Complex alpha);

/// Conjugated operator: Clifford-conjugated coefficients
/// (conj(e_ij) = -e_ij) and conjugated alpha, i.e.
///   Gamma_bar_alpha = -Gamma_w + conj(alpha).
Multivector gamma_alpha_bar(const AnalyticField& f, const SpherePoint& w, Complex alpha);

/// The field v -> Gamma_alpha f (v) with its own exact partials, built
/// from f's second partials. Needed to compose Gamma operators.
AnalyticField gamma_alpha_field(const AnalyticField& f, Complex alpha);

/// Factored spherical Laplacian Delta_alpha = Gamma_beta Gamma_alpha with
/// alpha + beta = -n + 1 (n = 3 here). Requires second partials.
Multivector spherical_laplacian_factored(const AnalyticField& f, const SpherePoint& w,
                                         Complex alpha);

struct MonogenicityReport {
  bool monogenic = false;
  double max_residual = 0.0;
};

/// max over interior nodes of |Gamma_alpha f| / (1 + |f|), compared
/// against tol.
MonogenicityReport is_monogenic(const AnalyticField& f, const SphericalDomain& dom,
                                Complex alpha, double tol);

}  // namespace sphclif
