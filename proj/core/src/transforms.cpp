#include "sphclif/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphclif {

namespace {

bool excluded(const SpherePoint& node, const SpherePoint& v, double eps) {
  const double t = dot(node, v);
  const double cut = std::cos(eps);
  return t > cut || t < -cut;  // within eps of v or of its antipode
}

void check_sampled(const SphericalDomain& dom, const SampledField& f) {
  if (f.domain != &dom || f.values.size() != dom.interior_nodes.size()) {
    throw std::invalid_argument("transform: field not sampled on this domain");
  }
}

KernelConfig with_alpha(const KernelConfig& k, Complex alpha) {
  KernelConfig out = k;
  out.alpha = alpha;
  return out;
}

/// Shared quadrature loop for T and its conjugate.
Multivector teodorescu_impl(const SphericalDomain& dom, const SampledField& f,
                            const KernelConfig& kc, const SpherePoint& v,
                            const TransformConfig& cfg, bool conj_kernel,
                            const Multivector* f_at_v) {
  check_sampled(dom, f);
  Multivector acc(dom.n);
  std::size_t nearest = 0;
  double nearest_t = -2.0;
  for (std::size_t w = 0; w < dom.interior_nodes.size(); ++w) {
    const SpherePoint& p = dom.interior_nodes[w];
    const double t = dot(p, v);
    if (t > nearest_t) {
      nearest_t = t;
      nearest = w;
    }
    if (excluded(p, v, cfg.exclusion_eps)) continue;
    const KernelValue kv = conj_kernel
                               ? cauchy_kernel_conjugate(p.span(), v.span(), kc)
                               : cauchy_kernel(p.span(), v.span(), kc);
    acc += dom.interior_weights[w] * geometric_product(kv.value, f.values[w]);
  }
  if (cfg.ball_correction && dom.contains(v)) {
    const Complex eff_alpha = conj_kernel ? std::conj(kc.alpha) : kc.alpha;
    const Complex mass = excluded_ball_mass(eff_alpha, cfg.exclusion_eps, kc);
    const Multivector& fv = (f_at_v != nullptr) ? *f_at_v : f.values[nearest];
    acc += mass * fv;
  }
  return acc;
}

Multivector boundary_impl(const SphericalDomain& dom, const std::vector<Multivector>& h,
                          const KernelConfig& kc, const SpherePoint& v, bool conj_kernel,
                          double arc_excl, const SpherePoint* arc_center, double factor) {
  if (dom.boundary_nodes.empty()) return Multivector(dom.n);
  if (h.size() != dom.boundary_nodes.size()) {
    throw std::invalid_argument("cauchy_boundary: data size != boundary node count");
  }
  Multivector acc(dom.n);
  for (std::size_t b = 0; b < dom.boundary_nodes.size(); ++b) {
    const BoundaryNode& bn = dom.boundary_nodes[b];
    if (arc_center != nullptr &&
        geodesic_distance(bn.point, *arc_center) <= arc_excl) {
      continue;
    }
    const KernelValue kv = conj_kernel
                               ? cauchy_kernel_conjugate(bn.point.span(), v.span(), kc)
                               : cauchy_kernel(bn.point.span(), v.span(), kc);
    const Multivector wn =
        geometric_product(bn.point.embed(), bn.conormal.embed());
    acc += (factor * bn.weight) *
           geometric_product(kv.value, geometric_product(wn, h[b]));
  }
  return acc;
}

}  // namespace

Complex excluded_ball_mass(Complex alpha, double eps, const KernelConfig& kernel) {
  KernelConfig kc = kernel;
  kc.alpha = alpha;
  // 2 pi int_0^eps scalar(Psi)(rho) sin(rho) drho by Gauss-Legendre;
  // the scalar part is bounded near rho = 0, so a fixed rule suffices.
  static thread_local std::vector<double> nodes, weights;
  if (nodes.empty()) gauss_legendre(24, nodes, weights);
  const std::array<double, 3> p0{0.0, 0.0, 1.0};
  Complex acc(0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double rho = 0.5 * eps * (nodes[i] + 1.0);
    const double wq = 0.5 * eps * weights[i];
    const std::array<double, 3> p1{std::sin(rho), 0.0, std::cos(rho)};
    const KernelValue kv = cauchy_kernel(std::span<const double>(p1.data(), 3),
                                         std::span<const double>(p0.data(), 3), kc);
    acc += wq * std::sin(rho) * kv.value[0u];
  }
  return 2.0 * std::numbers::pi * acc;
}

Multivector teodorescu(const SphericalDomain& dom, const SampledField& f,
                       Complex alpha, const SpherePoint& v, const TransformConfig& cfg) {
  return teodorescu_impl(dom, f, with_alpha(cfg.kernel, alpha), v, cfg, false, nullptr);
}

Multivector teodorescu(const SphericalDomain& dom, const SampledField& f,
                       Complex alpha, const SpherePoint& v, const Multivector& f_at_v,
                       const TransformConfig& cfg) {
  return teodorescu_impl(dom, f, with_alpha(cfg.kernel, alpha), v, cfg, false, &f_at_v);
}

Multivector teodorescu_bar(const SphericalDomain& dom, const SampledField& f,
                           Complex alpha, const SpherePoint& v,
                           const TransformConfig& cfg) {
  return teodorescu_impl(dom, f, with_alpha(cfg.kernel, alpha), v, cfg, true, nullptr);
}

Multivector teodorescu_bar(const SphericalDomain& dom, const SampledField& f,
                           Complex alpha, const SpherePoint& v,
                           const Multivector& f_at_v, const TransformConfig& cfg) {
  return teodorescu_impl(dom, f, with_alpha(cfg.kernel, alpha), v, cfg, true, &f_at_v);
}

Multivector cauchy_boundary(const SphericalDomain& dom, const std::vector<Multivector>& h,
                            Complex alpha, const SpherePoint& v,
                            const TransformConfig& cfg) {
  if (!dom.boundary_nodes.empty()) {
    const double d = std::abs(geodesic_distance(v, SpherePoint{{0, 0, 1}}) - dom.theta0);
    // distance from v to the boundary circle along colatitude
    if (std::acos(std::clamp(v[2], -1.0, 1.0)) > 0.0 && d < cfg.exclusion_eps) {
      throw std::invalid_argument("cauchy_boundary: v too close to the boundary");
    }
  }
  return boundary_impl(dom, h, with_alpha(cfg.kernel, alpha), v, false, -1.0, nullptr,
                       1.0);
}

Multivector cauchy_boundary_bar(const SphericalDomain& dom,
                                const std::vector<Multivector>& h, Complex alpha,
                                const SpherePoint& v, const TransformConfig& cfg) {
  return boundary_impl(dom, h, with_alpha(cfg.kernel, alpha), v, true, -1.0, nullptr,
                       1.0);
}

Multivector singular_cauchy_boundary(const SphericalDomain& dom,
                                     const std::vector<Multivector>& h, Complex alpha,
                                     std::size_t boundary_index,
                                     const TransformConfig& cfg) {
  if (boundary_index >= dom.boundary_nodes.size()) {
    throw std::invalid_argument("singular_cauchy_boundary: v must be a boundary node");
  }
  const SpherePoint v = dom.boundary_nodes[boundary_index].point;
  return boundary_impl(dom, h, with_alpha(cfg.kernel, alpha), v, false, cfg.pv_eps, &v,
                       2.0);
}

Multivector gamma_of_teodorescu(const SphericalDomain& dom, const SampledField& f,
                                Complex alpha, const SpherePoint& v,
                                const Multivector& f_at_v, const TransformConfig& cfg,
                                GammaVariant variant) {
  check_sampled(dom, f);
  const KernelConfig kc = with_alpha(cfg.kernel, alpha);
  Multivector acc(dom.n);
  for (std::size_t w = 0; w < dom.interior_nodes.size(); ++w) {
    const SpherePoint& p = dom.interior_nodes[w];
    if (excluded(p, v, cfg.exclusion_eps)) continue;
    const Multivector gk = gamma_applied_kernel(p.span(), v.span(), kc, variant);
    acc += dom.interior_weights[w] * geometric_product(gk, f.values[w]);
  }
  if (dom.contains(v)) {
    const double free_term = (variant == GammaVariant::plain) ? 1.0 : -1.0;
    acc += free_term * f_at_v;
    if (cfg.ball_correction && variant == GammaVariant::conjugated) {
      // [Gamma_bar Psi] = 2 Re(alpha) Psi away from the diagonal, so the
      // excluded disk's analytic mass scales the same ball integral.
      const Complex mu = 2.0 * alpha.real();
      acc += mu * excluded_ball_mass(alpha, cfg.exclusion_eps, kc) * f_at_v;
    }
  }
  return acc;
}

namespace {

Multivector gamma_boundary_impl(const SphericalDomain& dom,
                                const std::vector<Multivector>& h,
                                const KernelConfig& kc, const SpherePoint& v,
                                double deriv_sign, Complex zeroth) {
  if (dom.boundary_nodes.empty()) return Multivector(dom.n);
  if (h.size() != dom.boundary_nodes.size()) {
    throw std::invalid_argument("gamma_of_cauchy_boundary: data size mismatch");
  }
  Multivector acc(dom.n);
  for (std::size_t b = 0; b < dom.boundary_nodes.size(); ++b) {
    const BoundaryNode& bn = dom.boundary_nodes[b];
    const Multivector gk = gamma_applied_kernel_general(bn.point.span(), v.span(), kc,
                                                        deriv_sign, zeroth);
    const Multivector wn = geometric_product(bn.point.embed(), bn.conormal.embed());
    acc += bn.weight * geometric_product(gk, geometric_product(wn, h[b]));
  }
  return acc;
}

}  // namespace

Multivector gamma_of_cauchy_boundary(const SphericalDomain& dom,
                                     const std::vector<Multivector>& h, Complex alpha,
                                     const SpherePoint& v, const TransformConfig& cfg,
                                     GammaVariant variant) {
  const KernelConfig kc = with_alpha(cfg.kernel, alpha);
  const double sign = (variant == GammaVariant::plain) ? -1.0 : 1.0;
  const Complex zeroth = (variant == GammaVariant::plain) ? alpha : std::conj(alpha);
  return gamma_boundary_impl(dom, h, kc, v, sign, zeroth);
}

Multivector gamma_of_cauchy_boundary_bar(const SphericalDomain& dom,
                                         const std::vector<Multivector>& h, Complex alpha,
                                         const SpherePoint& v, const TransformConfig& cfg,
                                         GammaVariant variant) {
  const KernelConfig kc = with_alpha(cfg.kernel, std::conj(alpha));
  const double sign = (variant == GammaVariant::plain) ? -1.0 : 1.0;
  const Complex zeroth = (variant == GammaVariant::plain) ? alpha : std::conj(alpha);
  return gamma_boundary_impl(dom, h, kc, v, sign, zeroth);
}

namespace {

/// Tangential gradient of a potential at v: either a ring least-squares
/// fit or plain central differences, returning the three ambient partial
/// combinations needed by Gamma.
std::array<Multivector, 3> tangential_partials_ringfit(
    const std::function<Multivector(const SpherePoint&)>& pot, const SpherePoint& v,
    double radius, int m) {
  // tangent frame
  SpherePoint ea = (std::abs(v[0]) < 0.8) ? SpherePoint{{1, 0, 0}} : SpherePoint{{0, 1, 0}};
  const double pr = dot(ea, v);
  for (int i = 0; i < 3; ++i) ea[i] -= pr * v[i];
  double na = std::sqrt(dot(ea, ea));
  for (int i = 0; i < 3; ++i) ea[i] /= na;
  const SpherePoint eb{{v[1] * ea[2] - v[2] * ea[1], v[2] * ea[0] - v[0] * ea[2],
                        v[0] * ea[1] - v[1] * ea[0]}};

  const int rows = m + 1;
  std::vector<std::array<double, 6>> A(static_cast<std::size_t>(rows));
  std::vector<Multivector> S;
  S.reserve(static_cast<std::size_t>(rows));
  A[0] = {1, 0, 0, 0, 0, 0};
  S.push_back(pot(v));
  for (int k = 0; k < m; ++k) {
    const double ang = 2.0 * std::numbers::pi * (k + 0.31) / m;
    const double cu = std::sin(radius) * std::cos(ang);
    const double cw = std::sin(radius) * std::sin(ang);
    SpherePoint p;
    for (int i = 0; i < 3; ++i) {
      p[i] = std::cos(radius) * v[i] + cu * ea[i] + cw * eb[i];
    }
    A[static_cast<std::size_t>(k + 1)] = {1, cu, cw, cu * cu, cu * cw, cw * cw};
    S.push_back(pot(p));
  }
  // normal equations, 6x6
  double N[6][6] = {};
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        N[i][j] += A[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] *
                   A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
  }
  const int dim = S[0].dim();
  const int ncoef = S[0].size();
  std::vector<std::array<Complex, 6>> rhs(static_cast<std::size_t>(ncoef),
                                          std::array<Complex, 6>{});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < ncoef; ++c) {
      for (int i = 0; i < 6; ++i) {
        rhs[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] +=
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] *
            S[static_cast<std::size_t>(r)][static_cast<std::uint32_t>(c)];
      }
    }
  }
  // factor N once (Gaussian elimination with partial pivoting)
  int piv[6];
  for (int i = 0; i < 6; ++i) piv[i] = i;
  for (int c = 0; c < 6; ++c) {
    int best = c;
    for (int r = c + 1; r < 6; ++r) {
      if (std::abs(N[r][c]) > std::abs(N[best][c])) best = r;
    }
    if (best != c) {
      for (int j = 0; j < 6; ++j) std::swap(N[c][j], N[best][j]);
      std::swap(piv[c], piv[best]);
    }
    for (int r = c + 1; r < 6; ++r) {
      const double fac = N[r][c] / N[c][c];
      N[r][c] = fac;  // store multiplier
      for (int j = c + 1; j < 6; ++j) N[r][j] -= fac * N[c][j];
    }
  }
  auto solve6 = [&](std::array<Complex, 6>& b) {
    std::array<Complex, 6> pb;
    for (int i = 0; i < 6; ++i) pb[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(piv[i])];
    for (int c = 0; c < 6; ++c) {
      for (int r = c + 1; r < 6; ++r) pb[static_cast<std::size_t>(r)] -= N[r][c] * pb[static_cast<std::size_t>(c)];
    }
    for (int c = 5; c >= 0; --c) {
      for (int j = c + 1; j < 6; ++j) pb[static_cast<std::size_t>(c)] -= N[c][j] * pb[static_cast<std::size_t>(j)];
      pb[static_cast<std::size_t>(c)] /= N[c][c];
    }
    b = pb;
  };
  Multivector ga(dim), gb(dim);
  for (int c = 0; c < ncoef; ++c) {
    solve6(rhs[static_cast<std::size_t>(c)]);
    ga[static_cast<std::uint32_t>(c)] = rhs[static_cast<std::size_t>(c)][1];
    gb[static_cast<std::uint32_t>(c)] = rhs[static_cast<std::size_t>(c)][2];
  }
  std::array<Multivector, 3> parts{Multivector(dim), Multivector(dim), Multivector(dim)};
  for (int i = 0; i < 3; ++i) parts[static_cast<std::size_t>(i)] = ea[i] * ga + eb[i] * gb;
  return parts;
}

Multivector assemble_gamma(const std::array<Multivector, 3>& parts,
                           const Multivector& value, const SpherePoint& v, Complex alpha,
                           GammaVariant variant) {
  const double sign = (variant == GammaVariant::plain) ? -1.0 : 1.0;
  const Complex a0 = (variant == GammaVariant::plain) ? alpha : std::conj(alpha);
  Multivector acc = a0 * value;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const std::uint32_t mask = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
      Multivector comb = v[i] * parts[static_cast<std::size_t>(j)] -
                         v[j] * parts[static_cast<std::size_t>(i)];
      acc += sign * geometric_product(Multivector::blade(3, mask), comb);
    }
  }
  return acc;
}

}  // namespace

Multivector ring_fit_gamma(const std::function<Multivector(const SpherePoint&)>& potential,
                           const SpherePoint& v, Complex alpha, double radius,
                           int m_samples, GammaVariant variant) {
  if (m_samples < 8) throw std::invalid_argument("ring_fit_gamma: need >= 8 samples");
  const auto parts = tangential_partials_ringfit(potential, v, radius, m_samples);
  return assemble_gamma(parts, potential(v), v, alpha, variant);
}

Multivector fd_gamma(const std::function<Multivector(const SpherePoint&)>& potential,
                     const SpherePoint& v, Complex alpha, double step,
                     GammaVariant variant) {
  std::array<Multivector, 3> parts{Multivector(3), Multivector(3), Multivector(3)};
  for (int i = 0; i < 3; ++i) {
    SpherePoint vp = v, vm = v;
    vp[i] += step;
    vm[i] -= step;
    parts[static_cast<std::size_t>(i)] =
        (1.0 / (2.0 * step)) * (potential(vp) - potential(vm));
  }
  return assemble_gamma(parts, potential(v), v, alpha, variant);
}

double borel_pompeiu_residual(const SphericalDomain& dom, const AnalyticField& f,
                              Complex alpha, const std::vector<SpherePoint>& samples,
                              const TransformConfig& cfg) {
  AnalyticField gf;
  gf.value = [&f, alpha](const SpherePoint& p) { return gamma_alpha(f, p, alpha); };
  SampledField gs;
  gs.domain = &dom;
  gs.values.reserve(dom.interior_nodes.size());
  for (const auto& p : dom.interior_nodes) gs.values.push_back(gf.value(p));
  const std::vector<Multivector> tr = trace(f, dom);

  double worst = 0.0;
  for (const auto& v : samples) {
    Multivector rhs = teodorescu(dom, gs, alpha, v, cfg);
    if (!dom.boundary_nodes.empty()) rhs += cauchy_boundary(dom, tr, alpha, v, cfg);
    const Multivector fv = f.value(v);
    worst = std::max(worst, (fv - rhs).frob_norm() / (1.0 + fv.frob_norm()));
  }
  return worst;
}

double cif_residual(const SphericalDomain& dom, const std::vector<Multivector>& h,
                    Complex alpha, const std::vector<SpherePoint>& samples,
                    const TransformConfig& cfg, double trace_inset) {
  if (dom.boundary_nodes.empty()) {
    throw std::invalid_argument("cif_residual: domain has no boundary");
  }
  // g = F h, re-traced slightly inside the boundary circle
  std::vector<Multivector> trg;
  trg.reserve(dom.boundary_nodes.size());
  const double theta_in = dom.theta0 - trace_inset;
  for (const auto& b : dom.boundary_nodes) {
    const double phi = std::atan2(b.point[1], b.point[0]);
    const SpherePoint inset{{std::sin(theta_in) * std::cos(phi),
                             std::sin(theta_in) * std::sin(phi), std::cos(theta_in)}};
    trg.push_back(cauchy_boundary(dom, h, alpha, inset, cfg));
  }
  double worst = 0.0;
  for (const auto& v : samples) {
    const Multivector g = cauchy_boundary(dom, h, alpha, v, cfg);
    const Multivector g2 = cauchy_boundary(dom, trg, alpha, v, cfg);
    worst = std::max(worst, (g - g2).frob_norm() / (1.0 + g.frob_norm()));
  }
  return worst;
}

}  // namespace sphclif
