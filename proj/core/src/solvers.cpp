#include "sphclif/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace sphclif {

AnalyticField cif_monogenic_field(const SphericalDomain& dom,
                                  const std::vector<Multivector>& h, Complex alpha,
                                  const TransformConfig& cfg) {
  if (dom.boundary_nodes.empty()) {
    throw std::invalid_argument("cif_monogenic_field: domain needs a boundary");
  }
  if (h.size() != dom.boundary_nodes.size()) {
    throw std::invalid_argument("cif_monogenic_field: data size mismatch");
  }
  // Capture by value: the field must outlive local scopes.
  const SphericalDomain* dp = &dom;
  const std::vector<Multivector> hb = h;
  const TransformConfig tc = cfg;
  AnalyticField f;
  f.value = [dp, hb, alpha, tc](const SpherePoint& v) {
    return cauchy_boundary(*dp, hb, alpha, v, tc);
  };
  f.partial = [dp, hb, alpha, tc](const SpherePoint& v, int j) {
    KernelConfig kc = tc.kernel;
    kc.alpha = alpha;
    Multivector acc(dp->n);
    for (std::size_t b = 0; b < dp->boundary_nodes.size(); ++b) {
      const BoundaryNode& bn = dp->boundary_nodes[b];
      const KernelDz dz = cauchy_kernel_dz(bn.point.span(), v.span(), kc);
      const Multivector wn = geometric_product(bn.point.embed(), bn.conormal.embed());
      acc += bn.weight * geometric_product(
                             dz.dpsi_dvj[static_cast<std::size_t>(j)],
                             geometric_product(wn, hb[b]));
    }
    return acc;
  };
  return f;
}

BvpSolution solve_bvp(const SphericalDomain& dom, const AnalyticField& g,
                      const std::vector<Multivector>& h, Complex alpha,
                      const TransformConfig& cfg) {
  SampledField gs = sample(dom, g);
  BvpSolution out;
  out.f.domain = &dom;
  out.f.values.reserve(dom.interior_nodes.size());
  for (const auto& p : dom.interior_nodes) {
    Multivector val = teodorescu(dom, gs, alpha, p, cfg);
    if (!dom.boundary_nodes.empty()) val += cauchy_boundary(dom, h, alpha, p, cfg);
    out.f.values.push_back(std::move(val));
  }

  auto potential = [&](const SpherePoint& v) {
    Multivector val = teodorescu(dom, gs, alpha, v, cfg);
    if (!dom.boundary_nodes.empty()) val += cauchy_boundary(dom, h, alpha, v, cfg);
    return val;
  };

  // Gamma residual at a few interior points through the ring fit.
  const double ring = std::max(3.0 * dom.mesh_param, 0.08);
  const int n_check = 4;
  for (int k = 0; k < n_check; ++k) {
    const double th = 0.25 * dom.theta0 + 0.4 * dom.theta0 * k / n_check;
    const double ph = 2.8 * k + 0.4;
    const SpherePoint v{{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                         std::cos(th)}};
    const Multivector lhs = ring_fit_gamma(potential, v, alpha, ring, 16,
                                           GammaVariant::plain);
    const Multivector gv = g.value(v);
    out.gamma_residual = std::max(out.gamma_residual,
                                  (lhs - gv).frob_norm() / (1.0 + gv.frob_norm()));
  }
  // Trace residual: f evaluated just inside the boundary against h.
  if (!dom.boundary_nodes.empty()) {
    const double theta_in = dom.theta0 - 1.3 * cfg.exclusion_eps;
    for (std::size_t b = 0; b < dom.boundary_nodes.size(); b += 7) {
      const auto& bn = dom.boundary_nodes[b];
      const double phi = std::atan2(bn.point[1], bn.point[0]);
      const SpherePoint p{{std::sin(theta_in) * std::cos(phi),
                           std::sin(theta_in) * std::sin(phi), std::cos(theta_in)}};
      out.trace_residual = std::max(out.trace_residual,
                                    (potential(p) - h[b]).frob_norm() /
                                        (1.0 + h[b].frob_norm()));
    }
  }
  return out;
}

namespace {

/// Compressed grades-{0,2} kernel entry for n = 3 (scalar + three
/// bivector components), used by the dense pi sweep cache.
struct PiKernelEntry {
  Complex s, b12, b13, b23;

  static PiKernelEntry from(const Multivector& m) {
    return PiKernelEntry{m[0u], m[3u], m[5u], m[6u]};
  }
  Multivector to_mv() const {
    Multivector m(3);
    m[0u] = s;
    m[3u] = b12;
    m[5u] = b13;
    m[6u] = b23;
    return m;
  }
};

class PiSweep {
 public:
  PiSweep(const SphericalDomain& dom, Complex alpha, const TransformConfig& cfg,
          std::size_t budget)
      : dom_(dom), alpha_(alpha), cfg_(cfg) {
    KernelConfig kc = cfg.kernel;
    kc.alpha = alpha;
    free_coef_ = Complex(-1.0);
    if (cfg.ball_correction) {
      free_coef_ += 2.0 * alpha.real() *
                    excluded_ball_mass(alpha, cfg.exclusion_eps, kc);
    }
    const std::size_t n = dom.interior_nodes.size();
    const std::size_t need = n * n * sizeof(PiKernelEntry);
    cached_ = need <= budget;
    if (cached_) {
      cache_.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t w = 0; w < n; ++w) {
          cache_.push_back(entry(i, w));
        }
      }
    }
  }

  /// pi h evaluated on every node (free term included).
  std::vector<Multivector> apply(const std::vector<Multivector>& h) const {
    const std::size_t n = dom_.interior_nodes.size();
    std::vector<Multivector> out(n, Multivector(dom_.n));
    for (std::size_t i = 0; i < n; ++i) {
      Multivector acc(dom_.n);
      for (std::size_t w = 0; w < n; ++w) {
        const PiKernelEntry e = cached_ ? cache_[i * n + w] : entry(i, w);
        if (e.s == Complex(0.0) && e.b12 == Complex(0.0) && e.b13 == Complex(0.0) &&
            e.b23 == Complex(0.0)) {
          continue;
        }
        acc += geometric_product(e.to_mv(), h[w]);
      }
      acc += free_coef_ * h[i];  // free term of Gamma_bar T (+ disk mass)
      out[i] = std::move(acc);
    }
    return out;
  }

 private:
  PiKernelEntry entry(std::size_t i, std::size_t w) const {
    const SpherePoint& v = dom_.interior_nodes[i];
    const SpherePoint& p = dom_.interior_nodes[w];
    const double t = dot(p, v);
    const double cut = std::cos(cfg_.exclusion_eps);
    if (t > cut || t < -cut) return PiKernelEntry{};
    KernelConfig kc = cfg_.kernel;
    kc.alpha = alpha_;
    Multivector gk =
        gamma_applied_kernel(p.span(), v.span(), kc, GammaVariant::conjugated);
    gk *= Complex(dom_.interior_weights[w]);
    return PiKernelEntry::from(gk);
  }

  const SphericalDomain& dom_;
  Complex alpha_;
  TransformConfig cfg_;
  Complex free_coef_{-1.0};
  bool cached_ = false;
  std::vector<PiKernelEntry> cache_;
};

double discrete_norm(const SphericalDomain& dom, const std::vector<Multivector>& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double f = h[i].frob_norm();
    s += dom.interior_weights[i] * f * f;
  }
  return std::sqrt(s);
}

}  // namespace

BeltramiSolution solve_beltrami(const SphericalDomain& dom, const BeltramiConfig& cfg) {
  if (cfg.max_iter < 1) throw std::invalid_argument("solve_beltrami: max_iter < 1");
  const std::size_t n = dom.interior_nodes.size();

  // dilatation on the nodes; contraction premise |q| < 1
  std::vector<Multivector> qv;
  qv.reserve(n);
  double qsup = 0.0;
  for (const auto& p : dom.interior_nodes) {
    qv.push_back(cfg.q.value(p));
    qsup = std::max(qsup, qv.back().frob_norm());
  }
  if (qsup >= 1.0) {
    throw std::invalid_argument("solve_beltrami: sup |q| >= 1 violates the contraction premise");
  }

  // phi and phi~ = Gamma_bar_alpha phi on the nodes
  std::vector<Multivector> phiv, phitil;
  phiv.reserve(n);
  phitil.reserve(n);
  for (const auto& p : dom.interior_nodes) {
    phiv.push_back(cfg.phi.value(p));
    phitil.push_back(gamma_alpha_bar(cfg.phi, p, cfg.alpha));
  }

  PiSweep sweep(dom, cfg.alpha, cfg.transform, cfg.cache_budget);

  BeltramiSolution sol;
  sol.h.domain = &dom;
  sol.h.values.assign(n, Multivector(dom.n));
  std::vector<Multivector> h(n, Multivector(dom.n));

  SolveTrace& tr = sol.trace;
  double first_inc = 0.0;
  int grow = 0;
  for (int m = 0; m < cfg.max_iter; ++m) {
    const std::vector<Multivector> pih = sweep.apply(h);
    std::vector<Multivector> hn(n, Multivector(dom.n));
    for (std::size_t i = 0; i < n; ++i) {
      hn[i] = geometric_product(qv[i], pih[i] + phitil[i]);
    }
    std::vector<Multivector> diff(n, Multivector(dom.n));
    for (std::size_t i = 0; i < n; ++i) diff[i] = hn[i] - h[i];
    const double inc = discrete_norm(dom, diff);
    tr.increments.push_back(inc);
    tr.iterations = m + 1;
    h = std::move(hn);
    if (m == 0) {
      first_inc = inc;
      if (inc == 0.0) {  // q == 0 or phi~ == 0: fixed point reached at once
        tr.converged = true;
        break;
      }
      continue;
    }
    const double prev = tr.increments[static_cast<std::size_t>(m - 1)];
    if (prev > 0.0 && inc > prev) {
      if (++grow >= 3) {
        throw std::runtime_error(
            "solve_beltrami: divergence detected, increment ratio " +
            std::to_string(inc / prev));
      }
    } else {
      grow = 0;
    }
    if (inc <= cfg.fp_tol * first_inc) {
      tr.converged = true;
      break;
    }
  }

  // geometric mean of increment ratios from iteration 3 on
  if (tr.increments.size() >= 3) {
    double logsum = 0.0;
    int cnt = 0;
    for (std::size_t m = 2; m < tr.increments.size(); ++m) {
      const double a = tr.increments[m - 1];
      const double b = tr.increments[m];
      if (a > 0.0 && b > 0.0) {
        logsum += std::log(b / a);
        ++cnt;
      }
    }
    tr.mean_ratio = cnt > 0 ? std::exp(logsum / cnt) : 0.0;
  }

  // f = T h + phi on the nodes
  sol.h.values = h;
  sol.f.domain = &dom;
  sol.f.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.f.values.push_back(
        teodorescu(dom, sol.h, cfg.alpha, dom.interior_nodes[i], cfg.transform) +
        phiv[i]);
  }

  // be2 defect on the nodes: h - q (pi h + phi~)
  {
    const std::vector<Multivector> pih = sweep.apply(h);
    std::vector<Multivector> defect(n, Multivector(dom.n));
    for (std::size_t i = 0; i < n; ++i) {
      defect[i] = h[i] - geometric_product(qv[i], pih[i] + phitil[i]);
    }
    const double hn = discrete_norm(dom, h);
    tr.be2_residual = discrete_norm(dom, defect) / (1.0 + hn);
  }

  // be1 residual |Gamma_alpha f - q Gamma_bar_alpha f| via the ring fit
  // of the solution potential f(v) = T h (v) + phi(v).
  {
    auto potential = [&](const SpherePoint& v) {
      return teodorescu(dom, sol.h, cfg.alpha, v, cfg.transform) + cfg.phi.value(v);
    };
    const double ring = std::max(3.0 * dom.mesh_param, 0.08);
    const int n_check = 4;
    for (int k = 0; k < n_check; ++k) {
      const double th = 0.2 * dom.theta0 + 0.5 * dom.theta0 * k / n_check;
      const double ph = 2.1 * k + 0.7;
      const SpherePoint v{{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                           std::cos(th)}};
      const Multivector ga =
          ring_fit_gamma(potential, v, cfg.alpha, ring, 16, GammaVariant::plain);
      const Multivector gb =
          ring_fit_gamma(potential, v, cfg.alpha, ring, 16, GammaVariant::conjugated);
      const Multivector res = ga - geometric_product(cfg.q.value(v), gb);
      tr.be1_residual = std::max(tr.be1_residual,
                                 res.frob_norm() / (1.0 + gb.frob_norm()));
    }
  }
  return sol;
}

}  // namespace sphclif
