#include "sphclif/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphclif {

namespace {
constexpr double kPi = std::numbers::pi;
}

Multivector SpherePoint::embed() const {
  Multivector v(3);
  for (int i = 0; i < 3; ++i) v[std::uint32_t{1} << i] = x[static_cast<std::size_t>(i)];
  return v;
}

SpherePoint make_unit(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r < 1e-300) throw std::invalid_argument("make_unit: zero vector");
  return SpherePoint{{x / r, y / r, z / r}};
}

double dot(const SpherePoint& a, const SpherePoint& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

bool SphericalDomain::contains(const SpherePoint& p) const {
  if (is_global) return true;
  return std::acos(std::clamp(p[2], -1.0, 1.0)) < theta0;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton on P_n
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

SphericalDomain build_product_rule(double theta0, int n_theta, int n_phi, bool global) {
  if (!(theta0 > 0.0) || theta0 > kPi + 1e-12) {
    throw std::invalid_argument("build_cap: theta0 outside (0, pi]");
  }
  if (n_theta < 2 || n_phi < 4) {
    throw std::invalid_argument("domain builder: n_theta >= 2 and n_phi >= 4 required");
  }
  SphericalDomain dom;
  dom.is_global = global;
  dom.theta0 = theta0;
  dom.n_theta = n_theta;
  dom.n_phi = n_phi;
  dom.mesh_param = theta0 / n_theta;

  std::vector<double> gx, gw;
  gauss_legendre(n_theta, gx, gw);
  const double wphi = 2.0 * kPi / n_phi;
  dom.interior_nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  dom.interior_weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int it = 0; it < n_theta; ++it) {
    const double theta = 0.5 * theta0 * (gx[static_cast<std::size_t>(it)] + 1.0);
    const double wt = 0.5 * theta0 * gw[static_cast<std::size_t>(it)] * std::sin(theta);
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = (ip + 0.5) * wphi;
      dom.interior_nodes.push_back(SpherePoint{{std::sin(theta) * std::cos(phi),
                                                std::sin(theta) * std::sin(phi),
                                                std::cos(theta)}});
      dom.interior_weights.push_back(wt * wphi);
    }
  }
  if (!global) {
    const double st = std::sin(theta0);
    const double ct = std::cos(theta0);
    dom.boundary_nodes.reserve(static_cast<std::size_t>(n_phi));
    for (int ip = 0; ip < n_phi; ++ip) {
      const double phi = (ip + 0.5) * wphi;
      BoundaryNode b;
      b.point = SpherePoint{{st * std::cos(phi), st * std::sin(phi), ct}};
      b.weight = st * wphi;
      b.conormal = SpherePoint{{ct * std::cos(phi), ct * std::sin(phi), -st}};
      dom.boundary_nodes.push_back(b);
    }
  }
  return dom;
}

}  // namespace

SphericalDomain build_cap(double theta0, int n_theta, int n_phi) {
  if (theta0 >= kPi - 1e-12) {
    throw std::invalid_argument("build_cap: theta0 must be < pi (use build_global)");
  }
  return build_product_rule(theta0, n_theta, n_phi, false);
}

SphericalDomain build_global(int n_theta, int n_phi) {
  return build_product_rule(kPi, n_theta, n_phi, true);
}

Multivector integrate(const SphericalDomain& dom, const SampledField& f) {
  if (f.domain != &dom || f.values.size() != dom.interior_nodes.size()) {
    throw std::invalid_argument("integrate: field not sampled on this domain");
  }
  Multivector acc(dom.n);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    acc += dom.interior_weights[i] * f.values[i];
  }
  return acc;
}

SampledField sample(const SphericalDomain& dom, const AnalyticField& f) {
  SampledField out;
  out.domain = &dom;
  out.values.reserve(dom.interior_nodes.size());
  for (const auto& p : dom.interior_nodes) out.values.push_back(f.value(p));
  if (!dom.boundary_nodes.empty()) {
    std::vector<Multivector> bv;
    bv.reserve(dom.boundary_nodes.size());
    for (const auto& b : dom.boundary_nodes) bv.push_back(f.value(b.point));
    out.boundary_values = std::move(bv);
  }
  return out;
}

std::vector<Multivector> trace(const AnalyticField& f, const SphericalDomain& dom) {
  std::vector<Multivector> out;
  out.reserve(dom.boundary_nodes.size());
  for (const auto& b : dom.boundary_nodes) out.push_back(f.value(b.point));
  return out;
}

namespace {

/// Scalar bump profile in the variable t = cos(d): value and two
/// t-derivatives. Works through u = d^2 = arccos(t)^2, which is analytic
/// at t = 1 (u ~ 2(1-t) there), so the field is smooth at the center.
struct BumpScalar {
  double radius2;
  double value(double t) const {
    const double u = u_of_t(t);
    const double xr = u / radius2;
    if (xr >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - xr));
  }
  // g(u) = exp(1 - 1/(1 - u/r^2)); dg/du = g * (-1/r^2) / (1 - u/r^2)^2
  double dvalue_du(double t) const {
    const double u = u_of_t(t);
    const double xr = u / radius2;
    if (xr >= 1.0) return 0.0;
    const double one = 1.0 - xr;
    return value(t) * (-1.0 / radius2) / (one * one);
  }
  double d2value_du2(double t) const {
    const double u = u_of_t(t);
    const double xr = u / radius2;
    if (xr >= 1.0) return 0.0;
    const double one = 1.0 - xr;
    const double g = value(t);
    const double a = -1.0 / (radius2 * one * one);
    // d/du [g*a] = g*a^2 + g * da/du, da/du = -2/(r^4 one^3)
    return g * a * a + g * (-2.0 / (radius2 * radius2 * one * one * one));
  }

  static double u_of_t(double t) {
    const double d = std::acos(std::clamp(t, -1.0, 1.0));
    return d * d;
  }
  // du/dt = -2 d / sin d (safe limit -2 at d = 0)
  static double du_dt(double t) {
    const double d = std::acos(std::clamp(t, -1.0, 1.0));
    if (d < 1e-6) return -2.0 * (1.0 + d * d / 6.0);
    return -2.0 * d / std::sin(d);
  }
  // d2u/dt2 = 2 (sin d - d cos d) / sin^3 d (limit 2/3 at d = 0)
  static double d2u_dt2(double t) {
    const double d = std::acos(std::clamp(t, -1.0, 1.0));
    if (d < 1e-4) return 2.0 / 3.0 + 2.0 * d * d / 15.0;
    const double s = std::sin(d);
    return 2.0 * (s - d * std::cos(d)) / (s * s * s);
  }
};

}  // namespace

AnalyticField bump_field(const SphericalDomain& dom, const SpherePoint& center,
                         double radius,
                         const std::vector<std::pair<std::uint32_t, Complex>>& profile) {
  if (!(radius > 0.0)) throw std::invalid_argument("bump_field: radius <= 0");
  if (!dom.is_global) {
    const double dc = std::acos(std::clamp(center[2], -1.0, 1.0));
    if (dc + radius >= dom.theta0) {
      throw std::invalid_argument("bump_field: geodesic ball not inside the domain");
    }
  }
  Multivector shape(dom.n);
  for (const auto& [mask, coef] : profile) shape[mask] = coef;
  const SpherePoint c = center;
  const BumpScalar bs{radius * radius};

  AnalyticField f;
  f.value = [c, bs, shape](const SpherePoint& p) {
    return bs.value(dot(p, c)) * shape;
  };
  f.partial = [c, bs, shape](const SpherePoint& p, int i) {
    const double t = dot(p, c);
    const double gp = bs.dvalue_du(t) * BumpScalar::du_dt(t);
    return (gp * c[i]) * shape;
  };
  f.second_partial = [c, bs, shape](const SpherePoint& p, int i, int j) {
    const double t = dot(p, c);
    const double du = BumpScalar::du_dt(t);
    const double gpp = bs.d2value_du2(t) * du * du + bs.dvalue_du(t) * BumpScalar::d2u_dt2(t);
    return (gpp * c[i] * c[j]) * shape;
  };
  return f;
}

}  // namespace sphclif
