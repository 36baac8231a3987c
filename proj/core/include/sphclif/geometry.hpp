#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sphclif/multivector.hpp"

namespace sphclif {

/// Point on S^2 in R^3 (desk-scale geometry is n = 3 only; the algebra
/// and kernel modules stay dimension-generic).
struct SpherePoint {
  std::array<double, 3> x{0.0, 0.0, 1.0};

  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
  std::span<const double> span() const { return {x.data(), 3}; }

  /// Grade-1 embedding into Cl_3.
  Multivector embed() const;
};

SpherePoint make_unit(double x, double y, double z);
double dot(const SpherePoint& a, const SpherePoint& b);
double geodesic_distance(const SpherePoint& a, const SpherePoint& b);

struct BoundaryNode {
  SpherePoint point;
  double weight = 0.0;     ///< arc measure
  SpherePoint conormal;    ///< outward unit co-normal, tangent to the sphere
};

/// Quadrature model of a domain Omega in S^2: interior rule (surface
/// measure), boundary rule with outward co-normals, and membership.
struct SphericalDomain {
  int n = 3;
  std::vector<SpherePoint> interior_nodes;
  std::vector<double> interior_weights;
  std::vector<BoundaryNode> boundary_nodes;
  bool is_global = false;
  double theta0 = 0.0;      ///< cap colatitude; pi for the global sphere
  double mesh_param = 0.0;  ///< characteristic spacing h
  int n_theta = 0, n_phi = 0;

  bool contains(const SpherePoint& p) const;
  std::size_t num_interior() const { return interior_nodes.size(); }
};

/// Spherical cap {theta < theta0}: Gauss-Legendre in theta tensor a
/// uniform phi rule (weights include sin(theta)); boundary circle with
/// uniform nodes, arc weights sin(theta0) * 2 pi / N_phi, and the
/// d/dtheta unit vector as outward co-normal.
SphericalDomain build_cap(double theta0, int n_theta, int n_phi);

/// Full sphere; empty boundary.
SphericalDomain build_global(int n_theta, int n_phi);

/// Multivector-valued function sampled on a domain's nodes.
struct SampledField {
  const SphericalDomain* domain = nullptr;
  std::vector<Multivector> values;
  std::optional<std::vector<Multivector>> boundary_values;
};

/// Multivector-valued function with exact ambient partial derivatives.
struct AnalyticField {
  std::function<Multivector(const SpherePoint&)> value;
  std::function<Multivector(const SpherePoint&, int)> partial;
  std::function<Multivector(const SpherePoint&, int, int)> second_partial;  // optional

  bool has_second() const { return static_cast<bool>(second_partial); }
};

/// Weighted sum over the interior rule.
Multivector integrate(const SphericalDomain& dom, const SampledField& f);

/// Evaluates an analytic field on the interior (and boundary) nodes.
SampledField sample(const SphericalDomain& dom, const AnalyticField& f);

/// Boundary restriction: values at the boundary nodes (empty for the
/// global sphere).
std::vector<Multivector> trace(const AnalyticField& f, const SphericalDomain& dom);

/// Smooth bump exp(1 - 1/(1 - (d/radius)^2)) of geodesic distance d from
/// `center`, extended by zero, carried on the blades selected by
/// `profile` (coefficient per blade mask). Exact first and second
/// partials. Throws if the geodesic ball is not inside the domain.
AnalyticField bump_field(const SphericalDomain& dom, const SpherePoint& center,
                         double radius,
                         const std::vector<std::pair<std::uint32_t, Complex>>& profile = {
                             {0u, Complex(1.0)}});

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace sphclif
