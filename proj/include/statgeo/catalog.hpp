// statgeo - exact stationary spacetimes in canonical (u, theta, g) form
//
// Every entry ships analytic first and second partials of its component
// functions, a chart-domain predicate with safety margins, the Einstein
// constant when known, and anchor points for tests. Units G = c = 1.

#ifndef STATGEO_CATALOG_HPP_
#define STATGEO_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "statgeo/spacetime.hpp"

namespace statgeo {

struct CatalogEntry {
  std::string name;
  StationarySpacetime S;
  std::optional<double> lambda;
  bool is_static = false;
  bool vacuum = false;
  bool einstein = false;
  bool flat = false;

  std::vector<Vec> anchors;
  Vec box_lo, box_hi;  // sampling box well inside the chart
  Vec twist_anchor;    // psi = 0 here (n = 3 entries)
  std::map<std::string, double> params;
};

// u = 1, theta = 0, g = delta_ij on R^3.
CatalogEntry make_minkowski_static();

// Flat spacetime in a chart rotating at angular velocity Omega > 0,
// cylindrical coordinates (rho, phi, z), valid for rho < 1/Omega:
//   u^2 = 1 - Omega^2 rho^2, theta_phi = Omega rho^2 / (1 - Omega^2 rho^2),
//   g = drho^2 + rho^2/(1 - Omega^2 rho^2) dphi^2 + dz^2.
CatalogEntry make_minkowski_rotating(double omega);

// Exterior chart r > 2M, coordinates (r, theta, phi).
CatalogEntry make_schwarzschild(double M);

// Boyer-Lindquist exterior outside the ergosphere, 0 <= a < M:
//   u^2 = (Sigma - 2Mr)/Sigma, theta_phi = 2Mar sin^2(th)/(Sigma - 2Mr),
//   g = Sigma/Delta dr^2 + Sigma dth^2 + Delta Sigma sin^2(th)/(Sigma - 2Mr) dphi^2.
CatalogEntry make_kerr(double M, double a);

// Anti-de Sitter, lambda < 0, in coordinates regular at the origin:
//   u^2 = 1 + kappa r^2, g_ij = delta_ij - kappa x_i x_j/(1 + kappa r^2),
//   kappa = -lambda/3. Chart covers all of R^3.
CatalogEntry make_ads(double lambda);

// Product -dt^2 + g_N with g_N a constant flat metric (u == 1).
CatalogEntry make_product_flat();

CatalogEntry entry_by_name(const std::string& name, const std::map<std::string, double>& params);
std::vector<std::string> catalog_names();

// gbar -> k2 * gbar: u -> sqrt(k2) u, g -> k2 g, lambda -> lambda / k2.
CatalogEntry rescale_entry(const CatalogEntry& e, double k2);

// Deterministic interior sample points (uniform in the box, margin-checked).
std::vector<Vec> sample_points(const CatalogEntry& e, int count, std::uint64_t seed);

}  // namespace statgeo

#endif
