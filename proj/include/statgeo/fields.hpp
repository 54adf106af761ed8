// statgeo - chart-based scalar fields and the differentiation engine
//
// Fields are time-independent functions on a spatial chart. Each carries an
// analytic value/gradient/Hessian; derivatives of order 3 and 4 are obtained
// by Richardson-extrapolated central differences applied to the analytic
// Hessian. Stencils that would leave the chart domain raise DomainError
// rather than extrapolate.

#ifndef STATGEO_FIELDS_HPP_
#define STATGEO_FIELDS_HPP_

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "statgeo/errors.hpp"
#include "statgeo/jet.hpp"
#include "statgeo/linalg.hpp"

namespace statgeo {

// Chart points are plain coordinate vectors x^1..x^n.
using ChartPoint = Vec;

// Margin-aware chart membership: domain(p, m) is true when p lies inside the
// chart with coordinate distance >= m from its boundary.
using Domain = std::function<bool(const Vec&, double)>;

inline Domain everywhere() {
  return [](const Vec&, double) { return true; };
}

struct FDPolicy {
  double base_step = 1e-3;
  int richardson_levels = 2;  // >= 1
  int max_order = 4;          // <= 4

  double step_for(double coord) const { return std::max(base_step, base_step * std::abs(coord)); }
};

struct ScalarField {
  std::string name;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> grad;
  std::function<Mat(const Vec&)> hess;
  Domain domain = everywhere();
};

// Field from a generic closed form f(x[0..n-1]) evaluated on jets; gradient
// and Hessian are exact.
template <class F>
ScalarField make_field(std::string name, int n, F f, Domain domain = everywhere()) {
  ScalarField s;
  s.name = std::move(name);
  s.domain = std::move(domain);
  s.value = [f, n](const Vec& p) {
    std::array<double, kMaxDim> x{};
    for (int i = 0; i < n; ++i) x[i] = p[i];
    return f(x);
  };
  auto jet_eval = [f, n](const Vec& p) {
    std::array<Jet, kMaxDim> x;
    for (int i = 0; i < n; ++i) x[i] = Jet::variable(n, i, p[i]);
    return f(x);
  };
  s.grad = [jet_eval](const Vec& p) { return jet_eval(p).d; };
  s.hess = [jet_eval](const Vec& p) { return jet_eval(p).h; };
  return s;
}

ScalarField make_constant_field(std::string name, int n, double c, Domain domain = everywhere());

// Field defined by a value function only; gradient and Hessian come from
// Richardson central differences. Used for derived scalars (energy density,
// |grad log u|^2, ...) whose closed-form value is built from analytic
// first-order data.
ScalarField make_numeric_field(std::string name, std::function<double(const Vec&)> value,
                               FDPolicy policy = {}, Domain domain = everywhere());

// Richardson-extrapolated central first derivative of fn along `axis`.
double richardson_d1(const std::function<double(const Vec&)>& fn, const Vec& p, int axis,
                     double h, int levels);

// Second derivative along (a, b); a == b uses the 3-point second difference,
// otherwise the 4-point cross stencil. Both are Richardson extrapolated.
double richardson_d2(const std::function<double(const Vec&)>& fn, const Vec& p, int a, int b,
                     double h, int levels);

// Mixed partial d^k f / dx^{axes[0]} .. dx^{axes[k-1]}, k = |axes| in 1..4.
// Orders <= 2 delegate to the analytic gradient/Hessian; orders 3-4 apply
// finite differences to the analytic Hessian.
double partial(const ScalarField& field, const Vec& p, std::span<const int> axes,
               const FDPolicy& policy = {});

// Evaluate a symmetric matrix of fields (row-major n*n) at p.
Mat eval_matrix(std::span<const ScalarField> entries, int n, const Vec& p);

// nabla_i theta_j = d_i theta_j - Gamma^k_{ij} theta_k with the Levi-Civita
// connection of the horizontal metric g.
Mat covariant_derivative_1form(std::span<const ScalarField> theta,
                               std::span<const ScalarField> g_entries, int n, const Vec& p);

// Christoffels Gamma^k_{ij} from the metric value and its first partials
// dg(k,i,j) = d_k g_ij.
Ten3 christoffels_from_partials(const Mat& ginv, const Ten3& dg);

}  // namespace statgeo

#endif
