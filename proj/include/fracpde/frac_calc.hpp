#pragma once

#include "fracpde/time_grid.hpp"
#include "fracpde/types.hpp"

namespace fracpde {

/// Riemann-Liouville integral of order alpha > 0,
///   g(t) = (1/Gamma(alpha)) int_0^t (t-s)^(alpha-1) f~(s) ds,
/// where f~ is the piecewise-linear interpolant of f. The moment weights of
/// (t-s)^(alpha-1) against linear elements are evaluated in closed form, so
/// the integrable singularity costs no accuracy; second order for smooth f.
TimeSeries rl_integral(double alpha, const TimeSeries& f);

/// Nodal derivative of the given order (1 or 2) by second-order finite
/// differences: 3-point stencils inside, one-sided stencils of matching
/// order at both ends. Handles non-uniform grids.
TimeSeries derivative_series(const TimeSeries& u, int order);

/// sum_{k < alpha} t^k u_k / k! sampled on the grid.
TimeSeries taylor_part(const InitialData& init, const TimeGrid& grid);

struct CaputoOptions {
  /// Absolute tolerance for |u(0) - u_0|.
  double value_tol = 1e-8;
  /// The derivative trace check for alpha > 1 uses
  /// value_tol + deriv_slack * t_1^(alpha-1) * (1 + sup|u|), since a finite
  /// difference through t^alpha-type data cannot beat that truncation floor.
  double deriv_slack = 10.0;
  bool check_consistency = true;
};

/// Caputo derivative of order alpha in (0,2): the order-ceil(alpha) nodal
/// derivative of u minus its initial Taylor polynomial, fractionally
/// integrated back by order ceil(alpha) - alpha.
TimeSeries caputo_derivative(double alpha, const TimeSeries& u, const InitialData& init,
                             const CaputoOptions& opt = {});

/// L1-type (alpha <= 1) / L2-type (alpha > 1) evaluation: piecewise-constant
/// derivative elements under the exact kernel moments. Lower order than
/// caputo_derivative; kept as an independent route for cross-checks.
TimeSeries caputo_derivative_l1(double alpha, const TimeSeries& u, const InitialData& init);

}  // namespace fracpde
