#pragma once

#include <functional>

#include "fracpde/types.hpp"

namespace fracpde {

/// Nodes/weights of an n-point Gauss-Legendre rule on [-1, 1].
/// Nodes are exactly symmetric about 0 (computed for one half and mirrored).
struct GaussRule {
  RVector nodes;
  RVector weights;
};

const GaussRule& gauss_legendre(int n);

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b] to absolute
/// tolerance abstol. Throws ConvergenceError when the interval budget is
/// exhausted before the tolerance is met.
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abstol, int max_intervals = 2000);

}  // namespace fracpde
