#pragma once

#include <functional>
#include <iosfwd>

#include "fracpde/types.hpp"

namespace fracpde {

/// Parameters of the path Gamma(phi, r): rays at angles +-phi joined by the
/// arc of radius r, oriented from inf e^{-i phi} to inf e^{+i phi}.
struct ContourSpec {
  double phi = 2.0943951023931953;  // 2 pi / 3
  double radius = 0.5;
  int nodes_per_ray = 48;
  int arc_nodes = 16;
  double truncation = 1e9;  // hard cap Lambda on the ray parameter

  void validate() const;
};

/// Quadrature nodes lambda_j and weights w_j for (1/2 pi i) int_Gamma,
/// weights carrying d lambda, orientation and the 1/(2 pi i) factor.
/// The node set is exactly closed under conjugation with conjugated weights,
/// so integrands with F(conj z) = conj F(z) sum to real values up to roundoff.
struct ContourNodes {
  CVector points;
  CVector weights;

  std::size_t size() const { return points.size(); }

  Complex sum(const std::function<Complex(Complex)>& f) const;

  /// CSV dump `re,im,w_re,w_im`.
  void write_csv(std::ostream& out) const;
};

/// A resolvent-type pole near the integration path, at modulus * e^{+-i angle}.
/// Builders shrink quadrature panels where the path passes close to one.
struct PoleHint {
  double modulus;
  double angle;
};

/// Nodes on Gamma(phi, radius) with the rays truncated at tau_max,
/// geometrically graded Gauss panels on the rays (refined near pole hints)
/// and a Gauss rule on the arc.
ContourNodes build_contour_path(double phi, double radius, double tau_max,
                                int nodes_per_ray, int arc_nodes,
                                const std::vector<PoleHint>& hints = {});

/// Discretization of Gamma(phi, r / t_scale): the time-scaled contour. Rays
/// are truncated where exp(Re lambda * t_scale) < 1e-16 (and at
/// truncation / t_scale, whichever is shorter).
ContourNodes build_contour(const ContourSpec& spec, double t_scale,
                           const std::vector<PoleHint>& hints = {});

/// Closing arc of radius Lambda from angle phi counterclockwise to 2 pi - phi,
/// with weights on the same 1/(2 pi i) convention; appending it to a contour
/// truncated at Lambda closes the loop (validation mode).
ContourNodes closing_arc(double Lambda, double phi, int nodes);

/// h(t, xi) = (1/2 pi i) int_Gamma(phi,r) e^{lambda t} / (lambda^alpha - xi),
/// requires r^alpha < xi so the positive-axis pole stays off the enclosed side.
double kernel_h_contour(double t, double xi, double alpha, const ContourSpec& spec);

/// Same kernel by the real-axis formula
/// (1/pi) int_0^inf e^{-t tau} tau^alpha sin(alpha pi)
///                / (tau^{2 alpha} - 2 xi cos(alpha pi) tau^alpha + xi^2) d tau,
/// adaptive quadrature to 1e-10 absolute.
double kernel_h_real(double t, double xi, double alpha);

/// int_{R+ x R+} e^{-a t tau} t^b tau^c / (tau^d + xi) dt dtau; the inner
/// t-integral is Gamma(b+1)/(a tau)^{b+1} in closed form, the outer one is
/// done by trapezoid on the log axis. Requires a > 0, -1 < b < c < b + d.
double lemma38_integral(double a, double b, double c, double d, double xi);

/// (1/2 pi i) int e^{lambda t} / (lambda^alpha + xi) d lambda on the
/// t-scaled contour; equals t^{alpha-1} E_{alpha,alpha}(-xi t^alpha).
double scalar_propagator(double t, double xi, double alpha, const ContourSpec& spec);

}  // namespace fracpde
