#include "fracpde/contour.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "fracpde/quadrature.hpp"

namespace fracpde {

void ContourSpec::validate() const {
  if (!(phi > 0.5 * kPi && phi < kPi))
    throw DomainError("ContourSpec: phi must lie in (pi/2, pi)");
  if (!(radius > 0.0)) throw DomainError("ContourSpec: radius must be positive");
  if (nodes_per_ray < 4 || arc_nodes < 4)
    throw DomainError("ContourSpec: node counts must be >= 4");
  if (!(truncation > radius))
    throw DomainError("ContourSpec: truncation must exceed the radius");
}

Complex ContourNodes::sum(const std::function<Complex(Complex)>& f) const {
  Complex acc(0.0);
  for (std::size_t j = 0; j < points.size(); ++j) acc += weights[j] * f(points[j]);
  return acc;
}

void ContourNodes::write_csv(std::ostream& out) const {
  out << "re,im,w_re,w_im\n" << std::setprecision(17);
  for (std::size_t j = 0; j < points.size(); ++j)
    out << points[j].real() << "," << points[j].imag() << "," << weights[j].real()
        << "," << weights[j].imag() << "\n";
}

namespace {

constexpr double kBasePanelRay = 1.3;  // panel length in sigma = log(tau/r)
constexpr double kMinPanelRay = 0.15;
constexpr double kBasePanelArc = 0.9;  // panel length in the arc angle psi
constexpr double kMinPanelArc = 0.12;

struct Zone {
  double lo, hi, len;
};

// Ascending breakpoints on [0, L] with base spacing shrunk inside zones.
RVector breakpoints(double L, double base, const std::vector<Zone>& zones) {
  RVector pts{0.0};
  double s = 0.0;
  while (s < L - 1e-12) {
    double step = base;
    for (const auto& z : zones)
      if (s > z.lo - 0.3 && s < z.hi) step = std::min(step, z.len);
    s = std::min(L, s + step);
    pts.push_back(s);
  }
  if (pts.size() > 2 && pts.back() - pts[pts.size() - 2] < 0.4 * kMinPanelRay)
    pts.erase(pts.end() - 2);
  return pts;
}

}  // namespace

ContourNodes build_contour_path(double phi, double radius, double tau_max,
                                int nodes_per_ray, int arc_nodes,
                                const std::vector<PoleHint>& hints, double t_osc) {
  tau_max = std::max(tau_max, radius * 2.0);
  const double L = std::log(tau_max / radius);

  // Ray panels. Near a pole whose angular gap to the ray is small the local
  // panel length shrinks to ~1.7 * gap so each Gauss panel's Bernstein
  // ellipse clears the pole.
  std::vector<Zone> ray_zones;
  for (const auto& p : hints) {
    const double gap = std::abs(p.angle) - phi;
    if (gap <= 0.0 || gap > 0.7) continue;
    const double sp = std::log(p.modulus / radius);
    if (sp < -1.5 || sp > L + 1.5) continue;
    const double len = std::clamp(1.7 * gap, kMinPanelRay, kBasePanelRay);
    ray_zones.push_back({std::max(0.0, sp - 1.2), std::min(L, sp + 1.2), len});
  }
  const RVector brk = breakpoints(L, kBasePanelRay, ray_zones);
  const int panels = static_cast<int>(brk.size()) - 1;

  // Budget split: refined zones carry ~3x density; panels spanning many
  // oscillations of e^{i Im(lambda) t} get nodes for ~2.2 points per radian.
  RVector demand(panels);
  double total_demand = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double len = brk[p + 1] - brk[p];
    demand[p] = len * (len < 0.9 * kBasePanelRay ? 3.0 : 1.0);
    total_demand += demand[p];
  }
  const double sphi = std::sin(phi);
  std::vector<int> pts_per_panel(panels);
  for (int p = 0; p < panels; ++p) {
    const double span = radius * (std::exp(brk[p + 1]) - std::exp(brk[p]));
    const int osc = static_cast<int>(std::ceil(t_osc * sphi * span / 2.2));
    pts_per_panel[p] =
        std::max(4, static_cast<int>(std::lround(nodes_per_ray * demand[p] / total_demand))) +
        osc;
  }

  // Upper-ray nodes, weights carrying lambda d sigma / (2 pi i); the lower ray
  // is the exact conjugate mirror.
  CVector up_pts, up_wts;
  const Complex dir = std::polar(1.0, phi);
  const Complex inv_2pii = Complex(0.0, -1.0 / (2.0 * kPi));
  for (int p = 0; p < panels; ++p) {
    const auto& rule = gauss_legendre(pts_per_panel[p]);
    const double mid = 0.5 * (brk[p] + brk[p + 1]);
    const double half = 0.5 * (brk[p + 1] - brk[p]);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double sigma = mid + half * rule.nodes[q];
      const Complex lambda = radius * std::exp(sigma) * dir;
      up_pts.push_back(lambda);
      up_wts.push_back(inv_2pii * (rule.weights[q] * half) * lambda);
    }
  }

  // Arc panels on psi in [0, phi], mirrored; a pole radially close to the arc
  // refines the angles around its direction.
  std::vector<Zone> arc_zones;
  for (const auto& p : hints) {
    const double raddist = std::abs(std::log(p.modulus / radius));
    if (raddist > 1.2) continue;
    const double psi0 = std::min(std::abs(p.angle), phi);
    const double len = std::clamp(1.5 * std::max(raddist, 0.08), kMinPanelArc, kBasePanelArc);
    arc_zones.push_back({std::max(0.0, psi0 - 0.7), std::min(phi, psi0 + 0.7), len});
  }
  const RVector abrk = breakpoints(phi, kBasePanelArc, arc_zones);
  const int apanels = static_cast<int>(abrk.size()) - 1;
  RVector ademand(apanels);
  double atotal = 0.0;
  for (int p = 0; p < apanels; ++p) {
    const double len = abrk[p + 1] - abrk[p];
    ademand[p] = len * (len < 0.9 * kBasePanelArc ? 3.0 : 1.0);
    atotal += ademand[p];
  }
  // Half the arc budget per side (the first panel spans both sides).
  CVector arc_pts, arc_wts;
  for (int p = 0; p < apanels; ++p) {
    const bool centered = (p == 0);
    const double lo = centered ? -abrk[1] : abrk[p];
    const double hi = abrk[p + 1];
    const int osc = static_cast<int>(std::ceil(t_osc * radius * (hi - lo) / 2.2));
    const int npts =
        std::max(4, static_cast<int>(std::lround(
                        0.5 * arc_nodes * ademand[p] / atotal * (centered ? 2.0 : 1.0)))) +
        osc;
    const auto& rule = gauss_legendre(npts);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double psi = mid + half * rule.nodes[q];
      const Complex lambda = std::polar(radius, psi);
      arc_pts.push_back(lambda);
      // (1/2 pi i) * glw * half * i r e^{i psi} = glw * half * lambda / (2 pi)
      arc_wts.push_back(rule.weights[q] * half / (2.0 * kPi) * lambda);
    }
    if (!centered) {  // mirror panel at negative psi
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        arc_pts.push_back(std::conj(arc_pts[arc_pts.size() - rule.nodes.size()]));
        arc_wts.push_back(std::conj(arc_wts[arc_wts.size() - rule.nodes.size()]));
      }
    }
  }

  ContourNodes out;
  const std::size_t nray = up_pts.size();
  out.points.reserve(2 * nray + arc_pts.size());
  out.weights.reserve(2 * nray + arc_pts.size());
  for (std::size_t j = 0; j < nray; ++j) {
    out.points.push_back(std::conj(up_pts[nray - 1 - j]));
    out.weights.push_back(std::conj(up_wts[nray - 1 - j]));
  }
  for (std::size_t j = 0; j < arc_pts.size(); ++j) {
    out.points.push_back(arc_pts[j]);
    out.weights.push_back(arc_wts[j]);
  }
  for (std::size_t j = 0; j < nray; ++j) {
    out.points.push_back(up_pts[j]);
    out.weights.push_back(up_wts[j]);
  }
  return out;
}

ContourNodes build_contour(const ContourSpec& spec, double t_scale,
                           const std::vector<PoleHint>& hints) {
  spec.validate();
  if (!(t_scale > 0.0)) throw DomainError("build_contour: t_scale must be positive");
  const double radius = spec.radius / t_scale;
  const double decay_cut = std::log(1e16) / (std::abs(std::cos(spec.phi)) * t_scale);
  const double tau_max = std::min(spec.truncation / t_scale, decay_cut);
  return build_contour_path(spec.phi, radius, tau_max, spec.nodes_per_ray,
                            spec.arc_nodes, hints, t_scale);
}

ContourNodes closing_arc(double Lambda, double phi, int nodes) {
  ContourNodes out;
  const auto& rule = gauss_legendre(nodes);
  const double lo = phi, hi = 2.0 * kPi - phi;
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double psi = mid + half * rule.nodes[q];
    const Complex lambda = std::polar(Lambda, psi);
    out.points.push_back(lambda);
    out.weights.push_back(rule.weights[q] * half / (2.0 * kPi) * lambda);
  }
  return out;
}

double kernel_h_contour(double t, double xi, double alpha, const ContourSpec& spec) {
  spec.validate();
  if (!(t > 0.0)) throw DomainError("kernel_h_contour: t must be positive");
  if (!(xi > 0.0)) throw DomainError("kernel_h_contour: xi must be positive");
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("kernel_h_contour: alpha must lie in (0,2)");
  const double ra = std::pow(spec.radius, alpha);
  if (!(ra < xi))
    throw PreconditionError("kernel_h_contour: need radius^alpha < xi, pole may be enclosed",
                            ra);
  const double decay_cut = std::log(1e16) / (std::abs(std::cos(spec.phi)) * t);
  const double tau_max = std::min(spec.truncation, decay_cut);
  // The only pole sits on the positive axis at xi^(1/alpha): it constrains
  // the arc (radially), not the rays.
  ContourNodes nodes =
      build_contour_path(spec.phi, spec.radius, tau_max, spec.nodes_per_ray,
                         spec.arc_nodes, {{std::pow(xi, 1.0 / alpha), 0.0}}, t);
  Complex acc = nodes.sum([&](Complex lam) {
    return std::exp(lam * t) / (std::pow(lam, alpha) - xi);
  });
  return acc.real();
}

double kernel_h_real(double t, double xi, double alpha) {
  if (!(t > 0.0)) throw DomainError("kernel_h_real: t must be positive");
  if (!(xi > 0.0)) throw DomainError("kernel_h_real: xi must be positive");
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("kernel_h_real: alpha must lie in (0,2)");
  const double s = std::sin(alpha * kPi);
  const double c = std::cos(alpha * kPi);
  // (tau^alpha - xi cos)^2 + (xi sin)^2 keeps the denominator positive.
  auto integrand = [&](double tau) {
    const double ta = std::pow(tau, alpha);
    const double den = (ta - xi * c) * (ta - xi * c) + xi * xi * s * s;
    return std::exp(-t * tau) * ta * s / den / kPi;
  };
  const double peak = std::pow(xi, 1.0 / alpha);
  const double tau_max = std::max(60.0 / t, 4.0 * peak + 60.0 / t);
  // Split at the resonance radius so the adaptive pass needn't hunt for the
  // sharp peak that develops as alpha -> 1.
  double v = integrate_gk(integrand, 0.0, std::min(peak, tau_max), 0.5e-10);
  if (peak < tau_max) v += integrate_gk(integrand, peak, tau_max, 0.5e-10);
  return v;
}

double lemma38_integral(double a, double b, double c, double d, double xi) {
  if (!(a > 0.0) || !(b > -1.0) || !(c > b) || !(c < b + d))
    throw DomainError("lemma38_integral: need a > 0 and -1 < b < c < b + d");
  if (!(xi > 0.0)) throw DomainError("lemma38_integral: xi must be positive");
  // inner t-integral: Gamma(b+1) / (a tau)^(b+1)
  const double front = std::tgamma(b + 1.0) / std::pow(a, b + 1.0);
  // outer integral of tau^(c-b-1) / (tau^d + xi) on the log axis
  const double p = c - b;      // growth exponent on the left
  const double q = b + d - c;  // decay exponent on the right
  const double s0 = std::log(xi) / d;
  const double lo = s0 - 40.0 / p, hi = s0 + 40.0 / q;
  const double h = std::min(0.2, 2.0 * kPi * (kPi / d) / 34.0);
  const int n = static_cast<int>(std::ceil((hi - lo) / h));
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double sigma = lo + (hi - lo) * k / n;
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    acc += w * std::exp(sigma * p) / (std::exp(sigma * d) + xi);
  }
  return front * acc * (hi - lo) / n;
}

double scalar_propagator(double t, double xi, double alpha, const ContourSpec& spec) {
  if (!(t > 0.0)) throw DomainError("scalar_propagator: t must be positive");
  if (!(xi > 0.0)) throw DomainError("scalar_propagator: xi must be positive");
  std::vector<PoleHint> hints;
  if (alpha > 1.0) {
    if (spec.phi >= kPi / alpha - 1e-9)
      throw DomainError(
          "scalar_propagator: contour misconfigured, phi must stay below pi/alpha");
    hints.push_back({std::pow(xi, 1.0 / alpha), kPi / alpha});
  }
  ContourNodes nodes = build_contour(spec, t, hints);
  Complex acc = nodes.sum([&](Complex lam) {
    return std::exp(lam * t) / (std::pow(lam, alpha) + xi);
  });
  return acc.real();
}

}  // namespace fracpde
