#include "fracpde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace fracpde {

namespace {

// Legendre P_n(x) and derivative by the three-term recurrence.
void legendre_eval(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = (n == 0) ? 1.0 : (n == 1 ? x : p1);
  dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

GaussRule make_gauss(int n) {
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 64; ++it) {
      legendre_eval(n, x, p, dp);
      double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre_eval(n, x, p, dp);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss(n)).first;
  return it->second;
}

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
const double kXgk15[8] = {0.991455371120812639206854697526329,
                          0.949107912342758524526189684047851,
                          0.864864423359769072789712788640926,
                          0.741531185599394439863864773280788,
                          0.586087235467691130294144838258730,
                          0.405845151377397166906606412076961,
                          0.207784955007898467600689403773245,
                          0.0};
const double kWgk15[8] = {0.022935322010529224963732008058970,
                          0.063092092629978553290700663189204,
                          0.104790010322250183839876322541518,
                          0.140653259715525918745189590510238,
                          0.169004726639267902826583426598550,
                          0.190350578064785409913256402421014,
                          0.204432940075298892414161999234649,
                          0.209482141084727828012999174891714};
const double kWg7[4] = {0.129484966168869693270611432679082,
                        0.279705391489276667901467771423780,
                        0.381830050505118944950369775488975,
                        0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resg = fc * kWg7[3];
  double resk = fc * kWgk15[7];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk15[j];
    double fsum = f(c - x) + f(c + x);
    if (j % 2 == 1) resg += kWg7[j / 2] * fsum;
    resk += kWgk15[j] * fsum;
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = resk * h;
  s.error = std::abs((resk - resg) * h);
  return s;
}

}  // namespace

double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double abstol, int max_intervals) {
  std::priority_queue<Segment> queue;
  queue.push(gk15(f, a, b));
  double total = queue.top().value;
  double toterr = queue.top().error;
  int used = 1;
  while (toterr > abstol && used < max_intervals) {
    Segment worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    Segment l = gk15(f, worst.a, mid);
    Segment r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    toterr += l.error + r.error - worst.error;
    queue.push(l);
    queue.push(r);
    ++used;
  }
  if (toterr > abstol)
    throw ConvergenceError("adaptive quadrature: tolerance not reached within node budget");
  return total;
}

}  // namespace fracpde
