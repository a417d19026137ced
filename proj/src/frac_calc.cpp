#include "fracpde/frac_calc.hpp"

#include <cmath>

namespace fracpde {

namespace {

// Derivative weights at point z from a polynomial through the given nodes
// (Fornberg's recurrence, orders 0..m).
std::vector<RVector> fd_weights(double z, const RVector& x, int m) {
  const int n = static_cast<int>(x.size()) - 1;
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0, c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<RVector> w(m + 1, RVector(n + 1));
  for (int k = 0; k <= m; ++k)
    for (int i = 0; i <= n; ++i) w[k][i] = c[i][k];
  return w;
}

void apply_stencil(const TimeSeries& u, const RVector& w, const std::vector<int>& idx,
                   TimeSeries& out, std::size_t row) {
  for (int j = 0; j < u.dim(); ++j) {
    Complex acc(0.0);
    for (std::size_t q = 0; q < idx.size(); ++q) acc += w[q] * u.at(idx[q], j);
    out.at(row, j) = acc;
  }
}

}  // namespace

TimeSeries derivative_series(const TimeSeries& u, int order) {
  if (order < 1 || order > 2) throw DomainError("derivative_series: order must be 1 or 2");
  const TimeGrid& g = u.grid();
  const int M = g.steps();
  const int width = (order == 1) ? 3 : 4;  // one-sided width keeping 2nd order
  if (M + 1 < width)
    throw DomainError("derivative_series: grid too short for the stencil");
  TimeSeries out(g, u.dim());
  for (int i = 0; i <= M; ++i) {
    std::vector<int> idx;
    if (i >= 1 && i <= M - 1) {
      idx = {i - 1, i, i + 1};
    } else if (i == 0) {
      for (int q = 0; q < width; ++q) idx.push_back(q);
    } else {
      for (int q = 0; q < width; ++q) idx.push_back(M - width + 1 + q);
    }
    RVector x;
    for (int q : idx) x.push_back(g.node(q));
    auto w = fd_weights(g.node(i), x, order);
    apply_stencil(u, w[order], idx, out, i);
  }
  return out;
}

TimeSeries rl_integral(double alpha, const TimeSeries& f) {
  if (!(alpha > 0.0)) throw DomainError("rl_integral: alpha must be positive");
  const TimeGrid& g = f.grid();
  const int M = g.steps();
  if (M < 1) throw DomainError("rl_integral: empty grid");
  const int dim = f.dim();
  TimeSeries out(g, dim);
  const double inv_gamma = 1.0 / std::tgamma(alpha);

  // Row i: closed-form moments of (t_i - s)^(alpha-1) against the linear
  // element on each [t_j, t_{j+1}], j < i. With d = t_i - s,
  //   A1 = int (t_i-s)^(a-1) ds          = (dj^a - dj1^a)/a,
  //   A2 = int (t_i-s)^(a-1) (s-t_j) ds  = dj*A1 - (dj^(a+1) - dj1^(a+1))/(a+1).
  for (int i = 1; i <= M; ++i) {
    const double ti = g.node(i);
    for (int j = 0; j < i; ++j) {
      const double dj = ti - g.node(j);
      const double dj1 = ti - g.node(j + 1);
      const double h = g.node(j + 1) - g.node(j);
      const double dja = std::pow(dj, alpha);
      const double dj1a = (j + 1 == i) ? 0.0 : std::pow(dj1, alpha);
      const double A1 = (dja - dj1a) / alpha;
      const double A2 = dj * A1 - (dja * dj - dj1a * dj1) / (alpha + 1.0);
      const double wl = inv_gamma * (A1 - A2 / h);
      const double wr = inv_gamma * (A2 / h);
      for (int k = 0; k < dim; ++k)
        out.at(i, k) += wl * f.at(j, k) + wr * f.at(j + 1, k);
    }
  }
  return out;
}

TimeSeries taylor_part(const InitialData& init, const TimeGrid& grid) {
  const int dim = static_cast<int>(init.u_k.front().size());
  TimeSeries out(grid, dim);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.node(i);
    double tk_over_kfact = 1.0;
    for (int k = 0; k < init.order_count(); ++k) {
      for (int j = 0; j < dim; ++j) out.at(i, j) += tk_over_kfact * init.u_k[k][j];
      tk_over_kfact *= t / (k + 1);
    }
  }
  return out;
}

namespace {

void check_order_range(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("caputo: alpha must lie in (0,2)");
}

void check_consistency(double alpha, const TimeSeries& u, const InitialData& init,
                       const CaputoOptions& opt) {
  if (init.alpha != alpha)
    throw DomainError("caputo: InitialData built for a different order");
  double miss = 0.0;
  for (int j = 0; j < u.dim(); ++j)
    miss = std::max(miss, std::abs(u.at(0, j) - init.u_k[0][j]));
  if (miss > opt.value_tol)
    throw PreconditionError("caputo: u(0) disagrees with u_0", miss);
  if (alpha > 1.0) {
    TimeSeries du = derivative_series(u, 1);
    double dmiss = 0.0;
    for (int j = 0; j < u.dim(); ++j)
      dmiss = std::max(dmiss, std::abs(du.at(0, j) - init.u_k[1][j]));
    const double t1 = u.grid().node(1);
    const double floor = opt.deriv_slack * std::pow(t1, alpha - 1.0) * (1.0 + u.sup_norm());
    if (dmiss > opt.value_tol + floor)
      throw PreconditionError("caputo: D_t u(0) disagrees with u_1", dmiss);
  }
}

TimeSeries subtract_taylor(const TimeSeries& u, const InitialData& init) {
  TimeSeries shifted = u;
  shifted -= taylor_part(init, u.grid());
  return shifted;
}

}  // namespace

TimeSeries caputo_derivative(double alpha, const TimeSeries& u, const InitialData& init,
                             const CaputoOptions& opt) {
  check_order_range(alpha);
  if (opt.check_consistency) check_consistency(alpha, u, init, opt);
  TimeSeries shifted = subtract_taylor(u, init);
  const int m = (alpha <= 1.0) ? 1 : 2;
  TimeSeries dm = derivative_series(shifted, m);
  if (alpha == static_cast<double>(m)) return dm;
  return rl_integral(m - alpha, dm);
}

TimeSeries caputo_derivative_l1(double alpha, const TimeSeries& u, const InitialData& init) {
  check_order_range(alpha);
  TimeSeries shifted = subtract_taylor(u, init);
  const TimeGrid& g = u.grid();
  const int M = g.steps();
  const int dim = u.dim();
  TimeSeries out(g, dim);

  if (alpha == 1.0) return derivative_series(shifted, 1);

  if (alpha < 1.0) {
    // Classic L1: piecewise-constant slopes under exact (t-s)^(-alpha) moments.
    const double c = 1.0 / std::tgamma(2.0 - alpha);
    for (int i = 1; i <= M; ++i) {
      const double ti = g.node(i);
      for (int j = 0; j < i; ++j) {
        const double dj = ti - g.node(j);
        const double dj1 = ti - g.node(j + 1);
        const double h = g.node(j + 1) - g.node(j);
        const double mom =
            std::pow(dj, 1.0 - alpha) - ((j + 1 == i) ? 0.0 : std::pow(dj1, 1.0 - alpha));
        for (int k = 0; k < dim; ++k)
          out.at(i, k) += c * mom * (shifted.at(j + 1, k) - shifted.at(j, k)) / h;
      }
    }
    return out;
  }

  // L2-type for alpha in (1,2): piecewise-constant second divided differences
  // under exact (t-s)^(1-alpha) moments.
  if (M < 2) throw DomainError("caputo_l1: grid too short for second differences");
  const double c = 1.0 / std::tgamma(3.0 - alpha);
  CVector dd(dim);
  for (int i = 1; i <= M; ++i) {
    const double ti = g.node(i);
    for (int j = 0; j < i; ++j) {
      const int jc = std::max(1, std::min(j, M - 1));  // center of the 3-point stencil
      const double t0 = g.node(jc - 1), t1 = g.node(jc), t2 = g.node(jc + 1);
      for (int k = 0; k < dim; ++k) {
        const Complex f0 = shifted.at(jc - 1, k), f1 = shifted.at(jc, k),
                      f2 = shifted.at(jc + 1, k);
        dd[k] = 2.0 * ((f2 - f1) / (t2 - t1) - (f1 - f0) / (t1 - t0)) / (t2 - t0);
      }
      const double dj = ti - g.node(j);
      const double dj1 = ti - g.node(j + 1);
      const double mom = (std::pow(dj, 2.0 - alpha) -
                          ((j + 1 == i) ? 0.0 : std::pow(dj1, 2.0 - alpha)));
      for (int k = 0; k < dim; ++k) out.at(i, k) += c * mom * dd[k];
    }
  }
  return out;
}

}  // namespace fracpde
