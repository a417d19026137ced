#pragma once

#include <cstddef>
#include <iosfwd>

#include "fracpde/types.hpp"

namespace fracpde {

/// Discretization of [0, T]: t_0 = 0 < t_1 < ... < t_M = T.
/// Uniform by default; graded grids cluster nodes at t = 0 via
/// t_j = T (j/M)^gamma with gamma >= 1.
class TimeGrid {
 public:
  TimeGrid(double T, int steps, double grading = 1.0);

  double final_time() const { return T_; }
  int steps() const { return M_; }
  std::size_t size() const { return nodes_.size(); }  // M + 1
  double node(std::size_t i) const { return nodes_[i]; }
  const RVector& nodes() const { return nodes_; }
  double grading() const { return gamma_; }

  bool operator==(const TimeGrid& o) const { return nodes_ == o.nodes_; }

 private:
  double T_;
  int M_;
  double gamma_;
  RVector nodes_;
};

/// Function on a TimeGrid with values in C^dim: one row of `dim` complex
/// entries per node.
class TimeSeries {
 public:
  TimeSeries(TimeGrid grid, int dim);

  const TimeGrid& grid() const { return grid_; }
  int dim() const { return dim_; }
  std::size_t rows() const { return grid_.size(); }

  Complex& at(std::size_t row, int j) { return values_[row * dim_ + j]; }
  const Complex& at(std::size_t row, int j) const { return values_[row * dim_ + j]; }

  /// Copy of row i as a vector.
  CVector row(std::size_t i) const;
  void set_row(std::size_t i, const CVector& v);

  double sup_norm() const;
  /// max_j |at(row, j)|
  double row_sup(std::size_t i) const;

  TimeSeries& operator+=(const TimeSeries& o);
  TimeSeries& operator-=(const TimeSeries& o);
  TimeSeries& operator*=(Complex c);

  /// CSV with header `t,re_0,im_0,...`; 17 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  TimeGrid grid_;
  int dim_;
  CVector values_;
};

/// Initial data u_k, k < alpha: one vector for alpha in (0,1],
/// two (value and first derivative) for alpha in (1,2).
struct InitialData {
  double alpha = 0.5;
  std::vector<CVector> u_k;

  InitialData() = default;
  InitialData(double a, std::vector<CVector> data);
  static InitialData zero(double alpha, int dim);

  int order_count() const { return static_cast<int>(u_k.size()); }
};

}  // namespace fracpde
