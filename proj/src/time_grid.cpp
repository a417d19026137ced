#include "fracpde/time_grid.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace fracpde {

TimeGrid::TimeGrid(double T, int steps, double grading)
    : T_(T), M_(steps), gamma_(grading) {
  if (!(T > 0.0)) throw DomainError("TimeGrid: final time must be positive");
  if (steps < 1) throw DomainError("TimeGrid: need at least one step");
  if (grading < 1.0) throw DomainError("TimeGrid: grading must be >= 1");
  nodes_.resize(steps + 1);
  for (int j = 0; j <= steps; ++j)
    nodes_[j] = T * std::pow(static_cast<double>(j) / steps, grading);
  nodes_[0] = 0.0;
  nodes_[steps] = T;
}

TimeSeries::TimeSeries(TimeGrid grid, int dim)
    : grid_(std::move(grid)), dim_(dim) {
  if (dim < 1) throw DomainError("TimeSeries: dimension must be positive");
  values_.assign(grid_.size() * dim_, Complex(0.0, 0.0));
}

CVector TimeSeries::row(std::size_t i) const {
  return CVector(values_.begin() + i * dim_, values_.begin() + (i + 1) * dim_);
}

void TimeSeries::set_row(std::size_t i, const CVector& v) {
  for (int j = 0; j < dim_; ++j) values_[i * dim_ + j] = v[j];
}

double TimeSeries::sup_norm() const {
  double m = 0.0;
  for (const auto& x : values_) m = std::max(m, std::abs(x));
  return m;
}

double TimeSeries::row_sup(std::size_t i) const {
  double m = 0.0;
  for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs(values_[i * dim_ + j]));
  return m;
}

TimeSeries& TimeSeries::operator+=(const TimeSeries& o) {
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

TimeSeries& TimeSeries::operator-=(const TimeSeries& o) {
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

TimeSeries& TimeSeries::operator*=(Complex c) {
  for (auto& x : values_) x *= c;
  return *this;
}

void TimeSeries::write_csv(std::ostream& out) const {
  out << "t";
  for (int j = 0; j < dim_; ++j) out << ",re_" << j << ",im_" << j;
  out << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < rows(); ++i) {
    out << grid_.node(i);
    for (int j = 0; j < dim_; ++j)
      out << "," << at(i, j).real() << "," << at(i, j).imag();
    out << "\n";
  }
}

InitialData::InitialData(double a, std::vector<CVector> data)
    : alpha(a), u_k(std::move(data)) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("InitialData: alpha must lie in (0,2)");
  const std::size_t expected = (alpha <= 1.0) ? 1 : 2;
  if (u_k.size() != expected)
    throw DomainError("InitialData: need " + std::to_string(expected) +
                      " initial vector(s) for this alpha");
}

InitialData InitialData::zero(double alpha, int dim) {
  std::vector<CVector> data;
  data.emplace_back(dim, Complex(0.0));
  if (alpha > 1.0) data.emplace_back(dim, Complex(0.0));
  return InitialData(alpha, std::move(data));
}

}  // namespace fracpde
