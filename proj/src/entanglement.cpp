#include "braidkit/entanglement.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace braidkit {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kConcurrenceSlack = 1e-8;

ComplexMatrix column_as_state(const ComplexMatrix& r, int d, int m, int n) {
  ComplexMatrix coeffs(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) coeffs(i, j) = r(d * i + j, d * m + n);
  return coeffs;
}

void check_digit(int v, int d, const char* name) {
  if (v < 0 || v >= d) {
    std::ostringstream msg;
    msg << "basis label " << name << " = " << v << " out of range [0, " << d - 1 << "]";
    throw std::out_of_range(msg.str());
  }
}

} // namespace

TwoQuditState::TwoQuditState(ComplexMatrix coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.rows() != coefficients_.cols() || coefficients_.rows() < 1)
    throw DimensionError("two-qudit state needs a square coefficient matrix");
  require_finite(coefficients_, "two-qudit state");
  const double norm2 = coefficients_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "two-qudit state is not normalized: squared norm " << norm2;
    throw InvariantError(msg.str());
  }
}

TwoQuditState generate_state(const RMatrixFamily& family, double theta, int m, int n) {
  const int d = family.local_dim();
  check_digit(m, d, "m");
  check_digit(n, d, "n");
  const ComplexMatrix r = evaluate_r(family, std::polar(1.0, theta));
  return TwoQuditState(column_as_state(r, d, m, n));
}

TwoQuditState generate_state(double theta, const PhaseParams& phases, int m, int n) {
  return generate_state(qutrit_family(phases), theta, m, n);
}

SchmidtData schmidt_coefficients(const TwoQuditState& state) {
  Eigen::JacobiSVD<ComplexMatrix> svd(state.coefficients());
  const auto& sv = svd.singularValues();
  SchmidtData data;
  data.coefficients.assign(sv.data(), sv.data() + sv.size());
  std::sort(data.coefficients.begin(), data.coefficients.end(), std::greater<>());
  data.purity = 0.0;
  for (const double k : data.coefficients) data.purity += k * k * k * k;
  return data;
}

double generalized_concurrence(const TwoQuditState& state) {
  const int d = state.local_dim();
  if (d < 2) return 0.0;
  // 1 - sum p^2 = 2 sum_{i<j} p_i p_j for sum p = 1; the pair sum keeps
  // nearly-product states accurate.
  const auto k = schmidt_coefficients(state).coefficients;
  double total = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double w = k[i] * k[i];
    for (std::size_t j = i + 1; j < k.size(); ++j) pairs += w * k[j] * k[j];
    total += w;
  }
  const double c2 = double(d) / double(d - 1) * 2.0 * pairs / (total * total);
  const double c = std::sqrt(c2);
  if (c > 1.0 + kConcurrenceSlack) {
    std::ostringstream msg;
    msg << "concurrence out of range: C^2 = " << c2;
    throw InvariantError(msg.str());
  }
  return std::min(c, 1.0);
}

double closed_form_concurrence(double theta) {
  const double c = std::cos(theta);
  return 2.0 * std::sqrt(2.0) / 3.0 * std::abs(std::sin(theta)) * std::sqrt(2.0 * c * c + 1.0);
}

std::vector<TwoQuditState> basis_images(const RMatrixFamily& family, double theta) {
  const int d = family.local_dim();
  const ComplexMatrix r = evaluate_r(family, std::polar(1.0, theta));
  std::vector<TwoQuditState> states;
  states.reserve(std::size_t(d) * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) states.emplace_back(column_as_state(r, d, m, n));
  return states;
}

std::vector<SweepRecord> concurrence_sweep(const RMatrixFamily& family,
                                           std::span<const double> theta_grid) {
  std::vector<SweepRecord> rows;
  rows.reserve(theta_grid.size());
  for (const double theta : theta_grid) {
    SweepRecord rec;
    rec.theta = theta;
    rec.concurrence_closed = closed_form_concurrence(theta);
    for (const auto& state : basis_images(family, theta)) {
      const double c = generalized_concurrence(state);
      rec.concurrence_numeric.push_back(c);
      rec.max_abs_diff = std::max(rec.max_abs_diff, std::abs(c - rec.concurrence_closed));
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

std::vector<SweepRecord> concurrence_sweep(const PhaseParams& phases,
                                           std::span<const double> theta_grid) {
  return concurrence_sweep(qutrit_family(phases), theta_grid);
}

ComplexMatrix pairwise_overlaps(std::span<const TwoQuditState> states) {
  const auto count = static_cast<Eigen::Index>(states.size());
  ComplexMatrix gram(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    if (states[i].local_dim() != states[0].local_dim())
      throw DimensionError("pairwise_overlaps: states of different local dimension");
    for (Eigen::Index j = 0; j < count; ++j)
      gram(i, j) = states[i].coefficients().conjugate().cwiseProduct(states[j].coefficients()).sum();
  }
  return gram;
}

} // namespace braidkit
