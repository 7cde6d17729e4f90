#pragma once

// Random generators and brute-force oracles shared by the test suites.
// The oracles deliberately avoid kron/embed_site and the library's
// contraction code: they work from explicit index formulas.

#include "braidkit/tensor.hpp"

#include <Eigen/QR>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace braidkit::test {

using Rng = std::mt19937_64;

/// Uniform in the closed unit disk.
inline Complex random_unit_disk(Rng& rng) {
  std::uniform_real_distribution<double> r(0.0, 1.0), t(-std::numbers::pi, std::numbers::pi);
  return std::polar(std::sqrt(r(rng)), t(rng));
}

inline ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_unit_disk(rng);
  return m;
}

inline ComplexMatrix random_unitary(Rng& rng, int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline double random_angle(Rng& rng) {
  return std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(rng);
}

/// Index-formula Kronecker product.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Two-site operator on sites (site, site+1) of a three-site chain, built
/// entry by entry: <abc| S_12 |def> = S(ab, de) delta_cf, and similarly for S_23.
inline ComplexMatrix three_site_oracle(const ComplexMatrix& s, int n, int site) {
  const int n3 = n * n * n;
  ComplexMatrix out = ComplexMatrix::Zero(n3, n3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              const int row = (a * n + b) * n + c, col = (d * n + e) * n + f;
              if (site == 1 && c == f) out(row, col) = s(a * n + b, d * n + e);
              if (site == 2 && a == d) out(row, col) = s(b * n + c, e * n + f);
            }
  return out;
}

/// S^{ab}_{cd} = A^a_d B^b_c straight from the definition.
inline ComplexMatrix pair_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = static_cast<int>(a.rows());
  ComplexMatrix s(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s(i * n + j, k * n + l) = a(i, l) * b(j, k);
  return s;
}

/// [S12 S23 S12] with every intermediate index summed by hand:
/// sum_{ijk, pqr} S12(abc, ijk) S23(ijk, pqr) S12(pqr, def).
inline ComplexMatrix triple_contraction_oracle(const ComplexMatrix& s, int n, bool s12_first) {
  const int n3 = n * n * n;
  auto elem = [&](bool first_pair, int r, int c) -> Complex {
    const int a = r / (n * n), b = (r / n) % n, cc = r % n;
    const int d = c / (n * n), e = (c / n) % n, f = c % n;
    if (first_pair) return cc == f ? s(a * n + b, d * n + e) : Complex{};
    return a == d ? s(b * n + cc, e * n + f) : Complex{};
  };
  ComplexMatrix out = ComplexMatrix::Zero(n3, n3);
  for (int r = 0; r < n3; ++r)
    for (int c = 0; c < n3; ++c) {
      Complex acc{};
      for (int i = 0; i < n3; ++i) {
        const Complex x = elem(s12_first, r, i);
        if (x == Complex{}) continue;
        for (int j = 0; j < n3; ++j) {
          const Complex y = elem(!s12_first, i, j);
          if (y == Complex{}) continue;
          acc += x * y * elem(s12_first, j, c);
        }
      }
      out(r, c) = acc;
    }
  return out;
}

/// Singular values as square roots of the eigenvalues of M M^dagger, nonincreasing.
inline std::vector<double> singular_values_oracle(const ComplexMatrix& m) {
  const ComplexMatrix gram = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    out.push_back(std::sqrt(std::max(solver.eigenvalues()(k), 0.0)));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Polynomial c0 I + c1 M + c2 M^2 + ... with random unit-disk coefficients.
inline ComplexMatrix random_polynomial_of(Rng& rng, const ComplexMatrix& m, int degree) {
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  ComplexMatrix power = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int k = 0; k <= degree; ++k) {
    out += random_unit_disk(rng) * power;
    power = power * m;
  }
  return out;
}

} // namespace braidkit::test
