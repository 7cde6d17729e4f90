#pragma once

#include "braidkit/catalog.hpp"
#include "braidkit/yang_baxter.hpp"

#include <span>
#include <vector>

namespace braidkit {

/// Normalized pure state on C^d (x) C^d, psi = sum_ij M(i,j) |ij>.
class TwoQuditState {
public:
  /// Throws InvariantError unless M is square and sum |M_ij|^2 = 1 within 1e-10.
  explicit TwoQuditState(ComplexMatrix coefficients);

  int local_dim() const { return static_cast<int>(coefficients_.rows()); }
  const ComplexMatrix& coefficients() const { return coefficients_; }
  Complex amplitude(int i, int j) const { return coefficients_(i, j); }

private:
  ComplexMatrix coefficients_;
};

struct SchmidtData {
  std::vector<double> coefficients; // nonincreasing, sum of squares = 1
  double purity = 1.0;              // I1 = Tr(rho_A^2) = sum kappa_j^4
};

/// Column |mn> of R(e^{i theta}) as a d x d coefficient matrix.
TwoQuditState generate_state(const RMatrixFamily& family, double theta, int m, int n);

/// Same, for the qutrit braiding family at phases (phi1, phi2).
TwoQuditState generate_state(double theta, const PhaseParams& phases, int m, int n);

/// Schmidt coefficients: singular values of the coefficient matrix.
SchmidtData schmidt_coefficients(const TwoQuditState& state);

/// sqrt(d/(d-1) (1 - I1)), clamped to [0, 1]. Throws InvariantError if the
/// unclamped value exceeds 1 by more than 1e-8.
double generalized_concurrence(const TwoQuditState& state);

/// (2 sqrt2 / 3) |sin theta| sqrt(2 cos^2 theta + 1).
double closed_form_concurrence(double theta);

struct SweepRecord {
  double theta = 0.0;
  double concurrence_closed = 0.0;
  std::vector<double> concurrence_numeric; // one per basis column |mn>, row-major in (m, n)
  double max_abs_diff = 0.0;
};

std::vector<SweepRecord> concurrence_sweep(const RMatrixFamily& family,
                                           std::span<const double> theta_grid);

std::vector<SweepRecord> concurrence_sweep(const PhaseParams& phases,
                                           std::span<const double> theta_grid);

/// Gram matrix G(i,j) = <psi_i|psi_j>.
ComplexMatrix pairwise_overlaps(std::span<const TwoQuditState> states);

/// All d^2 columns of R(e^{i theta}) as states, in basis order |00>, |01>, ...
std::vector<TwoQuditState> basis_images(const RMatrixFamily& family, double theta);

} // namespace braidkit
