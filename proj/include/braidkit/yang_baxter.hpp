#pragma once

// Yang-Baxterization of a braiding matrix S with S^2 = kappa * S:
//
//   R(x) = rho(x) (I + G(x) S),   rho(x) = x,   G(x) = -(x - 1/x) / (kappa x)
//
// G satisfies G(x) + G(y) + kappa G(x) G(y) = G(xy), which makes R(x) solve
// R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x) for all nonzero complex x, y, and
// gives R(x) R(1/x) = I. On the unit circle x = e^{i theta}, with S Hermitian
// and kappa real, R(x) is unitary.

#include "braidkit/braid.hpp"

#include <span>
#include <stdexcept>

namespace braidkit {

/// S is not proportional to a projector (S^2 is not a multiple of S).
class NotProjectorLike : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Least-squares kappa = <S, S^2>_F / <S, S>_F. Throws NotProjectorLike unless
/// ||S^2 - kappa S||_F <= 1e-9 ||S^2||_F and kappa != 0.
Complex detect_kappa(const LocalBraidOperator& s);

Complex spectral_g(Complex x, Complex kappa);

class RMatrixFamily {
public:
  /// Detects kappa from S.
  explicit RMatrixFamily(LocalBraidOperator s);
  /// Uses a known kappa; the projector law is still checked.
  RMatrixFamily(LocalBraidOperator s, Complex kappa);

  const LocalBraidOperator& braid() const { return s_; }
  Complex kappa() const { return kappa_; }
  int local_dim() const { return s_.local_dim(); }

private:
  LocalBraidOperator s_;
  Complex kappa_;
};

ComplexMatrix evaluate_r(const RMatrixFamily& family, Complex x);

/// ||R1(x) R2(xy) R1(y) - R2(y) R1(xy) R2(x)||_F on three sites.
double check_ybe(const RMatrixFamily& family, Complex x, Complex y);

struct UnitarityReport {
  double max_unitarity_defect = 0.0; // max ||R^dagger R - I||_F
  double max_adjoint_mismatch = 0.0; // max |R(x)^dagger - R(1/x)| entrywise
};

/// Evaluates on x = e^{i theta} for each theta.
UnitarityReport check_unitarity_family(const RMatrixFamily& family,
                                       std::span<const double> thetas);

} // namespace braidkit
