#pragma once

// Gell-Mann basis, two-site SU(3) realizations on C^3 (x) C^3 and the
// operator expansion of the qutrit R-matrix.
//
// Generator labels are 1-based (lambda_1 ... lambda_8, I_mu = lambda_mu / 2)
// to match the usual physics notation. Ladder operators:
//
//   I+- = I1 +- i I2,   U+- = I6 +- i I7,   Y = (2/sqrt3) I8,
//   V+- = I4 -+ i I5    (SignConvention::Lowering, the default)
//   V+- = I4 +- i I5    (SignConvention::Standard)
//
// Only the Lowering convention makes the three realizations below close
// into su(3) and reproduce the R-matrix; Standard is kept for comparison.

#include "braidkit/tensor.hpp"

#include <array>
#include <vector>

namespace braidkit {

struct SU3Basis {
  std::array<ComplexMatrix, 8> lambdas; // lambdas[mu - 1] = lambda_mu

  const ComplexMatrix& lambda(int mu) const { return lambdas.at(mu - 1); }

  /// Structure constant f_abc, indices 1..8.
  double f(int a, int b, int c) const {
    return structure[((a - 1) * 8 + (b - 1)) * 8 + (c - 1)];
  }

  std::array<double, 512> structure{};
};

/// Standard Gell-Mann matrices; f_abc = Tr([lambda_a, lambda_b] lambda_c) / (4i).
SU3Basis gell_mann_basis();

enum class SignConvention { Lowering, Standard };

/// The eight ladder-form generators of one su(3) copy.
struct LadderSet {
  ComplexMatrix i_plus, i_minus;
  ComplexMatrix u_plus, u_minus;
  ComplexMatrix v_plus, v_minus;
  ComplexMatrix i3, y;

  /// Recovers the Cartesian generators I_1 ... I_8 (returned 0-based).
  std::array<ComplexMatrix, 8> cartesian(SignConvention convention) const;
};

LadderSet single_site_ladders(SignConvention convention = SignConvention::Lowering);

struct TwoSiteRealization {
  int k = 1;
  SignConvention convention = SignConvention::Lowering;
  LadderSet ops; // 9x9 operators

  std::array<ComplexMatrix, 8> generators() const { return ops.cartesian(convention); }
};

/// k = 1, 2, 3. Site products are tensor products, e.g. I+^(1) = I+ (x) I-.
TwoSiteRealization two_site_realization(int k,
                                        SignConvention convention = SignConvention::Lowering);

/// Max Frobenius deviation of [I^(i)_l, I^(j)_m] - i delta_ij f_lmn I^(i)_n over
/// all realization pairs and generator pairs.
double realization_commutator_deviation(const std::vector<TwoSiteRealization>& realizations,
                                        const SU3Basis& basis);

/// Builds all three realizations and runs the full table.
double realization_commutator_check(SignConvention convention = SignConvention::Lowering);

/// R(x) = (a/3) [sum of ladder terms with phases 1, Q, q1, q2] + (b/3) I (x) I,
/// a = 1/x - x, b = 2x + 1/x.
ComplexMatrix operator_expansion_r(Complex x, double phi1, double phi2,
                                   SignConvention convention = SignConvention::Lowering);

} // namespace braidkit
