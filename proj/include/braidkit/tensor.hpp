#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace braidkit {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Every operator, factor matrix and
/// coefficient matrix in the toolkit is one of these.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr Complex kI{0.0, 1.0};

/// Identity-scale tolerance for single algebraic identities.
inline constexpr double kIdentityTol = 1e-12;
/// Tolerance for composite products (braid and Yang-Baxter residuals).
inline constexpr double kCompositeTol = 1e-9;

/// Raised when operand shapes are incompatible with an operation.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value violates a documented invariant (non-finite entries,
/// unnormalized states, out-of-range indices).
class InvariantError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

ComplexMatrix identity(Eigen::Index dim);

/// Tensor product with lhs index major: result(i*r'+k, j*c'+l) = lhs(i,j)*rhs(k,l).
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Places a two-site operator `op` (local dimension `local_dim`) on sites
/// (site, site+1) of a chain of `num_sites` sites, identity elsewhere.
/// Sites are 1-based, matching the braid generator labels b_1 ... b_{m-1}.
ComplexMatrix embed_site(const ComplexMatrix& op, int local_dim, int site,
                         int num_sites);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius(const ComplexMatrix& m);

/// Largest absolute entrywise difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct DeviationMetrics {
  double unitarity_defect = 0.0;   // ||M^dagger M - I||_F
  double hermiticity_defect = 0.0; // ||M - M^dagger||_F
};

DeviationMetrics deviation_metrics(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// Throws InvariantError naming the first non-finite entry.
void require_finite(const ComplexMatrix& m, const std::string& what);

/// Integer power for dimension arithmetic (n^k).
Eigen::Index ipow(Eigen::Index base, int exp);

} // namespace braidkit
