#pragma once

// Braiding matrices from commuting factor pairs.
//
// A factor pair (A, B) of n x n matrices defines a two-site operator
//
//     S^{ab}_{cd} = A^a_d B^b_c,
//
// stored with row = n*a + b (outgoing pair |ab>) and column = n*c + d
// (incoming pair |cd>). S satisfies the braid relation on three sites
// whenever [A, B] = 0. Sums of such operators stay braiding as long as every
// A and B in the family pairwise commute.

#include "braidkit/tensor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

/// One term of a combined braiding matrix: coefficient * S(A, B).
struct FactorPair {
  ComplexMatrix a;
  ComplexMatrix b;
  Complex coefficient{1.0, 0.0};

  int dim() const { return static_cast<int>(a.rows()); }

  /// Throws DimensionError unless A, B are square, same size, n >= 2.
  void validate() const;
};

/// An n^2 x n^2 operator on two adjacent n-dimensional sites.
class LocalBraidOperator {
public:
  LocalBraidOperator(int local_dim, ComplexMatrix matrix);

  /// Infers n from an n^2 x n^2 matrix; throws DimensionError otherwise.
  static LocalBraidOperator from_matrix(ComplexMatrix matrix);

  int local_dim() const { return local_dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Entry S^{ab}_{cd}.
  Complex element(int a, int b, int c, int d) const {
    return matrix_(local_dim_ * a + b, local_dim_ * c + d);
  }

private:
  int local_dim_;
  ComplexMatrix matrix_;
};

struct BraidCheckReport {
  double braid_residual = 0.0;           // ||B1 B2 B1 - B2 B1 B2||_F, three sites
  double far_commutation_residual = 0.0; // ||[B1, B3]||_F, four sites
  double tolerance_used = 0.0;
  bool passed = false;
};

enum class CommutatorKind { AB, AA, BB };

struct CommutatorEntry {
  CommutatorKind kind;
  int i;
  int j;
  double norm;
};

struct CombiningReport {
  double max_commutator_norm = 0.0;
  std::vector<CommutatorEntry> per_pair;
  double tolerance_used = 0.0;
  bool passed = false;
};

/// Thrown by combine() when the family fails the commutativity gate.
class CombiningError : public std::runtime_error {
public:
  CombiningError(const std::string& what, CombiningReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CombiningReport& report() const { return report_; }

private:
  CombiningReport report_;
};

LocalBraidOperator construct_from_pair(const FactorPair& pair);

/// Frobenius norms of [A_i, B_j] for all i, j and of [A_i, A_j], [B_i, B_j]
/// for i < j.
CombiningReport check_combining_conditions(const std::vector<FactorPair>& terms,
                                           double tolerance = kIdentityTol);

struct CombineOptions {
  double tolerance = kIdentityTol;
  // Skips the commutativity gate. The result is then not guaranteed to be
  // braiding and must go through verify_braid_relation.
  bool unchecked = false;
};

LocalBraidOperator combine(const std::vector<FactorPair>& terms,
                           const CombineOptions& options = {});

BraidCheckReport verify_braid_relation(const LocalBraidOperator& s,
                                       double tolerance = kCompositeTol);

std::string describe(const CombiningReport& report);

struct FactorizationReport {
  double lhs_residual = 0.0; // [S12 S23 S12] vs its factorized form
  double rhs_residual = 0.0; // [S23 S12 S23] vs its factorized form
  double factorized_gap = 0.0; // max |left factorized - right factorized|
};

/// Compares the three-site products S12 S23 S12 and S23 S12 S23 entrywise
/// against their closed factorizations
///
///   [S12 S23 S12]^{abc}_{def} = sum c_g c_h c_l (B_g A_l)^b_e (A_g A_h)^a_f (B_h B_l)^c_d
///   [S23 S12 S23]^{abc}_{def} = sum c_g c_h c_l (A_g B_l)^b_e (A_h A_l)^a_f (B_g B_h)^c_d
///
/// with column index n^2 d + n e + f. Both hold for arbitrary factors; they
/// only coincide (factorized_gap = 0) when the family commutes.
FactorizationReport triple_product_factorization(const std::vector<FactorPair>& terms);
FactorizationReport triple_product_factorization(const FactorPair& pair);

} // namespace braidkit
