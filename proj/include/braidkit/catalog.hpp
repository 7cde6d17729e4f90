#pragma once

#include "braidkit/braid.hpp"
#include "braidkit/yang_baxter.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

struct PhaseParams {
  double phi1 = 0.0; // radians
  double phi2 = 0.0; // radians
};

// Qutrit factors. A and B are generalized permutation matrices with
// AB = BA = I for every phase choice; C is the identity.
//
//   A = [[0, 0, q1], [1, 0, 0], [0, 1/q2, 0]]
//   B = [[0, 1, 0], [0, 0, q2], [1/q1, 0, 0]],   q_k = e^{i phi_k}
ComplexMatrix qutrit_factor_a(const PhaseParams& p);
ComplexMatrix qutrit_factor_b(const PhaseParams& p);
ComplexMatrix qutrit_factor_c();

/// (A, B, 1), (B, A, 1), (C, C, 1).
std::vector<FactorPair> qutrit_terms(const PhaseParams& p);

/// The 9x9 braiding matrix built from qutrit_terms. Hermitian, S^2 = 3S.
LocalBraidOperator qutrit_braid(const PhaseParams& p);

RMatrixFamily qutrit_family(const PhaseParams& p);

/// Qubit factors [[1,0],[0,1]], [[0,i],[1,0]], [[0,1],[-i,0]].
ComplexMatrix qubit_factor_a();
ComplexMatrix qubit_factor_b();
ComplexMatrix qubit_factor_c();

/// (A, B, 1/sqrt2) + (C, A, 1/sqrt2).
std::vector<FactorPair> qubit_first_terms();
/// (A, A, 1/sqrt2) + (B, C, 1/sqrt2).
std::vector<FactorPair> qubit_second_terms();

enum class EntryKind { Braid, Factor };

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> parameters; // phase names the producer reads
  EntryKind kind;
  std::function<ComplexMatrix(const PhaseParams&)> producer;
  std::vector<std::string> commutes_with; // factor entries only
};

const std::vector<CatalogEntry>& catalog_entries();

/// nullptr when the name is unknown.
const CatalogEntry* find_entry(std::string_view name);

struct EntryCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

/// Braid entries: braid relation at `tolerance`. Factor entries: vanishing
/// commutators with every partner listed in commutes_with.
EntryCheck check_entry(const CatalogEntry& entry, const PhaseParams& params,
                       double tolerance = kCompositeTol);

} // namespace braidkit
