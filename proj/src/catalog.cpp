#include "braidkit/catalog.hpp"

#include <cmath>
#include <sstream>

namespace braidkit {

ComplexMatrix qutrit_factor_a(const PhaseParams& p) {
  const Complex q1 = std::polar(1.0, p.phi1);
  const Complex q2 = std::polar(1.0, p.phi2);
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 2) = q1;
  a(1, 0) = 1.0;
  a(2, 1) = 1.0 / q2;
  return a;
}

ComplexMatrix qutrit_factor_b(const PhaseParams& p) {
  const Complex q1 = std::polar(1.0, p.phi1);
  const Complex q2 = std::polar(1.0, p.phi2);
  ComplexMatrix b = ComplexMatrix::Zero(3, 3);
  b(0, 1) = 1.0;
  b(1, 2) = q2;
  b(2, 0) = 1.0 / q1;
  return b;
}

ComplexMatrix qutrit_factor_c() { return identity(3); }

std::vector<FactorPair> qutrit_terms(const PhaseParams& p) {
  const auto a = qutrit_factor_a(p);
  const auto b = qutrit_factor_b(p);
  const auto c = qutrit_factor_c();
  return {{a, b, 1.0}, {b, a, 1.0}, {c, c, 1.0}};
}

LocalBraidOperator qutrit_braid(const PhaseParams& p) { return combine(qutrit_terms(p)); }

RMatrixFamily qutrit_family(const PhaseParams& p) { return RMatrixFamily(qutrit_braid(p)); }

ComplexMatrix qubit_factor_a() { return identity(2); }

ComplexMatrix qubit_factor_b() {
  ComplexMatrix b(2, 2);
  b << 0.0, kI, 1.0, 0.0;
  return b;
}

ComplexMatrix qubit_factor_c() {
  ComplexMatrix c(2, 2);
  c << 0.0, 1.0, -kI, 0.0;
  return c;
}

std::vector<FactorPair> qubit_first_terms() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{qubit_factor_a(), qubit_factor_b(), h}, {qubit_factor_c(), qubit_factor_a(), h}};
}

std::vector<FactorPair> qubit_second_terms() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{qubit_factor_a(), qubit_factor_a(), h}, {qubit_factor_b(), qubit_factor_c(), h}};
}

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

std::vector<CatalogEntry> build_catalog() {
  using P = const PhaseParams&;
  const std::vector<std::string> phases{"phi1", "phi2"};
  std::vector<CatalogEntry> entries;
  entries.push_back({"swap-2", "4x4 swap gate, factors A = B = I2", {}, EntryKind::Braid,
                     [](P) { return construct_from_pair({identity(2), identity(2)}).matrix(); },
                     {}});
  entries.push_back({"swap-3", "9x9 swap, factors A = B = I3", {}, EntryKind::Braid,
                     [](P) { return construct_from_pair({identity(3), identity(3)}).matrix(); },
                     {}});
  entries.push_back({"corner-4x4", "4x4 permutation |00><11| + |01><01| + |10><10| + |11><00|, factors A = B = X",
                     {}, EntryKind::Braid,
                     [](P) { return construct_from_pair({pauli_x(), pauli_x()}).matrix(); },
                     {}});
  entries.push_back({"qubit-4x4-first", "(A,B,1/sqrt2) + (C,A,1/sqrt2) with the qubit factors a2,b2,c2",
                     {}, EntryKind::Braid, [](P) { return combine(qubit_first_terms()).matrix(); },
                     {}});
  entries.push_back({"qubit-4x4-second", "(A,A,1/sqrt2) + (B,C,1/sqrt2) with the qubit factors a2,b2,c2",
                     {}, EntryKind::Braid, [](P) { return combine(qubit_second_terms()).matrix(); },
                     {}});
  entries.push_back({"a2", "qubit factor I2", {}, EntryKind::Factor,
                     [](P) { return qubit_factor_a(); }, {"b2", "c2"}});
  entries.push_back({"b2", "qubit factor [[0,i],[1,0]]", {}, EntryKind::Factor,
                     [](P) { return qubit_factor_b(); }, {"a2", "c2"}});
  entries.push_back({"c2", "qubit factor [[0,1],[-i,0]]", {}, EntryKind::Factor,
                     [](P) { return qubit_factor_c(); }, {"a2", "b2"}});
  entries.push_back({"a3", "qutrit factor A(phi1, phi2)", phases, EntryKind::Factor,
                     [](P p) { return qutrit_factor_a(p); }, {"b3", "c3"}});
  entries.push_back({"b3", "qutrit factor B(phi1, phi2)", phases, EntryKind::Factor,
                     [](P p) { return qutrit_factor_b(p); }, {"a3", "c3"}});
  entries.push_back({"c3", "qutrit factor I3", {}, EntryKind::Factor,
                     [](P) { return qutrit_factor_c(); }, {"a3", "b3"}});
  entries.push_back({"s9", "9x9 qutrit braiding matrix (A,B,1) + (B,A,1) + (I3,I3,1); S^2 = 3S",
                     phases, EntryKind::Braid, [](P p) { return qutrit_braid(p).matrix(); }, {}});
  return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

EntryCheck check_entry(const CatalogEntry& entry, const PhaseParams& params, double tolerance) {
  EntryCheck check;
  check.name = entry.name;
  const ComplexMatrix m = entry.producer(params);
  if (entry.kind == EntryKind::Braid) {
    const auto report = verify_braid_relation(LocalBraidOperator::from_matrix(m), tolerance);
    check.residual = std::max(report.braid_residual, report.far_commutation_residual);
    check.passed = report.passed;
    std::ostringstream d;
    d << "braid residual " << report.braid_residual << ", far commutation "
      << report.far_commutation_residual;
    check.detail = d.str();
    return check;
  }
  std::ostringstream d;
  for (const auto& partner : entry.commutes_with) {
    const CatalogEntry* other = find_entry(partner);
    const double norm = commutator(m, other->producer(params)).norm();
    check.residual = std::max(check.residual, norm);
    d << (d.tellp() > 0 ? ", " : "") << "[" << entry.name << "," << partner << "] = " << norm;
  }
  check.passed = check.residual <= tolerance;
  check.detail = d.str();
  return check;
}

} // namespace braidkit
