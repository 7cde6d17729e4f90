#include "braidkit/braid.hpp"

#include <cmath>
#include <sstream>

namespace braidkit {

void FactorPair::validate() const {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << "factor pair: A is " << a.rows() << "x" << a.cols() << ", B is "
        << b.rows() << "x" << b.cols() << "; need equal square matrices";
    throw DimensionError(msg.str());
  }
  if (a.rows() < 2) throw DimensionError("factor pair: local dimension must be >= 2");
  require_finite(a, "factor A");
  require_finite(b, "factor B");
  if (!std::isfinite(coefficient.real()) || !std::isfinite(coefficient.imag()))
    throw InvariantError("factor pair: coefficient is not finite");
}

LocalBraidOperator::LocalBraidOperator(int local_dim, ComplexMatrix matrix)
    : local_dim_(local_dim), matrix_(std::move(matrix)) {
  const Eigen::Index pair = Eigen::Index(local_dim) * local_dim;
  if (local_dim < 1 || matrix_.rows() != pair || matrix_.cols() != pair) {
    std::ostringstream msg;
    msg << "braid operator: " << matrix_.rows() << "x" << matrix_.cols()
        << " matrix does not act on two " << local_dim << "-dimensional sites";
    throw DimensionError(msg.str());
  }
}

LocalBraidOperator LocalBraidOperator::from_matrix(ComplexMatrix matrix) {
  const auto n = static_cast<int>(std::lround(std::sqrt(double(matrix.rows()))));
  return LocalBraidOperator(n, std::move(matrix));
}

namespace {

ComplexMatrix pair_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = static_cast<int>(a.rows());
  ComplexMatrix s(n * n, n * n);
  for (int p = 0; p < n; ++p)      // a
    for (int q = 0; q < n; ++q)    // b
      for (int r = 0; r < n; ++r)  // c
        for (int t = 0; t < n; ++t) // d
          s(n * p + q, n * r + t) = a(p, t) * b(q, r);
  return s;
}

int common_dim(const std::vector<FactorPair>& terms) {
  if (terms.empty()) throw DimensionError("empty factor family");
  for (const auto& t : terms) t.validate();
  const int n = terms.front().dim();
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (terms[k].dim() != n) {
      std::ostringstream msg;
      msg << "factor family mixes dimensions " << n << " and " << terms[k].dim()
          << " (term " << k << ")";
      throw DimensionError(msg.str());
    }
  return n;
}

} // namespace

LocalBraidOperator construct_from_pair(const FactorPair& pair) {
  pair.validate();
  return LocalBraidOperator(pair.dim(), pair.coefficient * pair_matrix(pair.a, pair.b));
}

CombiningReport check_combining_conditions(const std::vector<FactorPair>& terms,
                                           double tolerance) {
  common_dim(terms);
  CombiningReport report;
  report.tolerance_used = tolerance;
  const int m = static_cast<int>(terms.size());
  auto record = [&](CommutatorKind kind, int i, int j, const ComplexMatrix& x,
                    const ComplexMatrix& y) {
    const double norm = commutator(x, y).norm();
    report.per_pair.push_back({kind, i, j, norm});
    report.max_commutator_norm = std::max(report.max_commutator_norm, norm);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) record(CommutatorKind::AB, i, j, terms[i].a, terms[j].b);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      record(CommutatorKind::AA, i, j, terms[i].a, terms[j].a);
      record(CommutatorKind::BB, i, j, terms[i].b, terms[j].b);
    }
  report.passed = report.max_commutator_norm <= tolerance;
  return report;
}

std::string describe(const CombiningReport& report) {
  std::ostringstream out;
  out << "max commutator norm " << report.max_commutator_norm << " (tolerance "
      << report.tolerance_used << ")";
  for (const auto& e : report.per_pair) {
    if (e.norm <= report.tolerance_used) continue;
    const char lhs = e.kind == CommutatorKind::BB ? 'B' : 'A';
    const char rhs = e.kind == CommutatorKind::AA ? 'A' : 'B';
    out << "; [" << lhs << e.i + 1 << "," << rhs << e.j + 1 << "] = " << e.norm;
  }
  return out.str();
}

LocalBraidOperator combine(const std::vector<FactorPair>& terms,
                           const CombineOptions& options) {
  const int n = common_dim(terms);
  if (!options.unchecked) {
    auto report = check_combining_conditions(terms, options.tolerance);
    if (!report.passed)
      throw CombiningError("combine: factor family does not commute: " + describe(report),
                           std::move(report));
  }
  ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
  for (const auto& t : terms) s += t.coefficient * pair_matrix(t.a, t.b);
  return LocalBraidOperator(n, std::move(s));
}

BraidCheckReport verify_braid_relation(const LocalBraidOperator& s, double tolerance) {
  const int n = s.local_dim();
  const auto b1 = embed_site(s.matrix(), n, 1, 3);
  const auto b2 = embed_site(s.matrix(), n, 2, 3);
  BraidCheckReport report;
  report.braid_residual = (b1 * b2 * b1 - b2 * b1 * b2).norm();
  report.far_commutation_residual =
      commutator(embed_site(s.matrix(), n, 1, 4), embed_site(s.matrix(), n, 3, 4)).norm();
  report.tolerance_used = tolerance;
  report.passed = report.braid_residual <= tolerance &&
                  report.far_commutation_residual <= tolerance;
  return report;
}

FactorizationReport triple_product_factorization(const std::vector<FactorPair>& terms) {
  const int n = common_dim(terms);
  const auto s = combine(terms, {.unchecked = true});
  const auto b1 = embed_site(s.matrix(), n, 1, 3);
  const auto b2 = embed_site(s.matrix(), n, 2, 3);
  const ComplexMatrix left = b1 * b2 * b1;
  const ComplexMatrix right = b2 * b1 * b2;

  const int m = static_cast<int>(terms.size());
  const int n3 = n * n * n;
  ComplexMatrix left_fact = ComplexMatrix::Zero(n3, n3);
  ComplexMatrix right_fact = ComplexMatrix::Zero(n3, n3);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int l = 0; l < m; ++l) {
        const auto& tg = terms[g];
        const auto& th = terms[h];
        const auto& tl = terms[l];
        const Complex coeff = tg.coefficient * th.coefficient * tl.coefficient;
        const ComplexMatrix lb = tg.b * tl.a, la = tg.a * th.a, lc = th.b * tl.b;
        const ComplexMatrix rb = tg.a * tl.b, ra = th.a * tl.a, rc = tg.b * th.b;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
              for (int d = 0; d < n; ++d)
                for (int e = 0; e < n; ++e)
                  for (int f = 0; f < n; ++f) {
                    const int row = (a * n + b) * n + c;
                    const int col = (d * n + e) * n + f;
                    left_fact(row, col) += coeff * lb(b, e) * la(a, f) * lc(c, d);
                    right_fact(row, col) += coeff * rb(b, e) * ra(a, f) * rc(c, d);
                  }
      }
  return {max_abs_diff(left, left_fact), max_abs_diff(right, right_fact),
          max_abs_diff(left_fact, right_fact)};
}

FactorizationReport triple_product_factorization(const FactorPair& pair) {
  return triple_product_factorization(std::vector<FactorPair>{pair});
}

} // namespace braidkit
