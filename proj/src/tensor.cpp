#include "braidkit/tensor.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace braidkit {

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return Eigen::kroneckerProduct(lhs, rhs).eval();
}

Eigen::Index ipow(Eigen::Index base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

ComplexMatrix embed_site(const ComplexMatrix& op, int local_dim, int site,
                         int num_sites) {
  if (local_dim < 1) throw DimensionError("embed_site: local dimension must be positive");
  const Eigen::Index pair = Eigen::Index(local_dim) * local_dim;
  if (op.rows() != pair || op.cols() != pair) {
    std::ostringstream msg;
    msg << "embed_site: operator is " << op.rows() << "x" << op.cols()
        << ", expected " << pair << "x" << pair;
    throw DimensionError(msg.str());
  }
  if (num_sites < 2 || site < 1 || site > num_sites - 1) {
    std::ostringstream msg;
    msg << "embed_site: site " << site << " out of range [1, " << num_sites - 1 << "]";
    throw std::out_of_range(msg.str());
  }
  const auto left = identity(ipow(local_dim, site - 1));
  const auto right = identity(ipow(local_dim, num_sites - site - 1));
  return kron(kron(left, op), right);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << "commutator: need equal square operands, got " << a.rows() << "x"
        << a.cols() << " and " << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
  return a * b - b * a;
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

DeviationMetrics deviation_metrics(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("deviation_metrics: matrix is not square");
  const ComplexMatrix adj = m.adjoint();
  return {(adj * m - identity(m.rows())).norm(), (m - adj).norm()};
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_finite(const ComplexMatrix& m, const std::string& what) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        std::ostringstream msg;
        msg << what << ": non-finite entry at row " << r << ", column " << c;
        throw InvariantError(msg.str());
      }
    }
}

} // namespace braidkit
