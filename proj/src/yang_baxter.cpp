#include "braidkit/yang_baxter.hpp"

#include <sstream>

namespace braidkit {

namespace {

constexpr double kProjectorRelTol = 1e-9;

void require_nonzero(Complex z, const char* what) {
  if (z == Complex{0.0, 0.0}) throw std::invalid_argument(std::string(what) + " must be nonzero");
}

void check_projector_law(const LocalBraidOperator& s, Complex kappa) {
  require_nonzero(kappa, "kappa");
  const ComplexMatrix& m = s.matrix();
  const ComplexMatrix sq = m * m;
  const double residual = (sq - kappa * m).norm();
  if (residual > kProjectorRelTol * sq.norm()) {
    std::ostringstream msg;
    msg << "S^2 is not a multiple of S: ||S^2 - kappa S||_F = " << residual
        << " with kappa = " << kappa;
    throw NotProjectorLike(msg.str());
  }
}

} // namespace

Complex detect_kappa(const LocalBraidOperator& s) {
  const ComplexMatrix& m = s.matrix();
  const double norm2 = m.squaredNorm();
  if (norm2 == 0.0) throw NotProjectorLike("S is the zero matrix");
  const ComplexMatrix sq = m * m;
  // <S, S^2>_F = sum conj(S_ij) (S^2)_ij
  const Complex k = m.conjugate().cwiseProduct(sq).sum() / norm2;
  if (k == Complex{0.0, 0.0}) throw NotProjectorLike("S^2 vanishes (kappa = 0)");
  check_projector_law(s, k);
  return k;
}

Complex spectral_g(Complex x, Complex kappa) {
  require_nonzero(x, "spectral parameter");
  require_nonzero(kappa, "kappa");
  return -(x - 1.0 / x) / (kappa * x);
}

RMatrixFamily::RMatrixFamily(LocalBraidOperator s)
    : s_(std::move(s)), kappa_(detect_kappa(s_)) {}

RMatrixFamily::RMatrixFamily(LocalBraidOperator s, Complex kappa)
    : s_(std::move(s)), kappa_(kappa) {
  check_projector_law(s_, kappa_);
}

ComplexMatrix evaluate_r(const RMatrixFamily& family, Complex x) {
  const Complex g = spectral_g(x, family.kappa());
  const ComplexMatrix& s = family.braid().matrix();
  ComplexMatrix r = g * s;
  r.diagonal().array() += 1.0;
  return x * r;
}

double check_ybe(const RMatrixFamily& family, Complex x, Complex y) {
  const int n = family.local_dim();
  auto r1 = [&](Complex z) { return embed_site(evaluate_r(family, z), n, 1, 3); };
  auto r2 = [&](Complex z) { return embed_site(evaluate_r(family, z), n, 2, 3); };
  const ComplexMatrix lhs = r1(x) * r2(x * y) * r1(y);
  const ComplexMatrix rhs = r2(y) * r1(x * y) * r2(x);
  return (lhs - rhs).norm();
}

UnitarityReport check_unitarity_family(const RMatrixFamily& family,
                                       std::span<const double> thetas) {
  UnitarityReport report;
  for (const double theta : thetas) {
    const Complex x = std::polar(1.0, theta);
    const ComplexMatrix r = evaluate_r(family, x);
    report.max_unitarity_defect =
        std::max(report.max_unitarity_defect, deviation_metrics(r).unitarity_defect);
    const ComplexMatrix adj = r.adjoint();
    report.max_adjoint_mismatch =
        std::max(report.max_adjoint_mismatch, max_abs_diff(adj, evaluate_r(family, 1.0 / x)));
  }
  return report;
}

} // namespace braidkit
