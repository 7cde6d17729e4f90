#include "braidkit/su3.hpp"

#include <cmath>
#include <stdexcept>

namespace braidkit {

namespace {

ComplexMatrix unit(int i, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(i, j) = 1.0;
  return m;
}

double sign_of(SignConvention c) { return c == SignConvention::Lowering ? -1.0 : 1.0; }

} // namespace

SU3Basis gell_mann_basis() {
  SU3Basis basis;
  auto& l = basis.lambdas;
  l[0] = unit(0, 1) + unit(1, 0);
  l[1] = -kI * unit(0, 1) + kI * unit(1, 0);
  l[2] = unit(0, 0) - unit(1, 1);
  l[3] = unit(0, 2) + unit(2, 0);
  l[4] = -kI * unit(0, 2) + kI * unit(2, 0);
  l[5] = unit(1, 2) + unit(2, 1);
  l[6] = -kI * unit(1, 2) + kI * unit(2, 1);
  l[7] = (unit(0, 0) + unit(1, 1) - 2.0 * unit(2, 2)) / std::sqrt(3.0);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const ComplexMatrix comm = commutator(l[a], l[b]);
      for (int c = 0; c < 8; ++c)
        basis.structure[(a * 8 + b) * 8 + c] = ((comm * l[c]).trace() / (4.0 * kI)).real();
    }
  return basis;
}

std::array<ComplexMatrix, 8> LadderSet::cartesian(SignConvention convention) const {
  const double s = sign_of(convention);
  std::array<ComplexMatrix, 8> g;
  g[0] = (i_plus + i_minus) / 2.0;
  g[1] = (i_plus - i_minus) / (2.0 * kI);
  g[2] = i3;
  g[3] = (v_plus + v_minus) / 2.0;
  g[4] = s * (v_plus - v_minus) / (2.0 * kI);
  g[5] = (u_plus + u_minus) / 2.0;
  g[6] = (u_plus - u_minus) / (2.0 * kI);
  g[7] = std::sqrt(3.0) / 2.0 * y;
  return g;
}

LadderSet single_site_ladders(SignConvention convention) {
  const auto basis = gell_mann_basis();
  auto gen = [&](int mu) -> ComplexMatrix { return basis.lambda(mu) / 2.0; };
  const double s = sign_of(convention);
  LadderSet l;
  l.i_plus = gen(1) + kI * gen(2);
  l.i_minus = gen(1) - kI * gen(2);
  l.u_plus = gen(6) + kI * gen(7);
  l.u_minus = gen(6) - kI * gen(7);
  l.v_plus = gen(4) + s * kI * gen(5);
  l.v_minus = gen(4) - s * kI * gen(5);
  l.i3 = gen(3);
  l.y = 2.0 / std::sqrt(3.0) * gen(8);
  return l;
}

TwoSiteRealization two_site_realization(int k, SignConvention convention) {
  if (k < 1 || k > 3) throw std::out_of_range("two_site_realization: k must be 1, 2 or 3");
  const LadderSet s = single_site_ladders(convention);
  const auto id = identity(3);
  const ComplexMatrix i3_1 = kron(s.i3, id), i3_2 = kron(id, s.i3);
  const ComplexMatrix y_1 = kron(s.y, id), y_2 = kron(id, s.y);
  const ComplexMatrix i3i3 = i3_1 * i3_2, yy = y_1 * y_2;
  const ComplexMatrix cross = i3_1 * y_2 - y_1 * i3_2;

  TwoSiteRealization r{k, convention, {}};
  LadderSet& o = r.ops;
  switch (k) {
  case 1:
    o.i_plus = kron(s.i_plus, s.i_minus);
    o.i_minus = kron(s.i_minus, s.i_plus);
    o.u_plus = kron(s.u_plus, s.v_minus);
    o.u_minus = kron(s.u_minus, s.v_plus);
    o.v_plus = kron(s.v_plus, s.u_minus);
    o.v_minus = kron(s.v_minus, s.u_plus);
    o.i3 = (i3_1 - i3_2) / 3.0 + cross / 2.0;
    o.y = (y_1 + y_2) / 3.0 - 2.0 / 3.0 * i3i3 - yy / 2.0;
    break;
  case 2:
    o.i_plus = kron(s.u_plus, s.u_minus);
    o.i_minus = kron(s.u_minus, s.u_plus);
    o.u_plus = kron(s.v_plus, s.i_minus);
    o.u_minus = kron(s.v_minus, s.i_plus);
    o.v_plus = kron(s.i_plus, s.v_minus);
    o.v_minus = kron(s.i_minus, s.v_plus);
    o.i3 = 0.5 * (-(i3_1 - i3_2) / 3.0 + (y_1 - y_2) / 2.0 + cross);
    o.y = -((i3_1 + i3_2) / 3.0 + (y_1 + y_2) / 6.0 + 2.0 / 3.0 * i3i3 + yy / 2.0);
    break;
  case 3:
    o.i_plus = kron(s.v_plus, s.v_minus);
    o.i_minus = kron(s.v_minus, s.v_plus);
    o.u_plus = kron(s.i_plus, s.u_minus);
    o.u_minus = kron(s.i_minus, s.u_plus);
    o.v_plus = kron(s.u_plus, s.i_minus);
    o.v_minus = kron(s.u_minus, s.i_plus);
    o.i3 = 0.5 * (-(i3_1 - i3_2) / 3.0 - (y_1 - y_2) / 2.0 + cross);
    o.y = (i3_1 + i3_2) / 3.0 - (y_1 + y_2) / 6.0 - 2.0 / 3.0 * i3i3 - yy / 2.0;
    break;
  }
  return r;
}

double realization_commutator_deviation(const std::vector<TwoSiteRealization>& realizations,
                                        const SU3Basis& basis) {
  double worst = 0.0;
  std::vector<std::array<ComplexMatrix, 8>> gens;
  for (const auto& r : realizations) gens.push_back(r.generators());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (int l = 1; l <= 8; ++l)
        for (int m = 1; m <= 8; ++m) {
          ComplexMatrix expected = ComplexMatrix::Zero(9, 9);
          if (i == j)
            for (int n = 1; n <= 8; ++n) expected += kI * basis.f(l, m, n) * gens[i][n - 1];
          const ComplexMatrix got = commutator(gens[i][l - 1], gens[j][m - 1]);
          worst = std::max(worst, (got - expected).norm());
        }
  return worst;
}

double realization_commutator_check(SignConvention convention) {
  std::vector<TwoSiteRealization> all;
  for (int k = 1; k <= 3; ++k) all.push_back(two_site_realization(k, convention));
  return realization_commutator_deviation(all, gell_mann_basis());
}

ComplexMatrix operator_expansion_r(Complex x, double phi1, double phi2,
                                   SignConvention convention) {
  if (x == Complex{0.0, 0.0}) throw std::invalid_argument("spectral parameter must be nonzero");
  const Complex q1 = std::polar(1.0, phi1);
  const Complex q2 = std::polar(1.0, phi2);
  const Complex q = q1 * q2;
  const Complex a = 1.0 / x - x;
  const Complex b = 2.0 * x + 1.0 / x;
  const LadderSet r1 = two_site_realization(1, convention).ops;
  const LadderSet r2 = two_site_realization(2, convention).ops;
  const LadderSet r3 = two_site_realization(3, convention).ops;

  const ComplexMatrix ladder_sum =
      r1.i_plus + r1.i_minus + q * (r1.v_minus + r1.u_plus) + (r1.u_minus + r1.v_plus) / q +
      r2.i_plus + r2.i_minus + q1 * (r2.v_plus + r2.u_minus) + (r2.v_minus + r2.u_plus) / q1 +
      r3.i_plus + r3.i_minus + q2 * (r3.v_plus + r3.u_minus) + (r3.v_minus + r3.u_plus) / q2;
  return a / 3.0 * ladder_sum + b / 3.0 * identity(9);
}

} // namespace braidkit
