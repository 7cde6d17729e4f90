#include "braidkit/catalog.hpp"
#include "braidkit/entanglement.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numbers>

using namespace braidkit;
using braidkit::test::Rng;
using std::numbers::pi;

namespace {

TwoQuditState basis_state(int d, int m, int n) {
  ComplexMatrix c = ComplexMatrix::Zero(d, d);
  c(m, n) = 1.0;
  return TwoQuditState(c);
}

// Concurrence straight from the definition, on the oracle spectrum.
double oracle_concurrence(const TwoQuditState& s) {
  const int d = s.local_dim();
  double purity = 0.0;
  for (double k : test::singular_values_oracle(s.coefficients())) purity += k * k * k * k;
  return std::sqrt(std::max(0.0, d / (d - 1.0) * (1.0 - purity)));
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) g[k] = a + (b - a) * k / (n - 1);
  return g;
}

} // namespace

TEST_CASE("TwoQuditState validation") {
  CHECK_THROWS_AS(TwoQuditState(ComplexMatrix::Zero(2, 3)), DimensionError);
  CHECK_THROWS_AS(TwoQuditState(ComplexMatrix::Zero(3, 3)), InvariantError);
  CHECK_THROWS_AS(TwoQuditState(2.0 * identity(1)), InvariantError);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(TwoQuditState{bad}, InvariantError);
}

TEST_CASE("generate_state") {
  const PhaseParams p{0.7, -0.4};
  const Complex q1 = std::polar(1.0, p.phi1);

  SUBCASE("theta = 0 returns the basis state") {
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) {
        const auto s = generate_state(0.0, p, m, n);
        CHECK(s.coefficients() == basis_state(3, m, n).coefficients());
      }
  }
  SUBCASE("psi_00 closed form") {
    for (double theta : {0.3, 1.1, 2.9}) {
      const Complex x = std::polar(1.0, theta);
      const Complex a = 1.0 / x - x, b = 2.0 * x + 1.0 / x;
      ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
      expected(0, 0) = b / 3.0;
      expected(1, 2) = expected(2, 1) = a / (3.0 * q1);
      CHECK(max_abs_diff(generate_state(theta, p, 0, 0).coefficients(), expected) < 1e-15);
    }
  }
  SUBCASE("psi_00 at pi/3 is maximally entangled") {
    ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
    expected(0, 0) = std::polar(1.0, pi / 6);
    expected(1, 2) = expected(2, 1) = -kI / q1;
    expected /= std::sqrt(3.0);
    CHECK(max_abs_diff(generate_state(pi / 3, p, 0, 0).coefficients(), expected) < 1e-15);
  }
  SUBCASE("labels out of range") {
    CHECK_THROWS_AS(generate_state(0.5, p, 3, 0), std::out_of_range);
    CHECK_THROWS_AS(generate_state(0.5, p, 0, -1), std::out_of_range);
  }
}

TEST_CASE("schmidt_coefficients") {
  const auto prod = schmidt_coefficients(basis_state(3, 0, 0));
  CHECK(prod.coefficients == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(prod.purity == 1.0);

  const auto max = schmidt_coefficients(generate_state(pi / 3, {}, 0, 0));
  for (double k : max.coefficients) CHECK(k == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(max.purity == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const auto quarter = schmidt_coefficients(generate_state(pi / 4, {1.0, 2.0}, 0, 0));
  CHECK(quarter.coefficients[0] == doctest::Approx(std::sqrt(5.0) / 3.0).epsilon(1e-14));
  CHECK(quarter.coefficients[1] == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(quarter.coefficients[2] == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
}

TEST_CASE("property: Schmidt spectrum matches the oracle") {
  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix c = test::random_matrix(rng, 3, 3);
    c /= c.norm();
    const TwoQuditState s(c);
    const auto got = schmidt_coefficients(s).coefficients;
    const auto want = test::singular_values_oracle(c);
    double sum = 0.0;
    for (int k = 0; k < 3; ++k) {
      REQUIRE(std::abs(got[k] - want[k]) < 1e-7); // oracle loses precision on tiny values
      sum += got[k] * got[k];
    }
    REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(std::abs(generalized_concurrence(s) - oracle_concurrence(s)) < 1e-7);
    REQUIRE(generalized_concurrence(s) >= 0.0);
    REQUIRE(generalized_concurrence(s) <= 1.0);
  }
}

TEST_CASE("generalized_concurrence") {
  CHECK(generalized_concurrence(basis_state(3, 1, 2)) == 0.0);
  CHECK(generalized_concurrence(generate_state(pi / 3, {}, 0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(generalized_concurrence(generate_state(pi / 4, {}, 0, 0)) ==
        doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
  CHECK(generalized_concurrence(TwoQuditState(identity(2) / std::sqrt(2.0))) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed_form_concurrence") {
  CHECK(closed_form_concurrence(0.0) == 0.0);
  CHECK(closed_form_concurrence(pi) < 1e-15);
  CHECK(closed_form_concurrence(pi / 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(closed_form_concurrence(2 * pi / 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(closed_form_concurrence(pi / 2) == doctest::Approx(0.9428090415820634).epsilon(1e-15));
  CHECK(closed_form_concurrence(pi / 4) == doctest::Approx(0.9428090415820634).epsilon(1e-15));
}

TEST_CASE("concurrence_sweep") {
  const auto grid = linspace(0.0, pi, 1001);
  const auto rows = concurrence_sweep(PhaseParams{0.4, 1.1}, grid);
  REQUIRE(rows.size() == grid.size());
  double worst = 0.0;
  std::size_t argmax = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].theta == grid[k]);
    REQUIRE(rows[k].concurrence_numeric.size() == 9);
    worst = std::max(worst, rows[k].max_abs_diff);
    if (rows[k].concurrence_closed > rows[argmax].concurrence_closed) argmax = k;
  }
  CHECK(worst < 1e-9);
  CHECK(rows.front().concurrence_numeric[4] < 1e-12);
  CHECK(rows.back().max_abs_diff < 1e-12);
  const double step = grid[1];
  const double at = rows[argmax].theta;
  CHECK((std::abs(at - pi / 3) <= step || std::abs(at - 2 * pi / 3) <= step));
  // not monotone on [0, pi/2]
  CHECK(closed_form_concurrence(pi / 2) < closed_form_concurrence(pi / 3));
}

TEST_CASE("property: spectra do not depend on the phases") {
  Rng rng(61);
  for (double theta : {0.35, pi / 3, 1.9}) {
    const auto ref = basis_images(qutrit_family({}), theta);
    for (int trial = 0; trial < 10; ++trial) {
      const auto states = basis_images(qutrit_family({test::random_angle(rng), test::random_angle(rng)}), theta);
      for (std::size_t k = 0; k < states.size(); ++k) {
        const auto a = schmidt_coefficients(states[k]).coefficients;
        const auto b = schmidt_coefficients(ref[k]).coefficients;
        for (std::size_t j = 0; j < a.size(); ++j) REQUIRE(std::abs(a[j] - b[j]) < 1e-10);
      }
    }
  }
}

TEST_CASE("pairwise_overlaps") {
  const auto fam = qutrit_family({0.2, 0.9});
  const auto nine = basis_images(fam, pi / 3);
  CHECK((pairwise_overlaps(nine) - identity(9)).norm() < 1e-10);
  for (const auto& s : nine) CHECK(generalized_concurrence(s) == doctest::Approx(1.0).epsilon(1e-9));

  const auto other = basis_images(fam, 0.5);
  CHECK((pairwise_overlaps(other) - identity(9)).norm() < 1e-10);

  const std::vector<TwoQuditState> one{basis_state(3, 0, 1)};
  CHECK(pairwise_overlaps(one) == identity(1));

  const std::vector<TwoQuditState> mixed{basis_state(3, 0, 1), basis_state(2, 0, 1)};
  CHECK_THROWS_AS(pairwise_overlaps(mixed), DimensionError);
}
