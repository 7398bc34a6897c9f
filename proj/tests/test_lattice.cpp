#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "specpts/errors.hpp"
#include "specpts/lattice.hpp"
#include "test_support.hpp"

using namespace specpts;

namespace {

/// Independent dispersion oracle: plain double sum over an index window,
/// no ring logic.
double omega_oracle(const Eigen::Matrix2d& basis, const WeightFunction& f,
                    const Eigen::Vector2d& xi, int window = 20) {
  double omega = 0.0;
  for (int m1 = -window; m1 <= window; ++m1)
    for (int m2 = -window; m2 <= window; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const Eigen::Vector2d u =
          basis.col(0) * double(m1) + basis.col(1) * double(m2);
      omega += f(u.squaredNorm()) * std::cos(xi.dot(u));
    }
  return omega;
}

const WeightFunction kExp2 = WeightFunction::exp_decay(2.0);

}  // namespace

TEST_CASE("parameter domain and bases") {
  CHECK(in_fundamental_domain(0.0, 1.0));
  CHECK(in_fundamental_domain(0.5, kTriangularB));
  CHECK_FALSE(in_fundamental_domain(0.5, 0.8));
  CHECK_FALSE(in_fundamental_domain(0.7, 1.2));

  const Eigen::Matrix2d square = basis_from_params(0.0, 1.0);
  CHECK((square - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-15);

  const Eigen::Matrix2d tri = basis_from_params(0.5, kTriangularB);
  CHECK(tri(0, 0) == doctest::Approx(1.07457).epsilon(1e-5));
  CHECK(tri(0, 1) == doctest::Approx(0.53729).epsilon(1e-5));
  CHECK(tri(1, 0) == 0.0);
  CHECK(tri(1, 1) == doctest::Approx(0.93060).epsilon(1e-5));
  CHECK(std::abs(tri.determinant() - 1.0) <= 1e-12);
  // column lengths 1/sqrt(b) and sqrt((a^2+b^2)/b)
  CHECK(tri.col(0).norm() ==
        doctest::Approx(1.0 / std::sqrt(kTriangularB)).epsilon(1e-14));
  CHECK(tri.col(1).norm() ==
        doctest::Approx(std::sqrt((0.25 + 0.75) / kTriangularB)).epsilon(1e-14));

  CHECK_THROWS_AS(basis_from_params(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("a and a+1 generate the same lattice") {
  for (double b : {1.1, 1.4}) {
    for (double a : {0.2, 0.5}) {
      const auto s1 = length_spectrum(basis_from_params(a, b), 5.0);
      const auto s2 = length_spectrum(basis_from_params(a + 1.0, b), 5.0);
      REQUIRE(s1.size() == s2.size());
      for (std::size_t i = 0; i < s1.size(); ++i)
        CHECK(s1[i] == doctest::Approx(s2[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("dual cell") {
  const Eigen::Matrix2d basis = basis_from_params(0.3, 1.2);
  const DualCell cell = dual_cell(basis);
  const Eigen::Matrix2d product = cell.reciprocal.transpose() * basis;
  CHECK((product - 2.0 * std::numbers::pi * Eigen::Matrix2d::Identity())
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK(cell.area == doctest::Approx(4.0 * std::numbers::pi * std::numbers::pi)
                         .epsilon(1e-12));
}

TEST_CASE("dispersion values") {
  const Eigen::Matrix2d square = basis_from_params(0.0, 1.0);
  const Eigen::Matrix2d tri = basis_from_params(0.5, kTriangularB);

  SUBCASE("operator norms at the origin") {
    const double sq0 = operator_norm(square, kExp2);
    const double tr0 = operator_norm(tri, kExp2);
    CHECK(sq0 ==
          doctest::Approx(omega_oracle(square, kExp2, {0, 0})).epsilon(1e-12));
    CHECK(sq0 == doctest::Approx(0.61631).epsilon(1e-4));
    CHECK(tr0 == doctest::Approx(omega_oracle(tri, kExp2, {0, 0})).epsilon(1e-12));
    CHECK(tr0 == doctest::Approx(0.60239).epsilon(1e-4));
    CHECK(tr0 < sq0);  // triangular minimizes the norm
  }
  SUBCASE("signed sum at the square zone corner") {
    const Eigen::Vector2d corner(std::numbers::pi, std::numbers::pi);
    const double value = dispersion(square, kExp2, corner);
    CHECK(value == doctest::Approx(omega_oracle(square, kExp2, corner))
                       .epsilon(1e-12));
    CHECK(value == doctest::Approx(-0.46710).epsilon(1e-4));
  }
  SUBCASE("inversion symmetry and the maximum at the origin") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> unif(-4.0, 4.0);
    const LatticeSum sum = truncated_lattice_sum(tri, kExp2);
    const double omega0 = sum.total;
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Vector2d xi(unif(rng), unif(rng));
      const double plus = dispersion(sum, xi);
      const double minus = dispersion(sum, -xi);
      CHECK(std::abs(plus - minus) <= 1e-12);
      CHECK(plus <= omega0 + 1e-12);  // Laplacian symbol stays nonnegative
    }
  }
  SUBCASE("kernels without enough decay are rejected") {
    CHECK_THROWS_AS(operator_norm(square, WeightFunction::one_minus_exp(2.0)),
                    CutoffError);
    CHECK_THROWS_AS(operator_norm(square, WeightFunction::neg_log()),
                    CutoffError);
    CHECK_THROWS_AS(operator_norm(square, WeightFunction::inverse_power(1.5)),
                    CutoffError);
  }
}

TEST_CASE("density of states") {
  const Eigen::Matrix2d tri = basis_from_params(0.5, kTriangularB);
  const DoSHistogram hist = dos(tri, kExp2, 256, 160);
  const double full = 4.0 * std::numbers::pi * std::numbers::pi;
  CHECK(hist.total_mass == doctest::Approx(full).epsilon(1e-12));
  CHECK(hist.mass.sum() == doctest::Approx(full).epsilon(1e-12));

  // mass-weighted mean is the vanishing first moment
  const double mean = hist.centers.dot(hist.mass) / hist.total_mass;
  CHECK(std::abs(mean) <= 1e-3 * operator_norm(tri, kExp2));

  SUBCASE("logarithmic peaks") {
    CHECK(hist.centers[van_hove_bin(hist)] ==
          doctest::Approx(-0.2).epsilon(0.15));
    CHECK(std::abs(hist.centers[van_hove_bin(hist)] - (-0.2)) <= 0.03);
    const DoSHistogram sq = dos(basis_from_params(0.0, 1.0), kExp2, 256, 160);
    CHECK(std::abs(sq.centers[van_hove_bin(sq)] - (-0.05)) <= 0.03);
  }
}

TEST_CASE("moments") {
  const Eigen::Matrix2d square = basis_from_params(0.0, 1.0);
  const Eigen::Matrix2d tri = basis_from_params(0.5, kTriangularB);
  const double full = 4.0 * std::numbers::pi * std::numbers::pi;

  CHECK(moment_w_closed(tri, kExp2, 0) == doctest::Approx(full).epsilon(1e-12));
  CHECK(moment_w_closed(tri, kExp2, 1) == 0.0);

  for (const Eigen::Matrix2d& basis : {square, tri}) {
    for (int p : {0, 1, 2}) {
      const double closed = moment_w_closed(basis, kExp2, p);
      const double quad = moment_w_quadrature(basis, kExp2, p, 256);
      const double scale =
          std::max(std::abs(closed), full * std::pow(0.62, p));
      CHECK(std::abs(quad - closed) <= 1e-4 * scale);
    }
    CHECK(std::abs(moment_l1_quadrature(basis, kExp2, 256) -
                   moment_l1_closed(basis, kExp2)) <=
          1e-4 * moment_l1_closed(basis, kExp2));
  }

  // triangular beats square for the norm, the second moment, and the
  // regularized Laplacian trace
  CHECK(moment_w_closed(tri, kExp2, 2) < moment_w_closed(square, kExp2, 2));
  CHECK(moment_l1_closed(tri, kExp2) < moment_l1_closed(square, kExp2));
  CHECK(moment_l1_closed(tri, kExp2) ==
        doctest::Approx(23.783).epsilon(2e-4));
  CHECK_THROWS_AS(moment_w_closed(tri, kExp2, 3), std::invalid_argument);
}

TEST_CASE("periodic truncations") {
  SUBCASE("constant degree matches the lattice sum") {
    const TorusGraph tg = torus_graph({0.5, kTriangularB}, 10, kExp2);
    CHECK(tg.graph.degrees.maxCoeff() - tg.graph.degrees.minCoeff() <= 1e-12);
    CHECK(tg.degree == doctest::Approx(0.602388).epsilon(1e-5));
    const Eigen::VectorXd lam = sym_eigenvalues(tg.graph.laplacian);
    CHECK(lam.mean() == doctest::Approx(tg.degree).epsilon(1e-12));
  }
  SUBCASE("plane waves diagonalize the square truncation") {
    const int N = 4;
    const TorusGraph tg = torus_graph({0.0, 1.0}, N, kExp2);
    // stencil DFT oracle: eigenvalues are cosine sums of one row of weights,
    // with displacements taken relative to site 0
    std::vector<double> oracle;
    for (int p = 0; p < N; ++p) {
      for (int q = 0; q < N; ++q) {
        double lam = 0.0;
        for (int r = 0; r < N * N; ++r)
          lam += tg.graph.adjacency(0, r) *
                 std::cos(2.0 * std::numbers::pi *
                          (p * double(r / N) / N + q * double(r % N) / N));
        oracle.push_back(lam);
      }
    }
    std::sort(oracle.begin(), oracle.end());
    const Eigen::VectorXd lam = sym_eigenvalues(tg.graph.adjacency);
    for (int i = 0; i < N * N; ++i)
      CHECK(lam[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
  }
  SUBCASE("N validation") {
    CHECK_THROWS_AS(torus_graph({0.0, 1.0}, 5, kExp2), std::invalid_argument);
    CHECK_THROWS_AS(torus_graph({0.0, 1.0}, 2, kExp2), std::invalid_argument);
  }
}

TEST_CASE("fundamental-domain sweep") {
  SweepGrid grid;
  grid.na = 11;
  grid.nb = 11;
  const auto nodes = sweep_fundamental_domain(
      InvariantId::of(Invariant::TraceL), false, kExp2, 10, grid);
  REQUIRE(!nodes.empty());
  for (const auto& node : nodes) CHECK(in_fundamental_domain(node.a, node.b));

  const auto best = std::min_element(
      nodes.begin(), nodes.end(),
      [](const SweepNode& x, const SweepNode& y) { return x.value < y.value; });
  CHECK(best->a == doctest::Approx(0.5));
  CHECK(best->b == doctest::Approx(kTriangularB));
  CHECK(best->value == doctest::Approx(100.0 * 0.602388).epsilon(1e-4));
}

TEST_CASE("long-range kernel dethrones the triangular lattice") {
  SweepGrid grid;
  grid.na = 11;
  grid.nb = 11;
  const auto nodes =
      sweep_fundamental_domain(InvariantId::of(Invariant::TraceL), false,
                               WeightFunction::exp_decay(0.2), 10, grid);
  double best = 1e300, triangular = 0.0;
  for (const auto& node : nodes) {
    best = std::min(best, node.value);
    if (std::abs(node.a - 0.5) < 1e-12 &&
        std::abs(node.b - kTriangularB) < 1e-12)
      triangular = node.value;
  }
  CHECK(triangular > best + 1.0);
}
