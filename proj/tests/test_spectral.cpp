#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specpts/errors.hpp"
#include "specpts/graph.hpp"
#include "specpts/spectral.hpp"
#include "test_support.hpp"

using namespace specpts;

TEST_CASE("symmetric eigendecomposition") {
  SUBCASE("2x2") {
    Eigen::MatrixXd A(2, 2);
    A << 2, 1, 1, 2;
    const EigenPairs pairs = sym_eigen(A);
    CHECK(pairs.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pairs.values[1] == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("complete graph Laplacian") {
    const Eigen::VectorXd lam =
        sym_eigenvalues(graph_from_weights(3, Eigen::VectorXd::Ones(3)).laplacian);
    CHECK(lam[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(lam[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(lam[2] == doctest::Approx(3.0).epsilon(1e-14));
  }
  SUBCASE("characteristic polynomial oracle") {
    for (std::uint64_t seed : {10, 11, 12}) {
      const Eigen::MatrixXd A = testing::random_symmetric(6, seed);
      const Eigen::VectorXd lam = sym_eigenvalues(A);
      const Eigen::VectorXd roots = testing::charpoly_eigenvalues(A);
      CHECK((lam - roots).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
  SUBCASE("decomposition quality") {
    const Eigen::MatrixXd A = testing::random_symmetric(12, 77);
    const EigenPairs pairs = sym_eigen(A);
    const int n = 12;
    CHECK((pairs.vectors.transpose() * pairs.vectors -
           Eigen::MatrixXd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
    const double scale = A.cwiseAbs().maxCoeff();
    CHECK((A * pairs.vectors - pairs.vectors * pairs.values.asDiagonal())
              .cwiseAbs()
              .maxCoeff() <= 1e-8 * scale);
    for (int i = 0; i < n; ++i) {
      const double rayleigh = pairs.vectors.col(i).dot(A * pairs.vectors.col(i));
      CHECK(pairs.values[i] ==
            doctest::Approx(rayleigh).epsilon(1e-10));
    }
  }
  SUBCASE("rejects asymmetric input") {
    Eigen::MatrixXd A(2, 2);
    A << 1, 2, 0, 1;
    CHECK_THROWS_AS(sym_eigen(A), NonSymmetricMatrixError);
  }
}

TEST_CASE("invariant catalogue") {
  Eigen::VectorXd two(2);
  two << 0, 2;
  CHECK(invariant(two, InvariantId::of(Invariant::Variance)) ==
        doctest::Approx(1.0).epsilon(1e-14));

  Eigen::VectorXd three(3);
  three << 0, 1, 2;
  CHECK(invariant(three, InvariantId::interval(0.5, 1.5)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(invariant(three, InvariantId::of(Invariant::TraceL)) ==
        doctest::Approx(3.0));
  CHECK(invariant(three, InvariantId::of(Invariant::Lambda2)) == 1.0);
  CHECK(invariant(three, InvariantId::of(Invariant::LambdaMax)) == 2.0);
  CHECK(invariant(three, InvariantId::of(Invariant::CondNumber)) ==
        doctest::Approx(2.0));

  // equal-weight complete graphs at the simplex distances
  const double w3 = std::exp(-6.0);  // three points on the circle
  Eigen::VectorXd tri(3);
  tri << 0, 3 * w3, 3 * w3;
  CHECK(invariant(tri, InvariantId::of(Invariant::RTot)) ==
        doctest::Approx(2.0 * std::exp(6.0)).epsilon(1e-12));
  CHECK(invariant(tri, InvariantId::of(Invariant::RTot)) ==
        doctest::Approx(806.857586).epsilon(1e-6));

  const double w4 = std::exp(-16.0 / 3.0);  // tetrahedron on the 2-sphere
  Eigen::VectorXd tet(4);
  tet << 0, 4 * w4, 4 * w4, 4 * w4;
  CHECK(invariant(tet, InvariantId::of(Invariant::LambdaMax)) ==
        doctest::Approx(1.9311799975e-2).epsilon(1e-9));

  Eigen::VectorXd disconnected(3);
  disconnected << 0, 1e-14, 2;
  CHECK_THROWS_AS(invariant(disconnected, InvariantId::of(Invariant::RTot)),
                  DisconnectedGraphError);
  CHECK_THROWS_AS(
      invariant(disconnected, InvariantId::of(Invariant::CondNumber)),
      DisconnectedGraphError);

  CHECK_THROWS_AS(InvariantId::interval(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("squared Frobenius norm") {
  Eigen::VectorXd w(1);
  w << 0.7;
  CHECK(frobenius_sq(graph_from_weights(2, w).adjacency) ==
        doctest::Approx(2.0 * 0.49).epsilon(1e-14));

  const WeightedGraph tri = assemble(testing::triangle_on_circle(),
                                     WeightFunction::exp_decay(2.0));
  CHECK(frobenius_sq(tri.adjacency) ==
        doctest::Approx(6.0 * std::exp(-12.0)).epsilon(1e-12));

  // eigenvalue-square-sum oracle
  Eigen::Matrix2d cell;
  cell << 2.3, 0.0, 0.0, 2.1;
  const PointConfig config = random_config(FlatTorus{cell}, 5, 31);
  const WeightedGraph g = assemble(config, WeightFunction::exp_decay(2.0));
  const Eigen::VectorXd mu = sym_eigenvalues(g.adjacency);
  CHECK(frobenius_sq(g.adjacency) ==
        doctest::Approx(mu.squaredNorm()).epsilon(1e-9));
}

TEST_CASE("three-way trace agreement") {
  const PointConfig config = random_config(Sphere{3}, 7, 3);
  const WeightFunction f = WeightFunction::exp_decay(2.0);
  const WeightedGraph g = assemble(config, f);
  const double via_spectrum =
      invariant(sym_eigenvalues(g.laplacian), InvariantId::of(Invariant::TraceL));
  const double via_matrix = g.laplacian.trace();
  double via_kernel = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) via_kernel += f(pair_geometry(config, i, j).d2);
  CHECK(via_spectrum == doctest::Approx(via_matrix).epsilon(1e-9));
  CHECK(via_spectrum == doctest::Approx(via_kernel).epsilon(1e-9));
}

TEST_CASE("effective resistance equals the pseudoinverse trace") {
  const Eigen::VectorXd w = testing::random_positive_weights(21, 5);
  const WeightedGraph g = graph_from_weights(7, w);
  const double via_spectrum =
      invariant(sym_eigenvalues(g.laplacian), InvariantId::of(Invariant::RTot));
  const double via_pinv =
      7.0 * testing::laplacian_pseudoinverse(g.laplacian).trace();
  CHECK(via_spectrum == doctest::Approx(via_pinv).epsilon(1e-8));
}

TEST_CASE("shape in the weights") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int n = 8;
  EdgeIndex edges(n);
  auto lam_of = [&](const Eigen::VectorXd& w) {
    return sym_eigenvalues(graph_from_weights(n, w).laplacian);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd w1 =
        testing::random_positive_weights(edges.count(), 100 + trial);
    const Eigen::VectorXd w2 =
        testing::random_positive_weights(edges.count(), 200 + trial);
    const double t = unif(rng);
    const Eigen::VectorXd mix = t * w1 + (1.0 - t) * w2;
    const Eigen::VectorXd lam1 = lam_of(w1), lam2 = lam_of(w2),
                          lamm = lam_of(mix);

    // spectral radius convex, algebraic connectivity concave
    CHECK(lamm[n - 1] <=
          t * lam1[n - 1] + (1.0 - t) * lam2[n - 1] + 1e-10);
    CHECK(lamm[1] >= t * lam1[1] + (1.0 - t) * lam2[1] - 1e-10);

    // total effective resistance convex
    const auto rtot = [&](const Eigen::VectorXd& lam) {
      return invariant(lam, InvariantId::of(Invariant::RTot));
    };
    CHECK(rtot(lamm) <= t * rtot(lam1) + (1.0 - t) * rtot(lam2) + 1e-10);

    // single-weight monotonicity
    Eigen::VectorXd bumped = w1;
    bumped[trial % edges.count()] += 0.5;
    const Eigen::VectorXd lamb = lam_of(bumped);
    CHECK(lamb[1] >= lam1[1] - 1e-12);
    CHECK(lamb[n - 1] >= lam1[n - 1] - 1e-12);
    CHECK(rtot(lamb) <= rtot(lam1) + 1e-12);

    // quasi-convexity witness for the condition number
    const double alpha = lamm[n - 1] / lamm[1];
    const bool below = lam1[n - 1] / lam1[1] <= alpha;
    const bool witness = lam1[n - 1] - alpha * lam1[1] <= 0;
    if (std::abs(lam1[n - 1] - alpha * lam1[1]) > 1e-10)
      CHECK(below == witness);
  }
}
