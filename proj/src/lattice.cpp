#include "specpts/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "specpts/errors.hpp"
#include "specpts/parallel.hpp"

namespace specpts {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

bool in_fundamental_domain(double a, double b, double tol) {
  return b > 0 && a >= -tol && a <= 0.5 + tol && a * a + b * b >= 1.0 - tol;
}

Eigen::Matrix2d basis_from_params(double a, double b) {
  if (b <= 0) throw std::invalid_argument("lattice parameter b must be > 0");
  const double sqrt_b = std::sqrt(b);
  Eigen::Matrix2d basis;
  basis << 1.0 / sqrt_b, a / sqrt_b, 0.0, sqrt_b;
  return basis;
}

DualCell dual_cell(const Eigen::Matrix2d& basis) {
  DualCell cell;
  cell.reciprocal = kTwoPi * basis.inverse().transpose();
  cell.area = kTwoPi * kTwoPi / std::abs(basis.determinant());
  return cell;
}

LatticeSum truncated_lattice_sum(const Eigen::Matrix2d& basis,
                                 const WeightFunction& f, double tail_tol) {
  if (!f.decays_at_infinity())
    throw CutoffError("lattice sum needs a decaying kernel");
  constexpr int kMaxRing = 64;
  LatticeSum sum;
  for (int ring = 1; ring <= kMaxRing; ++ring) {
    double ring_max = 0.0;
    for (int m1 = -ring; m1 <= ring; ++m1) {
      for (int m2 = -ring; m2 <= ring; ++m2) {
        if (std::max(std::abs(m1), std::abs(m2)) != ring) continue;
        const Eigen::Vector2d u =
            basis.col(0) * double(m1) + basis.col(1) * double(m2);
        const double term = f(u.squaredNorm());
        sum.points.push_back(u);
        sum.terms.push_back(term);
        sum.total += term;
        ring_max = std::max(ring_max, std::abs(term));
      }
    }
    if (ring_max * 8.0 * (ring + 1) < tail_tol) return sum;
  }
  throw CutoffError("lattice sum did not reach the tail tolerance");
}

double dispersion(const LatticeSum& sum, const Eigen::Vector2d& xi) {
  double omega = 0.0;
  for (std::size_t i = 0; i < sum.points.size(); ++i)
    omega += sum.terms[i] * std::cos(xi.dot(sum.points[i]));
  return omega;
}

double dispersion(const Eigen::Matrix2d& basis, const WeightFunction& f,
                  const Eigen::Vector2d& xi) {
  return dispersion(truncated_lattice_sum(basis, f), xi);
}

double operator_norm(const Eigen::Matrix2d& basis, const WeightFunction& f) {
  return truncated_lattice_sum(basis, f).total;
}

Eigen::VectorXd dispersion_grid(const Eigen::Matrix2d& basis,
                                const WeightFunction& f, int grid_m) {
  if (grid_m < 1) throw std::invalid_argument("grid must be positive");
  const LatticeSum sum = truncated_lattice_sum(basis, f);
  const DualCell cell = dual_cell(basis);
  Eigen::VectorXd values(std::int64_t(grid_m) * grid_m);
  parallel_for(0, grid_m, [&](int j) {
    for (int k = 0; k < grid_m; ++k) {
      const Eigen::Vector2d frac((j + 0.5) / grid_m, (k + 0.5) / grid_m);
      values[std::int64_t(j) * grid_m + k] =
          dispersion(sum, cell.reciprocal * frac);
    }
  });
  return values;
}

DoSHistogram histogram(const Eigen::VectorXd& values, int bins, double lo,
                       double hi, double total_weight) {
  if (bins < 1 || !(hi > lo)) throw std::invalid_argument("bad histogram spec");
  DoSHistogram hist;
  hist.lo = lo;
  hist.hi = hi;
  hist.samples = static_cast<int>(values.size());
  hist.centers.resize(bins);
  const double width = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) hist.centers[b] = lo + (b + 0.5) * width;
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(bins);
  for (int i = 0; i < values.size(); ++i) {
    int b = static_cast<int>((values[i] - lo) / width);
    b = std::clamp(b, 0, bins - 1);  // the top edge belongs to the last bin
    ++counts[b];
  }
  const double per_sample = total_weight / values.size();
  hist.mass = counts.cast<double>() * per_sample;
  hist.total_mass = total_weight * (double(counts.sum()) / values.size());
  return hist;
}

DoSHistogram dos(const Eigen::Matrix2d& basis, const WeightFunction& f,
                 int grid_m, int bins) {
  const Eigen::VectorXd values = dispersion_grid(basis, f, grid_m);
  return histogram(values, bins, values.minCoeff(), values.maxCoeff(),
                   dual_cell(basis).area);
}

int van_hove_bin(const DoSHistogram& hist) {
  const double cutoff = hist.lo + 0.95 * (hist.hi - hist.lo);
  int best = 0;
  for (int b = 1; b < hist.centers.size(); ++b) {
    if (hist.centers[b] > cutoff) break;
    if (hist.mass[b] > hist.mass[best]) best = b;
  }
  return best;
}

double moment_w_closed(const Eigen::Matrix2d& basis, const WeightFunction& f,
                       int p) {
  const double area = dual_cell(basis).area;
  switch (p) {
    case 0:
      return area;
    case 1:
      return 0.0;
    case 2: {
      const LatticeSum sum = truncated_lattice_sum(basis, f);
      double sq = 0.0;
      for (double term : sum.terms) sq += term * term;
      return area * sq;
    }
    default:
      throw std::invalid_argument("closed-form moments exist for p in {0,1,2}");
  }
}

double moment_w_quadrature(const Eigen::Matrix2d& basis,
                           const WeightFunction& f, int p, int grid_m) {
  if (p < 0) throw std::invalid_argument("moment order must be >= 0");
  const Eigen::VectorXd values = dispersion_grid(basis, f, grid_m);
  double acc = 0.0;
  for (int i = 0; i < values.size(); ++i) acc += std::pow(values[i], p);
  return dual_cell(basis).area * acc / values.size();
}

double moment_l1_closed(const Eigen::Matrix2d& basis, const WeightFunction& f) {
  return dual_cell(basis).area * operator_norm(basis, f);
}

double moment_l1_quadrature(const Eigen::Matrix2d& basis,
                            const WeightFunction& f, int grid_m) {
  const Eigen::VectorXd values = dispersion_grid(basis, f, grid_m);
  const double omega0 = operator_norm(basis, f);
  return dual_cell(basis).area * (omega0 - values.mean());
}

TorusGraph torus_graph(const LatticeParams& params, int N,
                       const WeightFunction& f) {
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument("torus graph needs even N >= 4");
  const Eigen::Matrix2d basis = basis_from_params(params.a, params.b);
  TorusGraph out;
  out.N = N;
  out.params = params;
  out.config.manifold = FlatTorus{N * basis};
  out.config.points.resize(N * N, 2);
  int k = 0;
  for (int i = -N / 2; i < N / 2; ++i)
    for (int j = -N / 2; j < N / 2; ++j)
      out.config.points.row(k++) =
          (basis.col(0) * double(i) + basis.col(1) * double(j)).transpose();
  canonicalize(out.config);
  out.graph = assemble(out.config, f);
  out.degree = out.graph.degrees.mean();
  return out;
}

std::vector<SweepNode> sweep_fundamental_domain(const InvariantId& id,
                                                bool reciprocal,
                                                const WeightFunction& f, int N,
                                                const SweepGrid& grid) {
  if (grid.na < 2 || grid.nb < 2)
    throw std::invalid_argument("sweep grid needs at least 2x2 nodes");
  std::vector<std::pair<double, double>> nodes;
  for (int ia = 0; ia < grid.na; ++ia) {
    const double a =
        grid.a_lo + (grid.a_hi - grid.a_lo) * (double(ia) / (grid.na - 1));
    for (int ib = 0; ib < grid.nb; ++ib) {
      const double b =
          grid.b_lo + (grid.b_hi - grid.b_lo) * (double(ib) / (grid.nb - 1));
      if (in_fundamental_domain(a, b)) nodes.emplace_back(a, b);
    }
  }
  std::vector<SweepNode> result(nodes.size());
  parallel_for(0, static_cast<int>(nodes.size()), [&](int idx) {
    const auto [a, b] = nodes[idx];
    const TorusGraph tg = torus_graph({a, b}, N, f);
    double value;
    if (id.kind == Invariant::FrobeniusSqW) {
      value = frobenius_sq(tg.graph.adjacency);
    } else {
      value = invariant(sym_eigenvalues(tg.graph.laplacian), id);
    }
    if (reciprocal) value = 1.0 / value;
    result[idx] = {a, b, value};
  });
  return result;
}

std::vector<double> length_spectrum(const Eigen::Matrix2d& basis,
                                    double radius) {
  // Shortest basis produced here has length >= sqrt(b) with b <= ~2, so an
  // index window of radius/0.5 + 2 always covers the ball.
  const int window = static_cast<int>(radius / 0.5) + 2;
  std::vector<double> lengths;
  for (int m1 = -window; m1 <= window; ++m1) {
    for (int m2 = -window; m2 <= window; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const double len =
          (basis.col(0) * double(m1) + basis.col(1) * double(m2)).norm();
      if (len <= radius) lengths.push_back(len);
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace specpts
