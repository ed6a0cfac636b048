#include "splitgraph/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

namespace splitgraph {
namespace {

std::atomic<EigenSolver> g_default_solver{EigenSolver::kTridiagonalQR};

std::string format_norm(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) sum += row[j] * row[j];
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

ConvergenceError::ConvergenceError(std::size_t sweeps, double off_norm)
    : std::runtime_error(sweeps == 0 ? std::string("symmetric QR iteration did not converge")
                                     : "Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                                           " sweeps (off-diagonal norm " + format_norm(off_norm) + ")"),
      sweeps_(sweeps),
      off_norm_(off_norm) {}

Spectrum::Spectrum(std::vector<double> values, double merge_tolerance)
    : values_(std::move(values)), merge_tolerance_(merge_tolerance) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::energy() const {
  double sum = 0.0;
  for (double v : values_) sum += std::abs(v);
  return sum;
}

double Spectrum::trace() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum;
}

double Spectrum::sum_of_squares() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return sum;
}

std::vector<std::pair<double, std::size_t>> Spectrum::multiplicities() const {
  std::vector<std::pair<double, std::size_t>> groups;
  std::size_t i = 0;
  while (i < values_.size()) {
    const double head = values_[i];
    std::size_t j = i;
    double sum = 0.0;
    while (j < values_.size() && head - values_[j] <= merge_tolerance_) sum += values_[j++];
    groups.emplace_back(sum / static_cast<double>(j - i), j - i);
    i = j;
  }
  return groups;
}

std::size_t Spectrum::count_near(double value, double tol) const {
  return static_cast<std::size_t>(std::count_if(
      values_.begin(), values_.end(), [&](double v) { return std::abs(v - value) <= tol; }));
}

Spectrum eigenvalues_symmetric(const DenseMatrix& matrix, const JacobiOptions& options) {
  const std::size_t n = matrix.dim();
  if (n == 0) throw std::invalid_argument("eigenvalues_symmetric: empty matrix");
  if (matrix.asymmetry() > options.symmetry_tolerance) {
    throw AsymmetricMatrixError("eigenvalues_symmetric: matrix is not symmetric");
  }
  std::vector<double> a(matrix.data().begin(), matrix.data().end());
  // Symmetrize exactly so that row and column reads agree.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (a[i * n + j] + a[j * n + i]);
      a[i * n + j] = a[j * n + i] = m;
    }
  }
  const double threshold = options.relative_tolerance * (1.0 + matrix.frobenius_norm());

  double off = off_diagonal_norm(a, n);
  std::size_t sweep = 0;
  while (off >= threshold) {
    if (sweep == options.max_sweeps) throw ConvergenceError(sweep, off);
    ++sweep;
    // Early sweeps only rotate the larger entries.
    const double skip_below = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        if (std::abs(apq) <= skip_below) continue;
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apq;
        a[p * n + p] = app - h;
        a[q * n + q] = aqq + h;
        a[p * n + q] = a[q * n + p] = 0.0;
        double* row_p = a.data() + p * n;
        double* row_q = a.data() + q * n;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = row_p[r];
          const double arq = row_q[r];
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          row_p[r] = new_rp;
          row_q[r] = new_rq;
          a[r * n + p] = new_rp;
          a[r * n + q] = new_rq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
  return Spectrum(std::move(values));
}

Spectrum eigenvalues_tridiagonal(const DenseMatrix& matrix, double symmetry_tolerance) {
  const std::size_t n = matrix.dim();
  if (n == 0) throw std::invalid_argument("eigenvalues_tridiagonal: empty matrix");
  if (matrix.asymmetry() > symmetry_tolerance) {
    throw AsymmetricMatrixError("eigenvalues_tridiagonal: matrix is not symmetric");
  }
  const auto dim = static_cast<Eigen::Index>(n);
  // Only the lower triangle is read.
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(
      matrix.data().data(), dim, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError(0, std::numeric_limits<double>::quiet_NaN());
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<double>(ev.data(), ev.data() + dim));
}

std::string_view to_string(EigenSolver solver) {
  return solver == EigenSolver::kJacobi ? "jacobi" : "qr";
}

EigenSolver parse_eigen_solver(std::string_view name) {
  if (name == "jacobi") return EigenSolver::kJacobi;
  if (name == "qr") return EigenSolver::kTridiagonalQR;
  throw std::invalid_argument("unknown eigensolver '" + std::string(name) + "'");
}

EigenSolver default_eigen_solver() { return g_default_solver.load(); }

void set_default_eigen_solver(EigenSolver solver) { g_default_solver.store(solver); }

Spectrum symmetric_spectrum(const DenseMatrix& matrix, EigenSolver solver) {
  return solver == EigenSolver::kJacobi ? eigenvalues_symmetric(matrix) : eigenvalues_tridiagonal(matrix);
}

Spectrum adjacency_spectrum(const Graph& g) { return adjacency_spectrum(g, default_eigen_solver()); }

Spectrum adjacency_spectrum(const Graph& g, EigenSolver solver) {
  return symmetric_spectrum(DenseMatrix::adjacency(g), solver);
}

EnergyValue energy(const Graph& g) {
  if (g.edge_count().value == 0) return EnergyValue{0.0};
  return EnergyValue{adjacency_spectrum(g).energy()};
}

Spectrum structured_spectrum(const Spectrum& coefficient, const Spectrum& base) {
  std::vector<double> products;
  products.reserve(coefficient.size() * base.size());
  for (double mu : coefficient.values()) {
    for (double lambda : base.values()) products.push_back(mu * lambda);
  }
  return Spectrum(std::move(products), base.merge_tolerance());
}

double verification_tolerance(std::size_t order) {
  return std::max(1e-8, static_cast<double>(order) * 1e-10);
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  return spectrum_distance(a, b) <= tol;
}

bool are_cospectral(const Graph& a, const Graph& b, double tol) {
  if (a.order() != b.order()) return false;
  return spectra_match(adjacency_spectrum(a), adjacency_spectrum(b), tol);
}

bool is_submultiset(const Spectrum& sub, const Spectrum& full, double tol) {
  std::vector<bool> used(full.size(), false);
  for (double v : sub.values()) {
    bool matched = false;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (!used[i] && std::abs(full[i] - v) <= tol) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace splitgraph
