#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "splitgraph/graph.hpp"
#include "splitgraph/matrix.hpp"

namespace splitgraph {

/// Tolerance used to coalesce eigenvalues into multiplicities for reporting.
inline constexpr double kMergeTolerance = 1e-7;

class AsymmetricMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::size_t sweeps, double off_norm);
  std::size_t sweeps() const { return sweeps_; }
  double off_norm() const { return off_norm_; }

 private:
  std::size_t sweeps_;
  double off_norm_;
};

/// Descending multiset of real eigenvalues.
///
/// The raw values are kept as computed; merging only affects multiplicities(),
/// so energy() never depends on the merge tolerance.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values` descending.
  explicit Spectrum(std::vector<double> values, double merge_tolerance = kMergeTolerance);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double merge_tolerance() const { return merge_tolerance_; }

  double energy() const;
  double trace() const;
  double sum_of_squares() const;

  /// (value, multiplicity) groups; a value joins the current group when it
  /// lies within merge_tolerance of the group's first member.
  std::vector<std::pair<double, std::size_t>> multiplicities() const;

  /// Multiplicity of eigenvalues within `tol` of `value`.
  std::size_t count_near(double value, double tol) const;

 private:
  std::vector<double> values_;
  double merge_tolerance_ = kMergeTolerance;
};

struct EnergyValue {
  double value = 0.0;
};

struct JacobiOptions {
  /// Convergence when off(A) < relative_tolerance * (1 + ||A||_F).
  double relative_tolerance = 1e-12;
  std::size_t max_sweeps = 100;
  /// Inputs with |a_ij - a_ji| above this are rejected.
  double symmetry_tolerance = 1e-12;
};

/// Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
Spectrum eigenvalues_symmetric(const DenseMatrix& matrix, const JacobiOptions& options = {});

/// Householder tridiagonalization followed by implicit symmetric QR (Eigen).
/// Raises ConvergenceError if the QR iteration fails.
Spectrum eigenvalues_tridiagonal(const DenseMatrix& matrix, double symmetry_tolerance = 1e-12);

enum class EigenSolver { kTridiagonalQR, kJacobi };

std::string_view to_string(EigenSolver solver);
/// "qr" or "jacobi".
EigenSolver parse_eigen_solver(std::string_view name);

/// Solver behind adjacency_spectrum and energy. Process-wide; defaults to
/// kTridiagonalQR.
EigenSolver default_eigen_solver();
void set_default_eigen_solver(EigenSolver solver);

Spectrum symmetric_spectrum(const DenseMatrix& matrix, EigenSolver solver);

Spectrum adjacency_spectrum(const Graph& g);
Spectrum adjacency_spectrum(const Graph& g, EigenSolver solver);
EnergyValue energy(const Graph& g);

/// Multiset of pairwise products {mu_i * lambda_j}, sorted descending.
Spectrum structured_spectrum(const Spectrum& coefficient, const Spectrum& base);

/// Agreement tolerance for energies and spectra of an order-n graph:
/// n * 1e-10, floored at 1e-8.
double verification_tolerance(std::size_t order);

/// Elementwise comparison of two descending spectra.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

/// Largest elementwise difference; infinity when sizes differ.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

bool are_cospectral(const Graph& a, const Graph& b, double tol);

/// True when every value of `sub` can be matched to a distinct value of
/// `full` within `tol`.
bool is_submultiset(const Spectrum& sub, const Spectrum& full, double tol);

}  // namespace splitgraph
