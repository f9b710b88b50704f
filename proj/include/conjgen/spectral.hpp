#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conjgen/graph.hpp"

namespace conjgen {

enum class MatrixKind { adjacency, laplacian };
enum class EigenMethod { automatic, dense, iterative };

const char* to_string(MatrixKind k);
const char* to_string(EigenMethod m);

struct SpectrumReport {
  MatrixKind kind;
  EigenMethod method;  // dense or iterative, never automatic
  double tolerance;
  std::vector<double> values;     // descending
  std::vector<double> residuals;  // ||Mv - lambda v|| / ||v|| per value
  std::size_t iterations;         // 0 for dense

  /// (value, multiplicity) groups of values closer than `gap`.
  std::vector<std::pair<double, std::size_t>> grouped(double gap = 1e-6) const;
  /// Header `kind,k,eigenvalue,multiplicity,residual`, one row per group;
  /// the residual is the largest in the group.
  std::string to_csv(double gap = 1e-6) const;
};

inline constexpr std::size_t dense_limit = 1000;
inline constexpr std::size_t iteration_cap = 100'000;

/// Top k eigenvalues of the adjacency or Laplacian matrix. Dense Jacobi
/// rotations up to dense_limit vertices, block subspace iteration with
/// Rayleigh-Ritz above. For the adjacency matrix of a connected regular
/// graph the iterative method deflates the all-ones vector exactly unless
/// `deflate` is false. Throws NonConvergence when the iteration cap is reached.
SpectrumReport spectrum_topk(const SimpleGraph& g, MatrixKind kind, std::size_t k, double tol = 1e-8,
                             EigenMethod method = EigenMethod::automatic, bool deflate = true);

/// All eigenvalues (descending) and orthonormal eigenvectors (as columns,
/// vectors[j] belongs to values[j]) of a dense symmetric matrix.
struct DenseEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
DenseEigen jacobi_eigen(std::vector<std::vector<double>> a, double tol = 1e-12);

struct RegularSpectrumCheck {
  long long degree;
  double lambda1;
  double lambda2;
  bool ok;
  std::string detail;
};

/// For a connected regular graph: lambda_1 equals the degree and lambda_2 is
/// strictly smaller.
RegularSpectrumCheck check_regular_spectrum(const SimpleGraph& g, double tol = 1e-8);

}  // namespace conjgen
