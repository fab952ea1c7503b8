#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncg/ncgraph.hpp"
#include "ncg/poly.hpp"
#include "ncg/surd.hpp"

namespace ncg {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };
const char* kind_name(MatrixKind k);

struct DenseSymMatrix {
  long n = 0;
  std::vector<double> a;  // row-major n*n
  double operator()(long i, long j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  double& operator()(long i, long j) { return a[static_cast<std::size_t>(i * n + j)]; }
  double frobenius_norm() const;
};

// Multiset of exact eigenvalues, values distinct, sorted descending.
struct ExactSpectrum {
  std::vector<std::pair<SurdValue, long>> entries;

  void add(const SurdValue& v, long mult);
  void canonicalize();
  long total() const;
  std::vector<double> expanded() const;  // descending
  SurdExpr sum() const;                  // trace
  std::string str() const;
  friend bool operator==(const ExactSpectrum& a, const ExactSpectrum& b) { return a.entries == b.entries; }
  friend bool operator!=(const ExactSpectrum& a, const ExactSpectrum& b) { return !(a == b); }
};

struct NumericSpectrum {
  std::vector<double> values;  // descending
  double grouping_tol = 1e-7;
  // Clusters within grouping_tol * spectral radius: (mean, multiplicity).
  std::vector<std::pair<double, long>> grouped() const;
};

struct EigenDecomposition {
  std::vector<double> values;   // unsorted, aligned with columns of vectors
  std::vector<double> vectors;  // row-major n*n, column k is the k-th eigenvector
  int sweeps = 0;
};

DenseSymMatrix matrix_of(const NCGraph& graph, MatrixKind kind);
DenseSymMatrix matrix_from_ints(const std::vector<long>& m, long n);
std::vector<long> integer_matrix_of(const NCGraph& graph, MatrixKind kind);

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol * ||m||_F. Throws NoConvergence after 100 sweeps.
EigenDecomposition jacobi_eigen(const DenseSymMatrix& m, double tol = 1e-14, bool want_vectors = false);
NumericSpectrum eigenvalues_sym(const DenseSymMatrix& m, double tol = 1e-14);

RationalPoly a_charpoly_multipartite(const MultipartiteShape& shape);
RationalPoly q_polynomial_multipartite(const MultipartiteShape& shape);
// Same spectra as exact_roots of the two polynomials above, computed from
// the factored form without expanding the degree-n polynomial.
std::optional<ExactSpectrum> a_spectrum_multipartite(const MultipartiteShape& shape);
std::optional<ExactSpectrum> q_spectrum_multipartite(const MultipartiteShape& shape);

ExactSpectrum laplacian_spectrum_clique_complement(const std::vector<long>& cliques);

// Rational roots by exhaustive divisor search, then square-free
// decomposition of the remainder; quadratic factors solved in surds.
// Absent when a factor of degree >= 3 (or a complex pair) remains.
std::optional<ExactSpectrum> exact_roots(const RationalPoly& p);

bool spectra_agree(const ExactSpectrum& exact, const NumericSpectrum& numeric, double tol);

}  // namespace ncg
