#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace graphnorm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Dense complex matrix validated to be Hermitian at construction.
/// Carrier for the Gram matrices assembled throughout the library.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix entries, double tol = 1e-12);

  const Matrix& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

struct EigResult {
  Eigen::VectorXd eigenvalues;  // sorted descending
  Matrix eigenvectors;          // columns match eigenvalue order
};

EigResult hermitian_eig(const HermitianMatrix& m);

/// Coefficient matrix W of an orthonormal basis expressed in a spanning
/// family with Gram matrix G: W^H * G * W = I on the retained directions.
struct FrameCoefficients {
  Matrix weights;  // n_vectors x n_directions
  Eigen::Index n_vectors() const { return weights.rows(); }
  Eigen::Index n_directions() const { return weights.cols(); }
};

/// Global (eigenvalue-based) orthonormalization of a spanning family given
/// only its Gram matrix. Directions with eigenvalue <= rank_tol * lambda_max
/// are dropped, so the number of columns is the numerical rank.
FrameCoefficients orthonormalize_from_gram(const HermitianMatrix& gram,
                                           double rank_tol = 1e-10);

/// Rank-tolerant pseudo-inverse of a positive semidefinite matrix.
Matrix pseudo_inverse_psd(const HermitianMatrix& gram, double rank_tol = 1e-10);

/// Orthonormal basis (columns) of the numerical nullspace of a positive
/// semidefinite matrix: eigenvectors with eigenvalue <= rank_tol * lambda_max.
Matrix nullspace_psd(const HermitianMatrix& m, double rank_tol = 1e-10);

/// Spectral norm of P_U - P_V where U, V are the subspaces spanned by the
/// indexed subsets of a family with joint Gram matrix g_joint. The difference
/// of the projections vanishes on the orthogonal complement of the joint
/// span, so working inside the span is exact. Result clamped to [0, 1].
double projection_difference_norm(const HermitianMatrix& g_joint,
                                  const std::vector<int>& idx_u,
                                  const std::vector<int>& idx_v,
                                  double rank_tol = 1e-10);

}  // namespace graphnorm
