#include "graphnorm/dense_kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphnorm {

namespace {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square, got " +
                                std::to_string(entries_.rows()) + "x" +
                                std::to_string(entries_.cols()));
  }
  const double defect = max_abs(entries_ - entries_.adjoint().eval());
  if (defect > tol * (1.0 + max_abs(entries_))) {
    throw std::invalid_argument("HermitianMatrix: Hermitian defect " + std::to_string(defect) +
                                " exceeds tolerance");
  }
}

EigResult hermitian_eig(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigendecomposition failed");
  }
  // Eigen returns ascending order; the library contract is descending.
  const Eigen::Index n = m.dim();
  EigResult out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  (void)n;
  return out;
}

FrameCoefficients orthonormalize_from_gram(const HermitianMatrix& gram, double rank_tol) {
  const EigResult eig = hermitian_eig(gram);
  const Eigen::Index n = gram.dim();
  const double scale = max_abs(gram.entries());
  if (n > 0 && eig.eigenvalues(n - 1) < -1e-10 * std::max(1.0, scale)) {
    throw std::invalid_argument("orthonormalize_from_gram: not a Gram matrix (eigenvalue " +
                                std::to_string(eig.eigenvalues(n - 1)) + ")");
  }
  const double lambda_max = n > 0 ? std::max(eig.eigenvalues(0), 0.0) : 0.0;
  const double cutoff = rank_tol * lambda_max;
  Eigen::Index rank = 0;
  while (rank < n && eig.eigenvalues(rank) > cutoff && eig.eigenvalues(rank) > 0.0) ++rank;

  FrameCoefficients out;
  out.weights.resize(n, rank);
  for (Eigen::Index j = 0; j < rank; ++j) {
    out.weights.col(j) = eig.eigenvectors.col(j) / std::sqrt(eig.eigenvalues(j));
  }
  return out;
}

Matrix pseudo_inverse_psd(const HermitianMatrix& gram, double rank_tol) {
  const FrameCoefficients frame = orthonormalize_from_gram(gram, rank_tol);
  // G^+ = sum over retained directions of v v^H / lambda = W W^H.
  return frame.weights * frame.weights.adjoint();
}

Matrix nullspace_psd(const HermitianMatrix& m, double rank_tol) {
  const EigResult eig = hermitian_eig(m);
  const Eigen::Index n = m.dim();
  const double lambda_max = n > 0 ? std::max(eig.eigenvalues(0), 0.0) : 0.0;
  const double cutoff = rank_tol * lambda_max;
  Eigen::Index first_null = 0;
  while (first_null < n && eig.eigenvalues(first_null) > cutoff &&
         eig.eigenvalues(first_null) > 0.0) {
    ++first_null;
  }
  return eig.eigenvectors.rightCols(n - first_null);
}

double projection_difference_norm(const HermitianMatrix& g_joint, const std::vector<int>& idx_u,
                                  const std::vector<int>& idx_v, double rank_tol) {
  const Eigen::Index n = g_joint.dim();
  for (int i : idx_u) {
    if (i < 0 || i >= n) throw std::invalid_argument("projection_difference_norm: index out of range");
  }
  for (int i : idx_v) {
    if (i < 0 || i >= n) throw std::invalid_argument("projection_difference_norm: index out of range");
  }

  const FrameCoefficients joint = orthonormalize_from_gram(g_joint, rank_tol);
  const Eigen::Index r = joint.n_directions();
  if (r == 0) return 0.0;
  // Coordinates of the original family in the orthonormal basis of the span.
  const Matrix coords = joint.weights.adjoint() * g_joint.entries();  // r x n

  auto projector = [&](const std::vector<int>& idx) -> Matrix {
    Matrix cols(r, static_cast<Eigen::Index>(idx.size()));
    for (Eigen::Index j = 0; j < cols.cols(); ++j) cols.col(j) = coords.col(idx[j]);
    if (cols.cols() == 0) return Matrix::Zero(r, r);
    const HermitianMatrix sub_gram((cols.adjoint() * cols).eval());
    const FrameCoefficients frame = orthonormalize_from_gram(sub_gram, rank_tol);
    const Matrix q = cols * frame.weights;  // r x rank, orthonormal columns
    return q * q.adjoint();
  };

  const Matrix diff = projector(idx_u) - projector(idx_v);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("projection_difference_norm: eigendecomposition failed");
  }
  double norm = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    norm = std::max(norm, std::abs(solver.eigenvalues()(i)));
  }
  return std::clamp(norm, 0.0, 1.0);
}

}  // namespace graphnorm
