#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphnorm/dense_kernel.hpp"
#include "graphnorm/momentum_model.hpp"

namespace graphnorm {

/// Finite-dimensional subspace M of D(A*) together with its cached ambient
/// and graph Gram matrices. The lift {(phi, A* phi)} into H + H has the
/// graph Gram as its Gram matrix, so all projection geometry of the lifted
/// graphs reduces to these matrices.
template <class Model>
class SpanFamily {
 public:
  using Vector = typename Model::Vector;
  static constexpr std::size_t kMaxGenerators = 4096;

  SpanFamily(std::shared_ptr<const Model> model, std::vector<Vector> generators,
             double rank_tol = 1e-10)
      : model_(std::move(model)), generators_(std::move(generators)), rank_tol_(rank_tol) {
    if (!model_) throw std::invalid_argument("SpanFamily: null model");
    if (generators_.size() > kMaxGenerators) {
      throw std::invalid_argument("SpanFamily: generator cap (4096) exceeded");
    }
    std::vector<Vector> images;
    images.reserve(generators_.size());
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (!model_->in_dom_Astar(generators_[i])) {
        throw std::invalid_argument("SpanFamily: generator " + std::to_string(i) +
                                    " is not in D(A*)");
      }
      images.push_back(model_->apply_Astar(generators_[i]));
    }
    const auto n = static_cast<Eigen::Index>(generators_.size());
    Matrix ambient(n, n), graph(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) {
        const Complex a = model_->inner(generators_[i], generators_[j]);
        const Complex g = a + model_->inner(images[i], images[j]);
        ambient(i, j) = a;
        ambient(j, i) = std::conj(a);
        graph(i, j) = g;
        graph(j, i) = std::conj(g);
      }
    }
    gram_ambient_.emplace(std::move(ambient));
    gram_graph_.emplace(std::move(graph));
  }

  /// Construction from closed-form Gram matrices (translated-kernel fast
  /// path); the matrices must match the generators.
  static SpanFamily with_cached_grams(std::shared_ptr<const Model> model,
                                      std::vector<Vector> generators, Matrix ambient,
                                      Matrix graph, double rank_tol = 1e-10) {
    SpanFamily out(PrivateTag{}, std::move(model), std::move(generators), rank_tol);
    out.gram_ambient_.emplace(std::move(ambient));
    out.gram_graph_.emplace(std::move(graph));
    return out;
  }

  const Model& model() const { return *model_; }
  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  const std::vector<Vector>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const HermitianMatrix& gram_ambient() const { return *gram_ambient_; }
  const HermitianMatrix& gram_graph() const { return *gram_graph_; }
  double rank_tol() const { return rank_tol_; }

 private:
  struct PrivateTag {};
  SpanFamily(PrivateTag, std::shared_ptr<const Model> model, std::vector<Vector> generators,
             double rank_tol)
      : model_(std::move(model)), generators_(std::move(generators)), rank_tol_(rank_tol) {
    if (generators_.size() > kMaxGenerators) {
      throw std::invalid_argument("SpanFamily: generator cap (4096) exceeded");
    }
  }

  std::shared_ptr<const Model> model_;
  std::vector<Vector> generators_;
  std::optional<HermitianMatrix> gram_ambient_;
  std::optional<HermitianMatrix> gram_graph_;
  double rank_tol_;
};

/// Translated-kernel family on the momentum model with closed-form Grams.
inline SpanFamily<MomentumLine> kernel_span_family(std::shared_ptr<const MomentumLine> model,
                                                   std::span<const double> centers,
                                                   double rank_tol = 1e-10) {
  std::vector<PiecewiseExpPoly> gens;
  gens.reserve(centers.size());
  for (double c : centers) gens.push_back(PiecewiseExpPoly::kernel_phi(c));
  const auto n = static_cast<Eigen::Index>(centers.size());
  Matrix ambient(n, n), graph(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ambient(i, j) = MomentumLine::kernel_ambient_gram(centers[static_cast<std::size_t>(i)],
                                                        centers[static_cast<std::size_t>(j)]);
      graph(i, j) = MomentumLine::kernel_graph_gram(centers[static_cast<std::size_t>(i)],
                                                    centers[static_cast<std::size_t>(j)]);
    }
  }
  return SpanFamily<MomentumLine>::with_cached_grams(std::move(model), std::move(gens),
                                                     std::move(ambient), std::move(graph),
                                                     rank_tol);
}

struct GraphProjection {
  Eigen::VectorXcd coefficients;
  double distance = 0.0;
};

/// Best graph-norm approximation of f from M; the distance realizes the
/// closure-membership tests.
template <class Model>
GraphProjection graph_project(const SpanFamily<Model>& m, const typename Model::Vector& f) {
  if (!m.model().in_dom_Astar(f)) {
    throw std::invalid_argument("graph_project: vector is not in D(A*)");
  }
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = m.model().graph_inner(m.generators()[static_cast<std::size_t>(i)], f);
  }
  const Matrix pinv = pseudo_inverse_psd(m.gram_graph(), m.rank_tol());
  GraphProjection out;
  out.coefficients = pinv * v;
  const double norm_sq = std::pow(m.model().graph_norm(f), 2);
  const double projected = std::real(v.dot(out.coefficients));  // v^H c
  out.distance = std::sqrt(std::max(0.0, norm_sq - projected));
  return out;
}

/// Kato gap between the lifted graph subspaces of two span families over the
/// same model: the spectral norm of the difference of the orthogonal
/// projections onto {(phi, A* phi)}.
template <class Model>
double gap_metric(const SpanFamily<Model>& m1, const SpanFamily<Model>& m2) {
  if (m1.model_ptr() != m2.model_ptr()) {
    throw std::invalid_argument("gap_metric: span families live on different models");
  }
  const auto n1 = static_cast<Eigen::Index>(m1.size());
  const auto n2 = static_cast<Eigen::Index>(m2.size());
  Matrix joint(n1 + n2, n1 + n2);
  joint.topLeftCorner(n1, n1) = m1.gram_graph().entries();
  joint.bottomRightCorner(n2, n2) = m2.gram_graph().entries();
  std::vector<typename Model::Vector> img1, img2;
  for (const auto& g : m1.generators()) img1.push_back(m1.model().apply_Astar(g));
  for (const auto& g : m2.generators()) img2.push_back(m2.model().apply_Astar(g));
  for (Eigen::Index i = 0; i < n1; ++i) {
    for (Eigen::Index j = 0; j < n2; ++j) {
      const Complex cross =
          m1.model().inner(m1.generators()[static_cast<std::size_t>(i)],
                           m2.generators()[static_cast<std::size_t>(j)]) +
          m1.model().inner(img1[static_cast<std::size_t>(i)], img2[static_cast<std::size_t>(j)]);
      joint(i, n1 + j) = cross;
      joint(n1 + j, i) = std::conj(cross);
    }
  }
  std::vector<int> idx_u(static_cast<std::size_t>(n1)), idx_v(static_cast<std::size_t>(n2));
  for (Eigen::Index i = 0; i < n1; ++i) idx_u[static_cast<std::size_t>(i)] = static_cast<int>(i);
  for (Eigen::Index j = 0; j < n2; ++j) {
    idx_v[static_cast<std::size_t>(j)] = static_cast<int>(n1 + j);
  }
  const Matrix sym = 0.5 * (joint + joint.adjoint().eval());
  return projection_difference_norm(HermitianMatrix(sym), idx_u, idx_v,
                                    std::min(m1.rank_tol(), m2.rank_tol()));
}

template <class Model>
struct ConditionCheck {
  bool ok = true;
  std::string violation;  // "kernel-intersection" or "astar-image-in-domain"
  std::optional<typename Model::Vector> witness;  // unit graph norm element of M
};

/// Decides ker(A*) cap M = {0} and {A* phi : phi in M} cap D(A) = {0}
/// symbolically: both reduce to homogeneous linear systems (Gram nullspaces
/// and jump/exponent cancellation), with the violating combination returned
/// as witness. For finite-dimensional M this is also the graph-closure
/// condition.
template <class Model>
ConditionCheck<Model> condition_precloscon(const SpanFamily<Model>& m) {
  using Vector = typename Model::Vector;
  ConditionCheck<Model> out;
  if (m.size() == 0) return out;
  const Model& model = m.model();
  const auto k = static_cast<Eigen::Index>(m.size());

  auto materialize = [&](const Eigen::VectorXcd& c) {
    Vector w{};
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (c(i) != Complex{0.0, 0.0}) {
        w = w + (c(i) * m.generators()[static_cast<std::size_t>(i)]);
      }
    }
    return w;
  };

  // part 1: ker(A*) cap M
  const std::vector<Vector> kernel = model.kernel_Astar_basis();
  if (!kernel.empty()) {
    const auto p = static_cast<Eigen::Index>(kernel.size());
    Matrix joint(k + p, k + p);
    auto vec_at = [&](Eigen::Index i) -> const Vector& {
      return i < k ? m.generators()[static_cast<std::size_t>(i)]
                   : kernel[static_cast<std::size_t>(i - k)];
    };
    for (Eigen::Index i = 0; i < k + p; ++i) {
      for (Eigen::Index j = i; j < k + p; ++j) {
        const Complex a = model.inner(vec_at(i), vec_at(j));
        joint(i, j) = a;
        joint(j, i) = std::conj(a);
      }
    }
    const Matrix null_basis = nullspace_psd(HermitianMatrix(joint), m.rank_tol());
    if (null_basis.cols() > 0) {
      const Matrix c_part = null_basis.topRows(k);
      const Matrix quad = c_part.adjoint() * m.gram_ambient().entries() * c_part;
      const EigResult eig = hermitian_eig(HermitianMatrix(0.5 * (quad + quad.adjoint().eval())));
      const double scale = 1.0 + m.gram_ambient().entries().cwiseAbs().maxCoeff();
      if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) > m.rank_tol() * scale) {
        out.ok = false;
        out.violation = "kernel-intersection";
        Eigen::VectorXcd c = c_part * eig.eigenvectors.col(0);
        Vector w = materialize(c);
        out.witness = (Complex{1.0 / model.graph_norm(w), 0.0}) * w;
        return out;
      }
    }
  }

  // part 2: {A* phi} cap D(A)
  std::vector<Vector> images;
  for (const auto& g : m.generators()) images.push_back(model.apply_Astar(g));
  const Eigen::MatrixXcd obstruction = model.dom_A_obstruction_matrix(images);
  Matrix gram_images = m.gram_graph().entries() - m.gram_ambient().entries();
  Matrix null_basis;
  if (obstruction.rows() == 0) {
    null_basis = Matrix::Identity(k, k);
  } else {
    const Matrix jtj = obstruction.adjoint() * obstruction;
    null_basis = nullspace_psd(HermitianMatrix(0.5 * (jtj + jtj.adjoint().eval())), m.rank_tol());
  }
  if (null_basis.cols() > 0) {
    const Matrix quad = null_basis.adjoint() * gram_images * null_basis;
    const EigResult eig = hermitian_eig(HermitianMatrix(0.5 * (quad + quad.adjoint().eval())));
    const double scale = 1.0 + gram_images.cwiseAbs().maxCoeff();
    if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) > m.rank_tol() * scale) {
      out.ok = false;
      out.violation = "astar-image-in-domain";
      Eigen::VectorXcd c = null_basis * eig.eigenvectors.col(0);
      Vector w = materialize(c);
      out.witness = (Complex{1.0 / model.graph_norm(w), 0.0}) * w;
      return out;
    }
  }
  return out;
}

}  // namespace graphnorm
