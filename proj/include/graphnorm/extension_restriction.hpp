#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "graphnorm/probes.hpp"
#include "graphnorm/span_family.hpp"

namespace graphnorm {

constexpr double kMembershipTol = 1e-9;

/// A_M: D(A) + {A* phi : phi in M} -> H, f + A* phi |-> A f - phi.
/// Well-defined when M passes condition_precloscon (checked at
/// construction).
template <class Model>
class ExtensionOperator {
 public:
  using Vector = typename Model::Vector;

  explicit ExtensionOperator(SpanFamily<Model> m) : family_(std::move(m)) {
    const ConditionCheck<Model> check = condition_precloscon(family_);
    if (!check.ok) {
      throw std::invalid_argument("ExtensionOperator: span family violates the "
                                  "well-definedness condition (" + check.violation + ")");
    }
  }

  const SpanFamily<Model>& family() const { return family_; }
  const Model& model() const { return family_.model(); }

  /// A f - sum_i c_i phi_i for f in D(A).
  Vector apply(const Vector& f, const Eigen::VectorXcd& c) const {
    if (static_cast<std::size_t>(c.size()) != family_.size()) {
      throw std::invalid_argument("ExtensionOperator::apply: coefficient size mismatch");
    }
    Vector out = model().apply_A(f);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (c(i) != Complex{0.0, 0.0}) {
        out = out - (c(i) * family_.generators()[static_cast<std::size_t>(i)]);
      }
    }
    return out;
  }

  struct Decomposition {
    Vector dom_a_part;            // f in D(A)
    Eigen::VectorXcd coefficients;  // phi = sum c_i phi_i
  };

  /// Splits h = f + A*(sum c_i phi_i) with f in D(A), or reports that h is
  /// not in D(A_M). The coefficients solve the jump/exponent cancellation
  /// system; membership of the remainder is then verified symbolically.
  std::optional<Decomposition> decompose(const Vector& h) const {
    const auto k = static_cast<Eigen::Index>(family_.size());
    std::vector<Vector> stacked;
    stacked.reserve(family_.size() + 1);
    for (const Vector& g : family_.generators()) stacked.push_back(model().apply_Astar(g));
    stacked.push_back(h);
    const Eigen::MatrixXcd all = model().dom_A_obstruction_matrix(stacked);
    const Eigen::MatrixXcd j = all.leftCols(k);
    const Eigen::VectorXcd b = all.col(k);
    Eigen::VectorXcd c;
    if (k == 0 || j.rows() == 0) {
      c = Eigen::VectorXcd::Zero(k);
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
      svd.setThreshold(family_.rank_tol());
      c = svd.solve(b);
    }
    if (j.rows() > 0) {
      const double residual = (j * c - b).norm();
      if (residual > kMembershipTol * (1.0 + b.norm())) return std::nullopt;
    }
    Vector remainder = h;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (c(i) != Complex{0.0, 0.0}) {
        remainder = remainder - (c(i) * stacked[static_cast<std::size_t>(i)]);
      }
    }
    if (!model().in_dom_A(remainder)) return std::nullopt;
    return Decomposition{std::move(remainder), std::move(c)};
  }

 private:
  SpanFamily<Model> family_;
};

/// C_M: the restriction of A* to the graph-orthogonal complement of M.
template <class Model>
class RestrictionOperator {
 public:
  using Vector = typename Model::Vector;

  explicit RestrictionOperator(SpanFamily<Model> m) : family_(std::move(m)) {}

  const SpanFamily<Model>& family() const { return family_; }
  const Model& model() const { return family_.model(); }

  struct Membership {
    bool member = false;
    Eigen::VectorXcd residuals;  // graph_inner(phi_i, f)
    double scale = 1.0;
  };

  Membership membership(const Vector& f) const {
    if (!model().in_dom_Astar(f)) {
      throw std::invalid_argument("RestrictionOperator: vector is not in D(A*)");
    }
    Membership out;
    out.residuals.resize(static_cast<Eigen::Index>(family_.size()));
    for (Eigen::Index i = 0; i < out.residuals.size(); ++i) {
      out.residuals(i) = model().graph_inner(family_.generators()[static_cast<std::size_t>(i)], f);
    }
    out.scale = 1.0 + model().graph_norm(f);
    out.member = out.residuals.size() == 0 ||
                 out.residuals.cwiseAbs().maxCoeff() <= kMembershipTol * out.scale;
    return out;
  }

  /// Removes the graph projection onto M; the result lies in D(C_M).
  Vector project_into_domain(const Vector& g) const {
    const GraphProjection proj = graph_project(family_, g);
    Vector out = g;
    for (Eigen::Index i = 0; i < proj.coefficients.size(); ++i) {
      if (proj.coefficients(i) != Complex{0.0, 0.0}) {
        out = out - (proj.coefficients(i) * family_.generators()[static_cast<std::size_t>(i)]);
      }
    }
    return out;
  }

  Vector apply(const Vector& f) const {
    const Membership m = membership(f);
    if (!m.member) {
      throw std::invalid_argument("RestrictionOperator::apply: vector is not in D(C_M)");
    }
    return model().apply_Astar(f);
  }

 private:
  SpanFamily<Model> family_;
};

/// Max relative defect of <g, A_M u> = <C_M g, u> over deterministic sample
/// pairs u in D(A_M), g in D(C_M).
template <class Model>
double adjoint_duality_check(const SpanFamily<Model>& m, int n_samples, std::uint64_t seed) {
  using Vector = typename Model::Vector;
  const Model& model = m.model();
  const ExtensionOperator<Model> ext(m);
  const RestrictionOperator<Model> restr(m);
  const std::vector<Vector> dict_a = model.dictionary_dom_A();
  const std::vector<Vector> dict_astar = model.dictionary_dom_Astar();
  if (dict_a.empty() || dict_astar.empty()) {
    throw std::runtime_error("adjoint_duality_check: empty probe dictionary");
  }
  Lcg rng(seed);
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const Vector f = random_combination<Vector>(dict_a, 3, rng);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(m.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.complex_box();
    Vector u = f;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      u = u + (c(i) * model.apply_Astar(m.generators()[static_cast<std::size_t>(i)]));
    }
    const Vector au = ext.apply(f, c);

    const Vector g = restr.project_into_domain(random_combination<Vector>(dict_astar, 3, rng));
    const Vector cg = model.apply_Astar(g);

    const Complex lhs = model.inner(g, au);
    const Complex rhs = model.inner(cg, u);
    const double scale = (1.0 + model.ambient_norm(g) + model.ambient_norm(cg)) *
                         (1.0 + model.ambient_norm(u) + model.ambient_norm(au));
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

template <class Model>
struct DensityDecision {
  bool dense = true;
  std::optional<typename Model::Vector> witness;  // (1 + A A*) phi for the violating phi
  double witness_orthogonality = 0.0;             // max |<w, sample>| / scale over domain samples
  std::string violation;
};

/// Thm-2.9 style decision for finite-dimensional M, with the explicit
/// orthogonality witness in the non-dense case.
template <class Model>
DensityDecision<Model> density_decision(const SpanFamily<Model>& m, int n_witness_samples = 32,
                                        std::uint64_t seed = 20240901) {
  using Vector = typename Model::Vector;
  const Model& model = m.model();
  DensityDecision<Model> out;
  const ConditionCheck<Model> check = condition_precloscon(m);
  if (check.ok) return out;
  out.dense = false;
  out.violation = check.violation;
  const Vector& phi = *check.witness;
  Vector w;
  if (check.violation == "kernel-intersection") {
    w = phi;  // A* phi = 0, so (1 + A A*) phi = phi
  } else {
    w = phi + model.apply_A(model.apply_Astar(phi));
  }
  if (model.ambient_norm(w) <= 1e-12) {
    throw std::runtime_error("density_decision: witness (1 + A A*) phi vanished");
  }
  out.witness = w;

  const RestrictionOperator<Model> restr(m);
  const std::vector<Vector> dict = model.dictionary_dom_Astar();
  Lcg rng(seed);
  double worst = 0.0;
  const double wnorm = model.ambient_norm(w);
  for (int s = 0; s < n_witness_samples; ++s) {
    const Vector g = restr.project_into_domain(random_combination<Vector>(dict, 3, rng));
    const double scale = wnorm * (1.0 + model.ambient_norm(g));
    worst = std::max(worst, std::abs(model.inner(w, g)) / scale);
  }
  out.witness_orthogonality = worst;
  return out;
}

/// Reconstructs M from the extension operator inside the joint span of the
/// probe dictionary and the generators: vectors orthogonal (in the graph
/// geometry) to every adjoint-pairing defect of A_M form D(A_M^*), and M is
/// recovered as their graph-orthogonal complement.
template <class Model>
SpanFamily<Model> recover_parameter(const ExtensionOperator<Model>& ext) {
  using Vector = typename Model::Vector;
  const SpanFamily<Model>& m = ext.family();
  const Model& model = m.model();

  std::vector<Vector> probes;
  for (const Vector& v : model.dictionary_dom_Astar()) {
    if (model.in_dom_Astar(v)) probes.push_back(v);
  }
  for (const Vector& g : m.generators()) probes.push_back(g);
  const auto n = static_cast<Eigen::Index>(probes.size());
  const auto k = static_cast<Eigen::Index>(m.size());

  std::vector<Vector> probe_images;
  probe_images.reserve(probes.size());
  for (const Vector& q : probes) probe_images.push_back(model.apply_Astar(q));

  Matrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Complex g = model.inner(probes[static_cast<std::size_t>(i)],
                                    probes[static_cast<std::size_t>(j)]) +
                        model.inner(probe_images[static_cast<std::size_t>(i)],
                                    probe_images[static_cast<std::size_t>(j)]);
      gram(i, j) = g;
      gram(j, i) = std::conj(g);
    }
  }
  const FrameCoefficients frame =
      orthonormalize_from_gram(HermitianMatrix(0.5 * (gram + gram.adjoint().eval())),
                               m.rank_tol());
  const Eigen::Index r = frame.n_directions();

  // adjoint-pairing defects of the domain additions u_j = A* phi_j, read off
  // from the operator's action: defect_j(w) = <w, A_M u_j> - <A* w, u_j>
  std::vector<Vector> action;  // A_M u_j
  for (Eigen::Index jj = 0; jj < k; ++jj) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(k);
    e(jj) = Complex{1.0, 0.0};
    action.push_back(ext.apply(Vector{}, e));
  }
  std::vector<Vector> additions;  // u_j
  for (const Vector& g : m.generators()) additions.push_back(model.apply_Astar(g));

  Eigen::MatrixXcd defect(k, n);
  for (Eigen::Index jj = 0; jj < k; ++jj) {
    for (Eigen::Index i = 0; i < n; ++i) {
      defect(jj, i) = model.inner(probes[static_cast<std::size_t>(i)],
                                  action[static_cast<std::size_t>(jj)]) -
                      model.inner(probe_images[static_cast<std::size_t>(i)],
                                  additions[static_cast<std::size_t>(jj)]);
    }
  }
  // in orthonormal coordinates; defects are antilinear in the probe argument
  const Eigen::MatrixXcd defect_on = defect * frame.weights.conjugate();  // k x r
  // recovered coordinates span the complement of the defect nullspace,
  // i.e. the range of defect_on^T
  const Eigen::MatrixXcd basis = defect_on.transpose();  // r x k
  if (k == 0) return SpanFamily<Model>(m.model_ptr(), {}, m.rank_tol());
  const Matrix basis_gram = basis.adjoint() * basis;
  const FrameCoefficients row_frame = orthonormalize_from_gram(
      HermitianMatrix(0.5 * (basis_gram + basis_gram.adjoint().eval())), m.rank_tol());
  const Eigen::MatrixXcd coords = basis * row_frame.weights;  // r x k'

  std::vector<Vector> recovered;
  for (Eigen::Index col = 0; col < coords.cols(); ++col) {
    const Eigen::VectorXcd in_probe_basis = frame.weights * coords.col(col);
    Vector v{};
    for (Eigen::Index i = 0; i < n; ++i) {
      if (in_probe_basis(i) != Complex{0.0, 0.0}) {
        v = v + (in_probe_basis(i) * probes[static_cast<std::size_t>(i)]);
      }
    }
    recovered.push_back(std::move(v));
  }
  (void)r;
  return SpanFamily<Model>(m.model_ptr(), std::move(recovered), m.rank_tol());
}

}  // namespace graphnorm
