#pragma once

#include <cmath>
#include <limits>
#include <memory>

#include "graphnorm/extension_restriction.hpp"

namespace graphnorm {

/// Symmetric restriction C_phi of a self-adjoint S cut out by one vector
/// phi in D(S) with S phi not in D(S); phi is normalized eagerly so that
/// ||(S + i) phi|| = ||(S - i) phi|| = 1. The defect vectors are (S +- i) phi
/// and the self-adjoint extensions form the one-phase family C_{phi,theta}.
template <class Model>
class RankOneRestrictionConfig {
 public:
  using Vector = typename Model::Vector;

  RankOneRestrictionConfig(std::shared_ptr<const Model> model, const Vector& phi_raw)
      : model_(std::move(model)) {
    if (!model_) throw std::invalid_argument("RankOneRestrictionConfig: null model");
    if (!model_->self_adjoint()) {
      throw std::invalid_argument("RankOneRestrictionConfig: reference operator must be self-adjoint");
    }
    if (!model_->in_dom_A(phi_raw)) {
      throw std::invalid_argument("RankOneRestrictionConfig: phi must lie in D(S)");
    }
    const Vector s_phi_raw = model_->apply_A(phi_raw);
    if (model_->in_dom_A(s_phi_raw)) {
      throw std::invalid_argument("RankOneRestrictionConfig: S phi must not lie in D(S)");
    }
    // ||(S + i) phi||^2 = ||phi||^2 + ||S phi||^2 for self-adjoint S
    const double norm = std::sqrt(std::pow(model_->ambient_norm(phi_raw), 2) +
                                  std::pow(model_->ambient_norm(s_phi_raw), 2));
    if (!(norm > 0.0)) throw std::invalid_argument("RankOneRestrictionConfig: phi must be nonzero");
    const Complex scale{1.0 / norm, 0.0};
    phi_ = scale * phi_raw;
    s_phi_ = scale * s_phi_raw;
    const Complex i{0.0, 1.0};
    n_plus_ = s_phi_ + (i * phi_);
    n_minus_ = s_phi_ - (i * phi_);
  }

  const std::shared_ptr<const Model>& model_ptr() const { return model_; }
  const Model& model() const { return *model_; }
  const Vector& phi() const { return phi_; }
  const Vector& s_phi() const { return s_phi_; }
  const Vector& n_plus() const { return n_plus_; }
  const Vector& n_minus() const { return n_minus_; }

  /// graph_inner(phi, f) residual scaled test for f in D(C_phi).
  bool in_restriction_domain(const Vector& f, double* residual = nullptr) const {
    const Complex r = model_->graph_inner(phi_, f);
    const double scale = 1.0 + model_->graph_norm(f);
    if (residual) *residual = std::abs(r);
    return std::abs(r) <= kMembershipTol * scale;
  }

 private:
  std::shared_ptr<const Model> model_;
  Vector phi_, s_phi_, n_plus_, n_minus_;
};

template <class Model>
struct DefectVectors {
  typename Model::Vector n_plus, n_minus;
  double kernel_residual_plus = 0.0;   // || C_phi^* n_+ - i n_+ ||
  double kernel_residual_minus = 0.0;  // || C_phi^* n_- + i n_- ||
};

/// (S +- i) phi with the defect-kernel identity C_phi^* n_pm = +- i n_pm
/// verified through the C_phi^* action f + lambda S phi |-> S f - lambda phi.
template <class Model>
DefectVectors<Model> defect_vectors(const RankOneRestrictionConfig<Model>& cfg) {
  using Vector = typename Model::Vector;
  const Model& model = cfg.model();
  const Complex i{0.0, 1.0};
  DefectVectors<Model> out{cfg.n_plus(), cfg.n_minus(), 0.0, 0.0};
  // n_+ = (i phi) + S phi decomposes with f = i phi, lambda = 1
  const Vector act_plus = model.apply_A(i * cfg.phi()) - cfg.phi();
  out.kernel_residual_plus = model.ambient_norm(act_plus - (i * cfg.n_plus()));
  const Vector act_minus = model.apply_A(Complex{0.0, -1.0} * cfg.phi()) - cfg.phi();
  out.kernel_residual_minus = model.ambient_norm(act_minus + (i * cfg.n_minus()));
  return out;
}

/// Domain vector of C_{phi,theta}: f + lambda ((S+i)phi + e^{i theta} (S-i)phi),
/// mapped to S f + i lambda ((S+i)phi - e^{i theta} (S-i)phi).
template <class Model>
typename Model::Vector extension_apply_theta(const RankOneRestrictionConfig<Model>& cfg,
                                             double theta, const typename Model::Vector& f,
                                             Complex lambda) {
  if (!cfg.in_restriction_domain(f)) {
    throw std::invalid_argument("extension_apply_theta: f is not in D(C_phi)");
  }
  const Complex i{0.0, 1.0};
  const Complex phase = std::exp(i * theta);
  return cfg.model().apply_A(f) +
         ((i * lambda) * (cfg.n_plus() - (phase * cfg.n_minus())));
}

/// (C_{phi,theta} + i)^{-1} psi = (S+i)^{-1} psi
///   + (1+e^{i theta})/(2i) <(S+i)phi, psi> (S-i)phi.
template <class Model>
typename Model::Vector rank_one_resolvent(const RankOneRestrictionConfig<Model>& cfg, double theta,
                                          const typename Model::Vector& psi) {
  const Complex i{0.0, 1.0};
  const Complex phase = std::exp(i * theta);
  const Complex coeff = (Complex{1.0, 0.0} + phase) / (2.0 * i);
  typename Model::Vector out = cfg.model().resolvent_at(+1, psi);
  const Complex pairing = cfg.model().inner(cfg.n_plus(), psi);
  const Complex weight = coeff * pairing;
  if (weight != Complex{0.0, 0.0}) out = out + (weight * cfg.n_minus());
  return out;
}

struct ResolventRoundTrip {
  bool decomposed = false;
  bool pass = false;
  Complex lambda{0.0, 0.0};
  double membership_residual = 0.0;  // |graph_inner(phi, f)| for the D(C_phi) part
  double residual = std::numeric_limits<double>::infinity();  // ||(C+i) r - psi||
};

/// Feeds the rank-one resolvent back through the von Neumann extension:
/// decomposes r = f + lambda w (w the theta defect combination), applies
/// C_{phi,theta}, adds i r and compares with psi.
template <class Model>
ResolventRoundTrip verify_resolvent_round_trip(const RankOneRestrictionConfig<Model>& cfg,
                                               double theta, const typename Model::Vector& psi,
                                               double eps = 1e-8) {
  using Vector = typename Model::Vector;
  const Model& model = cfg.model();
  const Complex i{0.0, 1.0};
  const Complex phase = std::exp(i * theta);
  ResolventRoundTrip out;

  const Vector r = rank_one_resolvent(cfg, theta, psi);

  // split r over D(S) + span{S phi}; the S phi coefficient fixes lambda
  SpanFamily<Model> family(cfg.model_ptr(), {cfg.phi()}, 1e-10);
  const ExtensionOperator<Model> ext(std::move(family));
  const auto dec = ext.decompose(r);
  if (!dec) return out;
  const Complex mu = dec->coefficients(0);
  const Complex one_plus_phase = Complex{1.0, 0.0} + phase;
  Complex lambda;
  if (std::abs(one_plus_phase) > 1e-12) {
    lambda = mu / one_plus_phase;
  } else {
    // theta = pi: w = 2 i phi lies in D(S); require no S phi component
    if (std::abs(mu) > 1e-9 * (1.0 + model.ambient_norm(r))) return out;
    const Vector w = cfg.n_plus() + (phase * cfg.n_minus());
    lambda = model.graph_inner(cfg.phi(), r) / model.graph_inner(cfg.phi(), w);
  }
  // f = r - lambda w assembled without the cancelling S phi component:
  // r = dom_a_part + mu S phi, w = (1+phase) S phi + i (1-phase) phi
  const Vector f =
      dec->dom_a_part - ((i * lambda * (Complex{1.0, 0.0} - phase)) * cfg.phi());
  double membership = 0.0;
  if (!cfg.in_restriction_domain(f, &membership)) {
    out.membership_residual = membership;
    return out;
  }
  out.decomposed = true;
  out.lambda = lambda;
  out.membership_residual = membership;
  const Vector image = extension_apply_theta(cfg, theta, f, lambda);
  out.residual = model.ambient_norm((image + (i * r)) - psi);
  out.pass = out.residual <= eps;
  return out;
}

}  // namespace graphnorm
