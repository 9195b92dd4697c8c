#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "graphnorm/extension_restriction.hpp"

namespace graphnorm {

/// Bounded functional on H_{+1} carried by its Riesz representative:
/// l(f) = <representative, f>_{+1}. The abstract H_{-1} completion is never
/// materialized; representatives make every statement computable.
template <class Model>
struct MinusOneFunctional {
  typename Model::Vector representative;
};

/// ||v||_{-1} = sqrt(<v, (1 + A A*)^{-1} v>) for v in H.
template <class Model>
double norm_minus_one(const Model& model, const typename Model::Vector& v) {
  return std::sqrt(std::max(0.0, model.minus_one_inner(v, v).real()));
}

/// ||l||_{-1} = ||representative||_{+1}.
template <class Model>
double functional_norm(const Model& model, const MinusOneFunctional<Model>& l) {
  return model.graph_norm(l.representative);
}

template <class Model>
Complex functional_eval(const Model& model, const MinusOneFunctional<Model>& l,
                        const typename Model::Vector& f) {
  return model.graph_inner(l.representative, f);
}

template <class Model>
struct EmbeddingResult {
  bool in_h = false;
  std::optional<typename Model::Vector> embedding;  // (1 + A A*) representative
};

/// Whether the functional is realized by an H element, i.e. whether
/// (1 + A A*) representative lies in H (an H^2-type membership test).
template <class Model>
EmbeddingResult<Model> functional_in_H(const Model& model, const MinusOneFunctional<Model>& l) {
  EmbeddingResult<Model> out;
  if (!model.in_dom_AAstar(l.representative)) return out;
  out.in_h = true;
  out.embedding =
      l.representative + model.apply_A(model.apply_Astar(l.representative));
  return out;
}

/// A'_L: D = {f in D(A*) : l(f) = 0 for all l in L}, realized as C_M with M
/// spanned by the representatives.
template <class Model>
RestrictionOperator<Model> restriction_from_functionals(
    std::shared_ptr<const Model> model, std::span<const MinusOneFunctional<Model>> fns,
    double rank_tol = 1e-10) {
  std::vector<typename Model::Vector> gens;
  gens.reserve(fns.size());
  for (const auto& l : fns) gens.push_back(l.representative);
  return RestrictionOperator<Model>(SpanFamily<Model>(std::move(model), std::move(gens), rank_tol));
}

/// Dense-definedness of A'_L for finite L (where the -1-norm closure of L is
/// L itself): mirrors density_decision through the M <-> L dictionary.
template <class Model>
DensityDecision<Model> density_criterion(std::shared_ptr<const Model> model,
                                         std::span<const MinusOneFunctional<Model>> fns,
                                         double rank_tol = 1e-10, int n_witness_samples = 32,
                                         std::uint64_t seed = 20240901) {
  std::vector<typename Model::Vector> gens;
  gens.reserve(fns.size());
  for (const auto& l : fns) gens.push_back(l.representative);
  return density_decision(SpanFamily<Model>(std::move(model), std::move(gens), rank_tol),
                          n_witness_samples, seed);
}

}  // namespace graphnorm
