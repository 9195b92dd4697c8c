#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "graphnorm/seq_model.hpp"

namespace graphnorm {

/// Self-adjoint diagonal operator on l^2: (S f)_n = a(n) f_n for a real
/// polynomial symbol. Domain membership is a symbolic exponent rule on the
/// tail data, inner products are certified sums.
class DiagonalSequence {
 public:
  using Vector = SeqVector;

  explicit DiagonalSequence(DiagonalSymbol symbol, double eps = 1e-10);

  std::string name() const { return "diag"; }
  bool self_adjoint() const { return true; }
  const DiagonalSymbol& symbol() const { return symbol_; }
  double eps() const { return eps_; }

  bool in_dom_A(const Vector& f) const;
  bool in_dom_Astar(const Vector& f) const;
  bool in_dom_AAstar(const Vector& f) const;

  Vector apply_A(const Vector& f) const;
  Vector apply_Astar(const Vector& f) const;

  Complex inner(const Vector& f, const Vector& g) const;
  CertifiedValue inner_certified(const Vector& f, const Vector& g, double eps) const;
  Complex graph_inner(const Vector& f, const Vector& g) const;
  double ambient_norm(const Vector& f) const;
  double graph_norm(const Vector& f) const;

  /// {e_k : a(k) = 0}; polynomial symbols vanish at finitely many indices,
  /// all below the Cauchy root bound.
  std::vector<Vector> kernel_Astar_basis() const;

  /// Exact results for finitely supported inputs; tails leave the symbolic
  /// class, use the *_view evaluators for those.
  Vector solve_one_plus_AAstar(const Vector& f) const;
  Vector resolvent_at(int sign, const Vector& f) const;

  SeqScaledView solve_view(const Vector& f) const;
  SeqScaledView resolvent_view(int sign, const Vector& f) const;

  Complex minus_one_inner(const Vector& u, const Vector& v) const;

  /// Rows are the inadmissible tail signatures of S * vs[i]; a combination
  /// sum_i c_i vs[i] lies in D(S) exactly when the matrix annihilates c.
  Eigen::MatrixXcd dom_A_obstruction_matrix(std::span<const Vector> vs) const;

  std::vector<Vector> dictionary_dom_A() const;
  std::vector<Vector> dictionary_dom_Astar() const;

 private:
  DiagonalSymbol symbol_;
  double eps_;
};

}  // namespace graphnorm
