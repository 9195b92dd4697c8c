#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "graphnorm/pwexp.hpp"

namespace graphnorm {

/// The self-adjoint momentum operator on the line: A = A* = i d/dx with
/// domain H^1(R), realized on the piecewise exponential-polynomial class.
/// Domain membership is decided symbolically (empty jump reports plus
/// square-integrability flags), all inner products are closed forms.
class MomentumLine {
 public:
  using Vector = PiecewiseExpPoly;

  std::string name() const { return "momentum"; }
  bool self_adjoint() const { return true; }

  bool in_dom_A(const Vector& f) const;      // H^1
  bool in_dom_Astar(const Vector& f) const;  // H^1 (A = A*)
  bool in_dom_AAstar(const Vector& f) const; // H^2

  Vector apply_A(const Vector& f) const;     // i f'
  Vector apply_Astar(const Vector& f) const;

  Complex inner(const Vector& f, const Vector& g) const;
  Complex graph_inner(const Vector& f, const Vector& g) const;
  double ambient_norm(const Vector& f) const;
  double graph_norm(const Vector& f) const;

  std::vector<Vector> kernel_Astar_basis() const { return {}; }

  /// Solves g + A A* g = f, i.e. g - g'' = f, by exact convolution with the
  /// kernel (1/2) e^{-|x-y|}; the result stays in the class.
  Vector solve_one_plus_AAstar(const Vector& f) const;

  /// (A + sign*i)^{-1} f via the explicit integrating-factor solution.
  Vector resolvent_at(int sign, const Vector& f) const;

  /// <u, (1 + A A*)^{-1} v>
  Complex minus_one_inner(const Vector& u, const Vector& v) const;

  /// Jump-cancellation rows: a combination sum_i c_i vs[i] lies in D(A)
  /// exactly when this matrix annihilates c (columns follow vs).
  Eigen::MatrixXcd dom_A_obstruction_matrix(std::span<const Vector> vs) const;

  std::vector<Vector> dictionary_dom_A() const;
  std::vector<Vector> dictionary_dom_Astar() const;

  /// Closed-form Gram entries for translated kernels phi_l:
  /// graph: <phi_l, phi_m>_{+1} = (1/2) e^{-|l-m|},
  /// ambient: <phi_l, phi_m> = (1/4)(1 + |l-m|) e^{-|l-m|}.
  static double kernel_graph_gram(double li, double lj);
  static double kernel_ambient_gram(double li, double lj);
};

}  // namespace graphnorm
