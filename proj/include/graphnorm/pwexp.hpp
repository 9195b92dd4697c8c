#pragma once

#include <complex>
#include <span>
#include <vector>

#include "json.hpp"

namespace graphnorm {

using Complex = std::complex<double>;

/// One summand coeff * (x - center)^power * exp(rate * (x - center)).
/// Terms are anchored at a center so that coefficients stay representable
/// when breakpoints sit far from the origin.
struct ExpTerm {
  Complex coeff{0.0, 0.0};
  int power = 0;  // nonnegative
  Complex rate{0.0, 0.0};
  double center = 0.0;
};

using Piece = std::vector<ExpTerm>;

/// Discontinuities of a function at its breakpoints (right limit minus left
/// limit). Empty exactly when the function is continuous within 1e-12.
struct JumpReport {
  std::vector<double> locations;
  std::vector<Complex> jump_values;
  bool empty() const { return locations.empty(); }
};

/// Exact piecewise exponential-polynomial function on the real line:
/// breakpoints b_1 < ... < b_m split R into m+1 closed intervals, each piece
/// holding a finite sum of ExpTerms. The class is closed under addition,
/// scaling, translation, differentiation, the (1 - d^2/dx^2)^{-1} solve and
/// the momentum resolvents, and all inner products evaluate in closed form.
class PiecewiseExpPoly {
 public:
  PiecewiseExpPoly() = default;  // the zero function
  PiecewiseExpPoly(std::vector<double> breakpoints, std::vector<Piece> pieces);

  static PiecewiseExpPoly zero() { return {}; }
  /// phi_lambda(x) = (1/2) exp(-|x - lambda|).
  static PiecewiseExpPoly kernel_phi(double lambda);
  /// Indicator of [a, b].
  static PiecewiseExpPoly indicator(double a, double b);
  /// Sum of weighted kernels phi_c over the given centers; O(n log n) and
  /// numerically anchored, so Riemann grids with thousands of kernels stay
  /// exactly representable.
  static PiecewiseExpPoly sum_of_kernels(std::span<const double> centers,
                                         std::span<const Complex> weights);
  /// psi_n = sum_{ j=0..n-1 } phi_{j/n}.
  static PiecewiseExpPoly riemann_kernel_sum(int n);
  /// The normalized limit function with psi - psi'' = sqrt(e) * chi_[0,1].
  static PiecewiseExpPoly psi_infinity();

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const;
  /// Largest anchored coefficient magnitude; the residual measure for
  /// symbolic identities.
  double max_abs_coeff() const;

  /// Point evaluation; at a breakpoint the piece to the right is used.
  Complex operator()(double x) const;

  /// Square integrability: every unbounded tail decays strictly.
  bool is_l2() const;

  PiecewiseExpPoly translated(double t) const;

  struct Derivative {
    PiecewiseExpPoly df;   // classical derivative on each open piece
    JumpReport jumps;      // discontinuities of the function itself
  };
  Derivative differentiate() const;

  JumpReport jumps() const;

  /// Raw right-minus-left limit difference at x (zero when x is not within
  /// 1e-12 of a breakpoint); unthresholded, for linear jump-cancellation
  /// systems.
  Complex jump_at(double x) const;

  /// Exact integral of the function over [a, b], a <= b.
  Complex definite_integral(double a, double b) const;

  nlohmann::json to_json() const;
  static PiecewiseExpPoly from_json(const nlohmann::json& j);

  friend PiecewiseExpPoly operator+(const PiecewiseExpPoly& f, const PiecewiseExpPoly& g);
  friend PiecewiseExpPoly operator-(const PiecewiseExpPoly& f, const PiecewiseExpPoly& g);
  friend PiecewiseExpPoly operator*(Complex c, const PiecewiseExpPoly& f);

  /// Exact L^2 inner product, antilinear in the first argument. Both
  /// operands must be square integrable.
  friend Complex inner_product(const PiecewiseExpPoly& f, const PiecewiseExpPoly& g);

 private:
  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_{Piece{}};
  void canonicalize();
};

double l2_norm_sq(const PiecewiseExpPoly& f);
double l2_norm(const PiecewiseExpPoly& f);

/// Exact integral of conj(weight) * (sum of piece terms) over [lo, hi];
/// lo may be -infinity and hi may be +infinity (the weight's rate must then
/// make the integral converge).
Complex weighted_piece_integral(const ExpTerm& weight, const Piece& piece, double lo, double hi);

}  // namespace graphnorm
