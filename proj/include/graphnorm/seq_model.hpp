#pragma once

#include <complex>
#include <map>
#include <vector>

#include "json.hpp"

namespace graphnorm {

using Complex = std::complex<double>;

/// coeff * n^{-power} * ratio^n for n >= start.
struct SeqTail {
  Complex coeff{0.0, 0.0};
  double power = 0.0;
  Complex ratio{1.0, 0.0};
  long start = 2;
};

/// Square-summable-by-inspection sequence: finitely many explicit
/// coordinates plus symbolic power-law/geometric tails. Membership in l^2
/// (and in diagonal-operator domains) is decided symbolically from the
/// (power, ratio) data, never by sampling.
class SeqVector {
 public:
  SeqVector() = default;  // zero
  SeqVector(std::map<long, Complex> finite, std::vector<SeqTail> tails);

  static SeqVector zero() { return {}; }
  static SeqVector basis(long k);
  static SeqVector power_tail(Complex c, double s, long start = 2);
  static SeqVector geometric_tail(Complex c, double s, Complex ratio, long start = 2);

  Complex coord(long n) const;
  /// Common anchor: coordinates below it are explicit, at or above it the
  /// tails apply.
  long tail_start() const { return anchor_; }
  const std::map<long, Complex>& finite_part() const { return finite_; }
  const std::vector<SeqTail>& tails() const { return tails_; }

  bool is_zero() const { return finite_.empty() && tails_.empty(); }
  bool in_ell2() const;
  double max_abs_coeff() const;

  /// Certified upper bound for sqrt(sum_{n >= from} |coord(n)|^2).
  double l2_tail_bound(long from) const;

  friend SeqVector operator+(const SeqVector& f, const SeqVector& g);
  friend SeqVector operator-(const SeqVector& f, const SeqVector& g);
  friend SeqVector operator*(Complex c, const SeqVector& f);

  nlohmann::json to_json() const;
  static SeqVector from_json(const nlohmann::json& j);

 private:
  std::map<long, Complex> finite_;
  std::vector<SeqTail> tails_;
  long anchor_ = 2;
  void canonicalize();
};

/// Real polynomial symbol a(n) of a diagonal operator.
class DiagonalSymbol {
 public:
  explicit DiagonalSymbol(std::vector<double> coeffs);  // a(n) = sum_d coeffs[d] n^d

  double eval(long n) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  /// Index beyond which |a(n)| is nondecreasing (from the Cauchy root bound
  /// of the polynomial and its derivative).
  long monotone_threshold() const;

 private:
  std::vector<double> coeffs_;
};

SeqVector apply_diag(const DiagonalSymbol& sym, const SeqVector& f);
bool in_domain(const DiagonalSymbol& sym, const SeqVector& f);

/// The l^2 rule for one tail: |ratio| < 1, or |ratio| = 1 and 2*power > 1.
bool seq_tail_admissible(const SeqTail& t);

/// Lazy coordinate evaluator for (S +- i)^{-1} f and (1 + S^2)^{-1} f,
/// optionally post-multiplied by the symbol. Division by a(n) +- i leaves
/// the symbolic tail class, so these results expose coordinates and
/// certified norm bounds instead of closed forms.
class SeqScaledView {
 public:
  enum class Kind { ResolventPlus, ResolventMinus, OnePlusSquare };

  SeqScaledView(SeqVector base, DiagonalSymbol symbol, Kind kind, bool symbol_numerator = false);

  Complex coord(long n) const;
  long tail_start() const { return base_.tail_start(); }
  double l2_tail_bound(long from) const;
  const SeqVector& base() const { return base_; }
  /// The same evaluator with an extra factor a(n) in the numerator
  /// (i.e. the symbol applied to this view).
  SeqScaledView with_symbol_numerator() const;

 private:
  SeqVector base_;
  DiagonalSymbol symbol_;
  Kind kind_;
  bool symbol_numerator_;
  Complex denominator(long n) const;
};

struct CertifiedValue {
  Complex value{0.0, 0.0};
  double error_bound = 0.0;
  bool converged = false;
  long terms_summed = 0;
};

/// Certified inner product of two exact SeqVectors: explicit coordinates
/// plus closed-form evaluation of the cross-tail series (Euler-Maclaurin for
/// ratio 1, geometric/Abel bounds otherwise), antilinear in f.
CertifiedValue certified_inner_product(const SeqVector& f, const SeqVector& g, double eps);

/// Certified inner product where either side may be a lazy evaluator; the
/// tail is bounded with Cauchy-Schwarz from the certified l2 tail bounds.
template <class F, class G>
CertifiedValue certified_inner_product_general(const F& f, const G& g, double eps) {
  long n0 = std::max(f.tail_start(), g.tail_start());
  long window = std::max<long>(64, n0);
  Complex sum{0.0, 0.0};
  long n = 1;
  for (; n < n0; ++n) sum += std::conj(f.coord(n)) * g.coord(n);
  for (int round = 0; round < 24; ++round) {
    for (; n < window; ++n) sum += std::conj(f.coord(n)) * g.coord(n);
    const double bound = f.l2_tail_bound(window) * g.l2_tail_bound(window);
    if (bound <= eps) return {sum, bound, true, n};
    if (window > (1L << 24)) return {sum, bound, false, n};
    window *= 2;
  }
  return {sum, f.l2_tail_bound(window) * g.l2_tail_bound(window), false, n};
}

double l2_norm(const SeqVector& f, double eps = 1e-12);

}  // namespace graphnorm
