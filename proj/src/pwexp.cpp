#include "graphnorm/pwexp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphnorm {

namespace {

constexpr double kBreakpointTol = 1e-13;  // breakpoint dedup
constexpr double kRateTol = 1e-12;        // rates closer than this coincide
constexpr double kCoeffRelTol = 1e-14;    // relative coefficient cleanup
constexpr double kJumpTol = 1e-12;
constexpr double kExpGuard = 705.0;
constexpr double kRebaseGuard = 400.0;

Complex guarded_exp(const Complex& z) {
  if (z.real() > kExpGuard) {
    throw std::runtime_error("pwexp: exponent overflow (|x| range too large for this function)");
  }
  return std::exp(z);
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Complex term_eval(const ExpTerm& t, double x) {
  const double u = x - t.center;
  return t.coeff * ipow(u, t.power) * guarded_exp(t.rate * u);
}

Complex piece_eval(const Piece& p, double x) {
  Complex v{0.0, 0.0};
  for (const ExpTerm& t : p) v += term_eval(t, x);
  return v;
}

bool rates_equal(const Complex& a, const Complex& b) {
  return std::abs(a.real() - b.real()) <= kRateTol && std::abs(a.imag() - b.imag()) <= kRateTol;
}

// integral over [0, T] of u^q e^{r u} du, scaled by e^{chi}
Complex integ_bounded(int q, Complex r, double T, Complex chi) {
  if (T <= 0.0) return {0.0, 0.0};
  if (std::abs(r) * T <= 4.0) {
    // series: T^{q+1} sum_m (rT)^m / (m! (q+m+1))
    const Complex rt = r * T;
    Complex sum{0.0, 0.0};
    Complex num{1.0, 0.0};  // (rT)^m / m!
    for (int m = 0; m <= 64; ++m) {
      const Complex add = num / double(q + m + 1);
      sum += add;
      if (std::abs(add) < 1e-20 * (1.0 + std::abs(sum))) break;
      num *= rt / double(m + 1);
    }
    return guarded_exp(chi) * ipow(T, q + 1) * sum;
  }
  // antiderivative e^{ru} Q(u), Q(u) = sum_k c_k u^{q-k}, c_0 = 1/r,
  // c_k = -c_{k-1} (q-k+1) / r
  Complex c = 1.0 / r;
  Complex q_at_T = c * ipow(T, q);
  for (int k = 1; k <= q; ++k) {
    c *= -double(q - k + 1) / r;
    q_at_T += c * ipow(T, q - k);
  }
  const Complex q_at_0 = c;  // only the u^0 coefficient survives
  return guarded_exp(chi + r * T) * q_at_T - guarded_exp(chi) * q_at_0;
}

// integral over (-inf, 0] of u^q e^{r u} du (requires Re r > 0), scaled by e^{chi}
Complex integ_left(int q, Complex r, Complex chi) {
  if (r.real() <= 0.0) throw std::runtime_error("pwexp: divergent integral on left tail");
  double fact = 1.0;
  for (int i = 2; i <= q; ++i) fact *= i;
  const double sign = (q % 2 == 0) ? 1.0 : -1.0;
  return guarded_exp(chi) * sign * fact / std::pow(r, q + 1);
}

// integral over [0, inf) of u^q e^{r u} du (requires Re r < 0), scaled by e^{chi}
Complex integ_right(int q, Complex r, Complex chi) {
  if (r.real() >= 0.0) throw std::runtime_error("pwexp: divergent integral on right tail");
  double fact = 1.0;
  for (int i = 2; i <= q; ++i) fact *= i;
  return guarded_exp(chi) * fact / std::pow(-r, q + 1);
}

// integral of conj(tf) * tg over the interval; base is the finite anchor
// (the left endpoint, or the right endpoint for the leftmost piece)
Complex integrate_product(const ExpTerm& tf, const ExpTerm& tg, double lo, double hi,
                          bool left_unbounded, bool right_unbounded) {
  const Complex r = std::conj(tf.rate) + tg.rate;
  const Complex coeff = std::conj(tf.coeff) * tg.coeff;
  const double base = left_unbounded ? hi : lo;
  const Complex chi = std::conj(tf.rate) * (base - tf.center) + tg.rate * (base - tg.center);
  Complex sum{0.0, 0.0};
  for (int i = 0; i <= tf.power; ++i) {
    const double wf = binomial(tf.power, i) * ipow(base - tf.center, tf.power - i);
    for (int j = 0; j <= tg.power; ++j) {
      const double wg = binomial(tg.power, j) * ipow(base - tg.center, tg.power - j);
      const int q = i + j;
      Complex val;
      if (left_unbounded) {
        val = integ_left(q, r, chi);
      } else if (right_unbounded) {
        val = integ_right(q, r, chi);
      } else {
        val = integ_bounded(q, r, hi - lo, chi);
      }
      sum += wf * wg * val;
    }
  }
  return coeff * sum;
}

}  // namespace

PiecewiseExpPoly::PiecewiseExpPoly(std::vector<double> breakpoints, std::vector<Piece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("PiecewiseExpPoly: need one piece per interval");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1])) {
      if (breakpoints_[i] >= breakpoints_[i - 1] - kBreakpointTol) continue;  // dedup later
      throw std::invalid_argument("PiecewiseExpPoly: breakpoints must be increasing");
    }
  }
  canonicalize();
}

void PiecewiseExpPoly::canonicalize() {
  // merge nearly coincident breakpoints, dropping sliver pieces
  {
    std::vector<double> nb;
    std::vector<Piece> np;
    np.push_back(std::move(pieces_[0]));
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
      if (!nb.empty() && breakpoints_[i] <= nb.back() + kBreakpointTol) {
        np.back() = std::move(pieces_[i + 1]);  // previous kept piece was a sliver
      } else {
        nb.push_back(breakpoints_[i]);
        np.push_back(std::move(pieces_[i + 1]));
      }
    }
    breakpoints_ = std::move(nb);
    pieces_ = std::move(np);
  }

  // per piece: rebase terms to a common anchor where safe, then merge
  const std::size_t m = breakpoints_.size();
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const bool left_unbounded = (k == 0);
    const bool right_unbounded = (k == m);
    double target = 0.0;
    if (m > 0) target = left_unbounded ? breakpoints_[0] : breakpoints_[k - 1];
    const double length =
        (left_unbounded || right_unbounded) ? 0.0 : breakpoints_[k] - breakpoints_[k - 1];

    Piece rebased;
    for (const ExpTerm& t : pieces_[k]) {
      if (t.coeff == Complex{0.0, 0.0}) continue;
      const double shift = target - t.center;
      const bool safe = std::abs(t.rate.real() * shift) <= kRebaseGuard &&
                        std::abs(t.rate.real()) * length <= kRebaseGuard;
      if (t.center == target || !safe) {
        rebased.push_back(t);
        continue;
      }
      const Complex factor = guarded_exp(t.rate * shift);
      for (int j = 0; j <= t.power; ++j) {
        ExpTerm nt;
        nt.coeff = t.coeff * factor * binomial(t.power, j) * ipow(-shift, t.power - j);
        nt.power = j;
        nt.rate = t.rate;
        nt.center = target;
        rebased.push_back(nt);
      }
    }
    std::sort(rebased.begin(), rebased.end(), [](const ExpTerm& a, const ExpTerm& b) {
      if (a.power != b.power) return a.power < b.power;
      if (a.rate.real() != b.rate.real()) return a.rate.real() < b.rate.real();
      if (a.rate.imag() != b.rate.imag()) return a.rate.imag() < b.rate.imag();
      return a.center < b.center;
    });
    Piece merged;
    for (const ExpTerm& t : rebased) {
      if (!merged.empty() && merged.back().power == t.power &&
          rates_equal(merged.back().rate, t.rate) && merged.back().center == t.center) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(t);
      }
    }
    pieces_[k] = std::move(merged);
  }

  // global relative coefficient cleanup
  double gmax = 0.0;
  for (const Piece& p : pieces_)
    for (const ExpTerm& t : p) gmax = std::max(gmax, std::abs(t.coeff));
  for (Piece& p : pieces_) {
    Piece kept;
    for (const ExpTerm& t : p) {
      if (std::abs(t.coeff) >= kCoeffRelTol * gmax && t.coeff != Complex{0.0, 0.0}) {
        kept.push_back(t);
      }
    }
    p = std::move(kept);
  }

  bool all_empty = true;
  for (const Piece& p : pieces_) all_empty = all_empty && p.empty();
  if (all_empty) {
    breakpoints_.clear();
    pieces_.assign(1, Piece{});
  }
}

bool PiecewiseExpPoly::is_zero() const {
  for (const Piece& p : pieces_)
    if (!p.empty()) return false;
  return true;
}

double PiecewiseExpPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const Piece& p : pieces_)
    for (const ExpTerm& t : p) m = std::max(m, std::abs(t.coeff));
  return m;
}

Complex PiecewiseExpPoly::operator()(double x) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  // at a breakpoint use the piece to the right
  if (idx < breakpoints_.size() && breakpoints_[idx] == x) ++idx;
  return piece_eval(pieces_[idx], x);
}

bool PiecewiseExpPoly::is_l2() const {
  for (const ExpTerm& t : pieces_.front()) {
    if (t.coeff != Complex{0.0, 0.0} && t.rate.real() <= 0.0) return false;
  }
  for (const ExpTerm& t : pieces_.back()) {
    if (t.coeff != Complex{0.0, 0.0} && t.rate.real() >= 0.0) return false;
  }
  return true;
}

PiecewiseExpPoly PiecewiseExpPoly::translated(double t) const {
  PiecewiseExpPoly out = *this;
  for (double& b : out.breakpoints_) b += t;
  for (Piece& p : out.pieces_)
    for (ExpTerm& e : p) e.center += t;
  return out;
}

JumpReport PiecewiseExpPoly::jumps() const {
  JumpReport rep;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const double b = breakpoints_[i];
    const Complex left = piece_eval(pieces_[i], b);
    const Complex right = piece_eval(pieces_[i + 1], b);
    const Complex jump = right - left;
    if (std::abs(jump) > kJumpTol * (1.0 + std::max(std::abs(left), std::abs(right)))) {
      rep.locations.push_back(b);
      rep.jump_values.push_back(jump);
    }
  }
  return rep;
}

Complex PiecewiseExpPoly::jump_at(double x) const {
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (std::abs(breakpoints_[i] - x) <= 1e-12) {
      return piece_eval(pieces_[i + 1], breakpoints_[i]) - piece_eval(pieces_[i], breakpoints_[i]);
    }
  }
  return {0.0, 0.0};
}

PiecewiseExpPoly::Derivative PiecewiseExpPoly::differentiate() const {
  Derivative out;
  out.jumps = jumps();
  std::vector<Piece> dpieces(pieces_.size());
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    for (const ExpTerm& t : pieces_[k]) {
      if (t.power > 0) {
        dpieces[k].push_back({t.coeff * double(t.power), t.power - 1, t.rate, t.center});
      }
      if (t.rate != Complex{0.0, 0.0}) {
        dpieces[k].push_back({t.coeff * t.rate, t.power, t.rate, t.center});
      }
    }
  }
  out.df = PiecewiseExpPoly();
  out.df.breakpoints_ = breakpoints_;
  out.df.pieces_ = std::move(dpieces);
  out.df.canonicalize();
  return out;
}

Complex PiecewiseExpPoly::definite_integral(double a, double b) const {
  if (b < a) return -definite_integral(b, a);
  // cut [a, b] at interior breakpoints and use one constant factor as tg
  Complex total{0.0, 0.0};
  std::vector<double> cuts{a};
  for (double bp : breakpoints_) {
    if (bp > a && bp < b) cuts.push_back(bp);
  }
  cuts.push_back(b);
  const ExpTerm one{Complex{1.0, 0.0}, 0, Complex{0.0, 0.0}, 0.0};
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double lo = cuts[s], hi = cuts[s + 1];
    const double mid = 0.5 * (lo + hi);
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), mid);
    const Piece& piece = pieces_[static_cast<std::size_t>(it - breakpoints_.begin())];
    for (const ExpTerm& t : piece) {
      // conj(one) * t over [lo, hi]
      total += integrate_product(one, t, lo, hi, false, false);
    }
  }
  return total;
}

PiecewiseExpPoly operator+(const PiecewiseExpPoly& f, const PiecewiseExpPoly& g) {
  PiecewiseExpPoly out;
  out.breakpoints_.clear();
  out.pieces_.clear();
  std::size_t i = 0, j = 0;
  std::size_t fi = 0, gi = 0;  // current piece indices
  auto push_piece = [&] {
    Piece p = f.pieces_[fi];
    p.insert(p.end(), g.pieces_[gi].begin(), g.pieces_[gi].end());
    out.pieces_.push_back(std::move(p));
  };
  push_piece();
  while (i < f.breakpoints_.size() || j < g.breakpoints_.size()) {
    double b;
    if (j >= g.breakpoints_.size() ||
        (i < f.breakpoints_.size() && f.breakpoints_[i] <= g.breakpoints_[j])) {
      b = f.breakpoints_[i];
    } else {
      b = g.breakpoints_[j];
    }
    if (i < f.breakpoints_.size() && f.breakpoints_[i] <= b + kBreakpointTol) {
      ++i;
      ++fi;
    }
    if (j < g.breakpoints_.size() && g.breakpoints_[j] <= b + kBreakpointTol) {
      ++j;
      ++gi;
    }
    out.breakpoints_.push_back(b);
    push_piece();
  }
  out.canonicalize();
  return out;
}

PiecewiseExpPoly operator*(Complex c, const PiecewiseExpPoly& f) {
  PiecewiseExpPoly out = f;
  for (Piece& p : out.pieces_)
    for (ExpTerm& t : p) t.coeff *= c;
  out.canonicalize();
  return out;
}

PiecewiseExpPoly operator-(const PiecewiseExpPoly& f, const PiecewiseExpPoly& g) {
  return f + (Complex{-1.0, 0.0} * g);
}

Complex inner_product(const PiecewiseExpPoly& f, const PiecewiseExpPoly& g) {
  if (!f.is_l2() || !g.is_l2()) {
    throw std::invalid_argument("inner_product: operand is not square integrable");
  }
  // union of breakpoints
  std::vector<double> bps;
  {
    std::size_t i = 0, j = 0;
    while (i < f.breakpoints_.size() || j < g.breakpoints_.size()) {
      double b;
      if (j >= g.breakpoints_.size() ||
          (i < f.breakpoints_.size() && f.breakpoints_[i] <= g.breakpoints_[j])) {
        b = f.breakpoints_[i];
      } else {
        b = g.breakpoints_[j];
      }
      if (i < f.breakpoints_.size() && f.breakpoints_[i] <= b + kBreakpointTol) ++i;
      if (j < g.breakpoints_.size() && g.breakpoints_[j] <= b + kBreakpointTol) ++j;
      bps.push_back(b);
    }
  }
  Complex total{0.0, 0.0};
  std::size_t fi = 0, gi = 0;
  for (std::size_t k = 0; k < bps.size() + 1; ++k) {
    const bool left_unb = (k == 0);
    const bool right_unb = (k == bps.size());
    if (k > 0) {
      while (fi < f.breakpoints_.size() && f.breakpoints_[fi] <= bps[k - 1] + kBreakpointTol) ++fi;
      while (gi < g.breakpoints_.size() && g.breakpoints_[gi] <= bps[k - 1] + kBreakpointTol) ++gi;
    }
    const Piece& pf = f.pieces_[fi];
    const Piece& pg = g.pieces_[gi];
    if (pf.empty() || pg.empty()) continue;
    if (left_unb && right_unb) continue;  // L2 single-piece functions are empty
    // for the leftmost interval only the right endpoint exists and serves as
    // both anchor and bound; integrate_product reads `hi` in that case
    const double lo = left_unb ? bps[0] : bps[k - 1];
    const double hi = right_unb ? bps[k - 1] : bps[k];
    if (!left_unb && !right_unb && hi - lo <= kBreakpointTol) continue;
    for (const ExpTerm& tf : pf) {
      for (const ExpTerm& tg : pg) {
        total += integrate_product(tf, tg, lo, hi, left_unb, right_unb);
      }
    }
  }
  return total;
}

double l2_norm_sq(const PiecewiseExpPoly& f) { return inner_product(f, f).real(); }
double l2_norm(const PiecewiseExpPoly& f) { return std::sqrt(std::max(0.0, l2_norm_sq(f))); }

Complex weighted_piece_integral(const ExpTerm& weight, const Piece& piece, double lo, double hi) {
  const bool left_unb = std::isinf(lo);
  const bool right_unb = std::isinf(hi);
  if (left_unb && right_unb) {
    throw std::invalid_argument("weighted_piece_integral: doubly unbounded interval");
  }
  Complex total{0.0, 0.0};
  for (const ExpTerm& t : piece) {
    if (left_unb) {
      total += integrate_product(weight, t, hi, hi, true, false);
    } else if (right_unb) {
      total += integrate_product(weight, t, lo, lo, false, true);
    } else {
      total += integrate_product(weight, t, lo, hi, false, false);
    }
  }
  return total;
}

PiecewiseExpPoly PiecewiseExpPoly::kernel_phi(double lambda) {
  PiecewiseExpPoly out;
  out.breakpoints_ = {lambda};
  out.pieces_ = {Piece{{Complex{0.5, 0.0}, 0, Complex{1.0, 0.0}, lambda}},
                 Piece{{Complex{0.5, 0.0}, 0, Complex{-1.0, 0.0}, lambda}}};
  return out;
}

PiecewiseExpPoly PiecewiseExpPoly::indicator(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("indicator: need a < b");
  PiecewiseExpPoly out;
  out.breakpoints_ = {a, b};
  out.pieces_ = {Piece{}, Piece{{Complex{1.0, 0.0}, 0, Complex{0.0, 0.0}, a}}, Piece{}};
  return out;
}

PiecewiseExpPoly PiecewiseExpPoly::sum_of_kernels(std::span<const double> centers,
                                                  std::span<const Complex> weights) {
  if (centers.size() != weights.size()) {
    throw std::invalid_argument("sum_of_kernels: centers/weights size mismatch");
  }
  if (centers.empty()) return zero();
  std::vector<std::pair<double, Complex>> pts(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) pts[i] = {centers[i], weights[i]};
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> lam;
  std::vector<Complex> w;
  for (const auto& [c, wt] : pts) {
    if (!lam.empty() && c <= lam.back() + kBreakpointTol) {
      w.back() += wt;
    } else {
      lam.push_back(c);
      w.push_back(wt);
    }
  }
  const std::size_t n = lam.size();
  // decaying prefix sums D_k = sum_{j<k} w_j e^{lam_j - lam_{k-1}},
  // growing suffix sums G_k = sum_{j>=k} w_j e^{lam_k - lam_j}
  std::vector<Complex> d(n + 1, Complex{0.0, 0.0}), gr(n + 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; k <= n; ++k) {
    d[k] = (k == 1) ? w[0] : d[k - 1] * std::exp(lam[k - 2] - lam[k - 1]) + w[k - 1];
  }
  for (std::size_t k = n; k-- > 0;) {
    gr[k] = (k + 1 == n) ? w[k] : w[k] + gr[k + 1] * std::exp(lam[k] - lam[k + 1]);
  }
  PiecewiseExpPoly out;
  out.breakpoints_ = lam;
  out.pieces_.assign(n + 1, Piece{});
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0 && d[k] != Complex{0.0, 0.0}) {
      out.pieces_[k].push_back({0.5 * d[k], 0, Complex{-1.0, 0.0}, lam[k - 1]});
    }
    if (k < n && gr[k] != Complex{0.0, 0.0}) {
      out.pieces_[k].push_back({0.5 * gr[k], 0, Complex{1.0, 0.0}, lam[k]});
    }
  }
  out.canonicalize();
  return out;
}

PiecewiseExpPoly PiecewiseExpPoly::riemann_kernel_sum(int n) {
  if (n < 1) throw std::invalid_argument("riemann_kernel_sum: need n >= 1");
  std::vector<double> centers(static_cast<std::size_t>(n));
  std::vector<Complex> weights(static_cast<std::size_t>(n), Complex{1.0, 0.0});
  for (int j = 0; j < n; ++j) centers[static_cast<std::size_t>(j)] = double(j) / double(n);
  return sum_of_kernels(centers, weights);
}

PiecewiseExpPoly PiecewiseExpPoly::psi_infinity() {
  const double se = std::sqrt(std::exp(1.0));
  const double em1 = std::exp(-1.0);
  PiecewiseExpPoly out;
  out.breakpoints_ = {0.0, 1.0};
  out.pieces_.assign(3, Piece{});
  // x <= 0:          sqrt(e)/2 (1 - 1/e) e^{x}
  out.pieces_[0].push_back({Complex{0.5 * se * (1.0 - em1), 0.0}, 0, Complex{1.0, 0.0}, 0.0});
  // 0 <= x <= 1:     sqrt(e) - (1/(2 sqrt(e))) e^{x} ... - (sqrt(e)/2) e^{-x}
  out.pieces_[1].push_back({Complex{se, 0.0}, 0, Complex{0.0, 0.0}, 0.0});
  out.pieces_[1].push_back({Complex{-0.5 * se * em1, 0.0}, 0, Complex{1.0, 0.0}, 0.0});
  out.pieces_[1].push_back({Complex{-0.5 * se, 0.0}, 0, Complex{-1.0, 0.0}, 0.0});
  // x >= 1:          sqrt(e)/2 (1 - 1/e) e^{-(x-1)}
  out.pieces_[2].push_back({Complex{0.5 * se * (1.0 - em1), 0.0}, 0, Complex{-1.0, 0.0}, 1.0});
  return out;
}

nlohmann::json PiecewiseExpPoly::to_json() const {
  nlohmann::json j;
  j["breakpoints"] = breakpoints_;
  nlohmann::json pieces = nlohmann::json::array();
  for (const Piece& p : pieces_) {
    nlohmann::json terms = nlohmann::json::array();
    for (const ExpTerm& t : p) {
      terms.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}},
                       {"power", t.power},
                       {"rate", {t.rate.real(), t.rate.imag()}},
                       {"center", t.center}});
    }
    pieces.push_back(std::move(terms));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

PiecewiseExpPoly PiecewiseExpPoly::from_json(const nlohmann::json& j) {
  std::vector<double> bps = j.at("breakpoints").get<std::vector<double>>();
  std::vector<Piece> pieces;
  for (const auto& pj : j.at("pieces")) {
    Piece p;
    for (const auto& tj : pj) {
      ExpTerm t;
      t.coeff = Complex{tj.at("coeff")[0].get<double>(), tj.at("coeff")[1].get<double>()};
      t.power = tj.at("power").get<int>();
      t.rate = Complex{tj.at("rate")[0].get<double>(), tj.at("rate")[1].get<double>()};
      t.center = tj.at("center").get<double>();
      p.push_back(t);
    }
    pieces.push_back(std::move(p));
  }
  return PiecewiseExpPoly(std::move(bps), std::move(pieces));
}

}  // namespace graphnorm
