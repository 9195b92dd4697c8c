#include "graphnorm/momentum_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphnorm {

namespace {

const Complex kI{0.0, 1.0};

Complex guarded_exp(const Complex& z) {
  if (z.real() > 705.0) throw std::runtime_error("momentum model: exponent overflow");
  return std::exp(z);
}

// antiderivative of coeff * u^p e^{r u} as e^{rate u} * polynomial(u)
struct PolyExp {
  Complex rate{0.0, 0.0};
  std::vector<Complex> poly;  // poly[j] * u^j

  Complex eval(double u) const {
    Complex q{0.0, 0.0};
    for (std::size_t j = poly.size(); j-- > 0;) q = q * u + poly[j];
    return q * guarded_exp(rate * u);
  }
};

PolyExp antiderivative(Complex coeff, int p, Complex r) {
  PolyExp out;
  if (std::abs(r) <= 1e-12) {
    out.rate = {0.0, 0.0};
    out.poly.assign(static_cast<std::size_t>(p) + 2, Complex{0.0, 0.0});
    out.poly[static_cast<std::size_t>(p) + 1] = coeff / double(p + 1);
    return out;
  }
  out.rate = r;
  out.poly.assign(static_cast<std::size_t>(p) + 1, Complex{0.0, 0.0});
  Complex c = 1.0 / r;
  out.poly[static_cast<std::size_t>(p)] = coeff * c;
  for (int k = 1; k <= p; ++k) {
    c *= -double(p - k + 1) / r;
    out.poly[static_cast<std::size_t>(p - k)] = coeff * c;
  }
  return out;
}

// factor_left * e^{-x} int_{-inf}^{x} e^{y} f(y) dy
//   + factor_right * e^{x} int_{x}^{inf} e^{-y} f(y) dy,
// assembled exactly on f's pieces. This single worker realizes the
// (1 - d^2/dx^2)^{-1} convolution and both momentum resolvents.
PiecewiseExpPoly one_sided_exponential_integrals(const PiecewiseExpPoly& f, Complex factor_left,
                                                 Complex factor_right) {
  if (f.is_zero()) return {};
  const auto& bps = f.breakpoints();
  const auto& fp = f.pieces();
  const std::size_t m = bps.size();
  if (m == 0) return {};
  const double inf = std::numeric_limits<double>::infinity();
  const bool want_left = factor_left != Complex{0.0, 0.0};
  const bool want_right = factor_right != Complex{0.0, 0.0};

  // anchored cumulants: p[k] = e^{-L_k} int_{-inf}^{L_k} e^{y} f dy (L_k = bps[k-1]),
  // q[k] = e^{U_k} int_{U_k}^{inf} e^{-y} f dy (U_k = bps[k])
  std::vector<Complex> p(m + 1, Complex{0.0, 0.0});
  std::vector<Complex> q(m, Complex{0.0, 0.0});
  if (want_left) {
    p[1] = weighted_piece_integral({Complex{1.0, 0.0}, 0, Complex{1.0, 0.0}, bps[0]}, fp[0], -inf,
                                   bps[0]);
    for (std::size_t k = 1; k < m; ++k) {
      p[k + 1] =
          p[k] * std::exp(bps[k - 1] - bps[k]) +
          weighted_piece_integral({Complex{1.0, 0.0}, 0, Complex{1.0, 0.0}, bps[k]}, fp[k],
                                  bps[k - 1], bps[k]);
    }
  }
  if (want_right) {
    q[m - 1] = weighted_piece_integral({Complex{1.0, 0.0}, 0, Complex{-1.0, 0.0}, bps[m - 1]},
                                       fp[m], bps[m - 1], inf);
    for (std::size_t k = m - 1; k-- > 0;) {
      q[k] = q[k + 1] * std::exp(bps[k] - bps[k + 1]) +
             weighted_piece_integral({Complex{1.0, 0.0}, 0, Complex{-1.0, 0.0}, bps[k]},
                                     fp[k + 1], bps[k], bps[k + 1]);
    }
  }

  std::vector<Piece> out_pieces(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    Piece& out = out_pieces[k];
    const bool left_unb = (k == 0);
    const bool right_unb = (k == m);
    if (want_left && k >= 1 && p[k] != Complex{0.0, 0.0}) {
      out.push_back({factor_left * p[k], 0, Complex{-1.0, 0.0}, bps[k - 1]});
    }
    if (want_right && k < m && q[k] != Complex{0.0, 0.0}) {
      out.push_back({factor_right * q[k], 0, Complex{1.0, 0.0}, bps[k]});
    }
    for (const ExpTerm& t : fp[k]) {
      if (want_left) {
        // factor_left e^{-(x-c)} [F(x-c) - F(L_k - c)], F' (u) = u^{p} e^{(a+1)u} * coeff
        const PolyExp F = antiderivative(t.coeff, t.power, t.rate + 1.0);
        for (std::size_t j = 0; j < F.poly.size(); ++j) {
          if (F.poly[j] == Complex{0.0, 0.0}) continue;
          out.push_back({factor_left * F.poly[j], static_cast<int>(j), F.rate - 1.0, t.center});
        }
        if (!left_unb) {
          const Complex f_at_lo = F.eval(bps[k - 1] - t.center);
          if (f_at_lo != Complex{0.0, 0.0}) {
            out.push_back({-factor_left * f_at_lo, 0, Complex{-1.0, 0.0}, t.center});
          }
        } else if (F.rate.real() <= 0.0) {
          throw std::runtime_error("momentum model: divergent left tail integral");
        }
      }
      if (want_right) {
        // factor_right e^{(x-c)} [G(U_k - c) - G(x-c)], G'(u) = u^{p} e^{(a-1)u} * coeff
        const PolyExp G = antiderivative(t.coeff, t.power, t.rate - 1.0);
        for (std::size_t j = 0; j < G.poly.size(); ++j) {
          if (G.poly[j] == Complex{0.0, 0.0}) continue;
          out.push_back({-factor_right * G.poly[j], static_cast<int>(j), G.rate + 1.0, t.center});
        }
        if (!right_unb) {
          const Complex g_at_hi = G.eval(bps[k] - t.center);
          if (g_at_hi != Complex{0.0, 0.0}) {
            out.push_back({factor_right * g_at_hi, 0, Complex{1.0, 0.0}, t.center});
          }
        } else if (G.rate.real() >= 0.0) {
          throw std::runtime_error("momentum model: divergent right tail integral");
        }
      }
    }
  }
  return PiecewiseExpPoly(std::vector<double>(bps), std::move(out_pieces));
}

}  // namespace

bool MomentumLine::in_dom_A(const Vector& f) const {
  if (!f.is_l2()) return false;
  const auto d = f.differentiate();
  return d.jumps.empty() && d.df.is_l2();
}

bool MomentumLine::in_dom_Astar(const Vector& f) const { return in_dom_A(f); }

bool MomentumLine::in_dom_AAstar(const Vector& f) const {
  if (!in_dom_A(f)) return false;
  const auto d = f.differentiate();
  const auto d2 = d.df.differentiate();
  return d2.jumps.empty() && d2.df.is_l2();
}

PiecewiseExpPoly MomentumLine::apply_A(const Vector& f) const {
  if (!f.is_l2()) throw std::invalid_argument("momentum apply_A: vector not in H");
  const auto d = f.differentiate();
  if (!d.jumps.empty() || !d.df.is_l2()) {
    throw std::invalid_argument("momentum apply_A: vector not in H^1");
  }
  return kI * d.df;
}

PiecewiseExpPoly MomentumLine::apply_Astar(const Vector& f) const { return apply_A(f); }

Complex MomentumLine::inner(const Vector& f, const Vector& g) const { return inner_product(f, g); }

Complex MomentumLine::graph_inner(const Vector& f, const Vector& g) const {
  return inner_product(f, g) + inner_product(apply_Astar(f), apply_Astar(g));
}

double MomentumLine::ambient_norm(const Vector& f) const { return l2_norm(f); }

double MomentumLine::graph_norm(const Vector& f) const {
  return std::sqrt(std::max(0.0, graph_inner(f, f).real()));
}

PiecewiseExpPoly MomentumLine::solve_one_plus_AAstar(const Vector& f) const {
  if (!f.is_l2()) throw std::invalid_argument("momentum solve: input not in H");
  return one_sided_exponential_integrals(f, Complex{0.5, 0.0}, Complex{0.5, 0.0});
}

PiecewiseExpPoly MomentumLine::resolvent_at(int sign, const Vector& f) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("resolvent_at: sign must be +-1");
  if (!f.is_l2()) throw std::invalid_argument("momentum resolvent: input not in H");
  if (sign == 1) return one_sided_exponential_integrals(f, -kI, Complex{0.0, 0.0});
  return one_sided_exponential_integrals(f, Complex{0.0, 0.0}, kI);
}

Complex MomentumLine::minus_one_inner(const Vector& u, const Vector& v) const {
  return inner_product(u, solve_one_plus_AAstar(v));
}

Eigen::MatrixXcd MomentumLine::dom_A_obstruction_matrix(std::span<const Vector> vs) const {
  std::vector<double> pts;
  for (const Vector& v : vs) {
    pts.insert(pts.end(), v.breakpoints().begin(), v.breakpoints().end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
            pts.end());
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(vs.size()));
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      out(r, c) = vs[static_cast<std::size_t>(c)].jump_at(pts[static_cast<std::size_t>(r)]);
    }
  }
  return out;
}

std::vector<PiecewiseExpPoly> MomentumLine::dictionary_dom_A() const {
  std::vector<Vector> out;
  for (double t : {-2.0, -1.3, -0.6, 0.0, 0.45, 1.1, 1.8, 2.6}) {
    out.push_back(PiecewiseExpPoly::kernel_phi(t));
  }
  // x e^{-|x|}: continuous with continuous derivative, vanishes at 0
  out.push_back(PiecewiseExpPoly(
      {0.0}, {Piece{{Complex{1.0, 0.0}, 1, Complex{1.0, 0.0}, 0.0}},
              Piece{{Complex{1.0, 0.0}, 1, Complex{-1.0, 0.0}, 0.0}}}));
  out.push_back(PiecewiseExpPoly::psi_infinity());
  return out;
}

std::vector<PiecewiseExpPoly> MomentumLine::dictionary_dom_Astar() const {
  return dictionary_dom_A();
}

double MomentumLine::kernel_graph_gram(double li, double lj) {
  return 0.5 * std::exp(-std::abs(li - lj));
}

double MomentumLine::kernel_ambient_gram(double li, double lj) {
  const double d = std::abs(li - lj);
  return 0.25 * (1.0 + d) * std::exp(-d);
}

}  // namespace graphnorm
