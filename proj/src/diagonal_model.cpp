#include "graphnorm/diagonal_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphnorm {

DiagonalSequence::DiagonalSequence(DiagonalSymbol symbol, double eps)
    : symbol_(std::move(symbol)), eps_(eps) {
  if (eps_ <= 0.0) throw std::invalid_argument("DiagonalSequence: eps must be positive");
}

bool DiagonalSequence::in_dom_A(const Vector& f) const {
  return f.in_ell2() && apply_diag(symbol_, f).in_ell2();
}

bool DiagonalSequence::in_dom_Astar(const Vector& f) const { return in_dom_A(f); }

bool DiagonalSequence::in_dom_AAstar(const Vector& f) const {
  if (!in_dom_A(f)) return false;
  return apply_diag(symbol_, apply_diag(symbol_, f)).in_ell2();
}

SeqVector DiagonalSequence::apply_A(const Vector& f) const {
  if (!in_dom_A(f)) throw std::invalid_argument("diagonal apply_A: vector not in D(S)");
  return apply_diag(symbol_, f);
}

SeqVector DiagonalSequence::apply_Astar(const Vector& f) const { return apply_A(f); }

Complex DiagonalSequence::inner(const Vector& f, const Vector& g) const {
  const CertifiedValue v = certified_inner_product(f, g, eps_);
  if (!v.converged) {
    throw std::runtime_error("diagonal inner: certified sum did not reach eps, achieved " +
                             std::to_string(v.error_bound));
  }
  return v.value;
}

CertifiedValue DiagonalSequence::inner_certified(const Vector& f, const Vector& g,
                                                 double eps) const {
  return certified_inner_product(f, g, eps);
}

Complex DiagonalSequence::graph_inner(const Vector& f, const Vector& g) const {
  return inner(f, g) + inner(apply_Astar(f), apply_Astar(g));
}

double DiagonalSequence::ambient_norm(const Vector& f) const {
  return std::sqrt(std::max(0.0, inner(f, f).real()));
}

double DiagonalSequence::graph_norm(const Vector& f) const {
  return std::sqrt(std::max(0.0, graph_inner(f, f).real()));
}

std::vector<SeqVector> DiagonalSequence::kernel_Astar_basis() const {
  std::vector<Vector> out;
  const long bound = symbol_.monotone_threshold();
  const auto& cs = symbol_.coefficients();
  for (long n = 1; n <= bound; ++n) {
    double scale = 1.0;
    for (std::size_t d = 0; d < cs.size(); ++d) {
      scale += std::abs(cs[d]) * std::pow(double(n), double(d));
    }
    if (std::abs(symbol_.eval(n)) <= 1e-12 * scale) out.push_back(SeqVector::basis(n));
  }
  return out;
}

SeqVector DiagonalSequence::solve_one_plus_AAstar(const Vector& f) const {
  if (!f.tails().empty()) {
    throw std::invalid_argument(
        "diagonal solve: symbolic tails leave the closed class, use solve_view");
  }
  std::map<long, Complex> finite;
  for (const auto& [n, v] : f.finite_part()) {
    const double a = symbol_.eval(n);
    finite[n] = v / (1.0 + a * a);
  }
  return SeqVector(std::move(finite), {});
}

SeqVector DiagonalSequence::resolvent_at(int sign, const Vector& f) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("resolvent_at: sign must be +-1");
  if (!f.tails().empty()) {
    throw std::invalid_argument(
        "diagonal resolvent: symbolic tails leave the closed class, use resolvent_view");
  }
  std::map<long, Complex> finite;
  for (const auto& [n, v] : f.finite_part()) {
    finite[n] = v / Complex{symbol_.eval(n), double(sign)};
  }
  return SeqVector(std::move(finite), {});
}

SeqScaledView DiagonalSequence::solve_view(const Vector& f) const {
  return SeqScaledView(f, symbol_, SeqScaledView::Kind::OnePlusSquare);
}

SeqScaledView DiagonalSequence::resolvent_view(int sign, const Vector& f) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("resolvent_view: sign must be +-1");
  return SeqScaledView(f, symbol_,
                       sign == 1 ? SeqScaledView::Kind::ResolventPlus
                                 : SeqScaledView::Kind::ResolventMinus);
}

Complex DiagonalSequence::minus_one_inner(const Vector& u, const Vector& v) const {
  const CertifiedValue r = certified_inner_product_general(u, solve_view(v), eps_);
  if (!r.converged) {
    throw std::runtime_error("diagonal minus_one_inner: certified sum did not reach eps");
  }
  return r.value;
}

Eigen::MatrixXcd DiagonalSequence::dom_A_obstruction_matrix(std::span<const Vector> vs) const {
  std::vector<SeqVector> applied;
  applied.reserve(vs.size());
  for (const Vector& v : vs) applied.push_back(apply_diag(symbol_, v));

  // union of inadmissible (power, ratio) signatures
  std::vector<std::pair<double, Complex>> sigs;
  auto find_sig = [&](double p, Complex rho) -> int {
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      if (std::abs(sigs[i].first - p) <= 1e-12 && std::abs(sigs[i].second - rho) <= 1e-12) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  for (const SeqVector& a : applied) {
    for (const SeqTail& t : a.tails()) {
      if (!seq_tail_admissible(t) && find_sig(t.power, t.ratio) < 0) {
        sigs.emplace_back(t.power, t.ratio);
      }
    }
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(sigs.size()),
                                                static_cast<Eigen::Index>(vs.size()));
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    for (const SeqTail& t : applied[static_cast<std::size_t>(c)].tails()) {
      const int r = find_sig(t.power, t.ratio);
      if (r >= 0) out(r, c) += t.coeff;
    }
  }
  return out;
}

std::vector<SeqVector> DiagonalSequence::dictionary_dom_A() const {
  std::vector<Vector> cand;
  for (long k = 1; k <= 5; ++k) cand.push_back(SeqVector::basis(k));
  cand.push_back(SeqVector::power_tail(Complex{1.0, 0.0}, 2.0));
  cand.push_back(SeqVector::power_tail(Complex{0.4, -0.3}, 3.0));
  cand.push_back(SeqVector::geometric_tail(Complex{1.0, 0.0}, 1.0, Complex{0.5, 0.0}));
  cand.push_back(SeqVector::geometric_tail(Complex{0.0, 1.0}, 0.0, Complex{-0.6, 0.2}));
  std::vector<Vector> out;
  for (Vector& v : cand) {
    if (in_dom_A(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<SeqVector> DiagonalSequence::dictionary_dom_Astar() const {
  return dictionary_dom_A();
}

}  // namespace graphnorm
