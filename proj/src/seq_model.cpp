#include "graphnorm/seq_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphnorm {

namespace {

constexpr double kKeyTol = 1e-13;      // tail (power, ratio) matching
constexpr double kCoeffRelTol = 1e-14; // relative coefficient cleanup
constexpr long kMaxIndex = 1L << 24;

// binary exponentiation keeps the phase error at ~log2(n) ulps even for
// oscillatory ratios at n ~ 10^7
Complex cpow_int(Complex base, long n) {
  Complex r{1.0, 0.0};
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

double tail_value_at(const SeqTail& t, long n) {
  return std::pow(double(n), -t.power);
}

bool ratio_is_one(const Complex& r) {
  return std::abs(r - Complex{1.0, 0.0}) <= 1e-14;
}

}  // namespace

bool seq_tail_admissible(const SeqTail& t) {
  const double mod = std::abs(t.ratio);
  if (mod < 1.0 - 1e-15) return true;
  if (mod <= 1.0 + 1e-15) return 2.0 * t.power > 1.0;
  return false;
}

namespace {

bool tail_admissible(const SeqTail& t) { return seq_tail_admissible(t); }

// certified upper bound for sum_{n>=N} n^{-u} tau^n with |tau| <= 1 (modulus
// based; +inf when the series is not summable at this N)
double scalar_tail_bound(double u, double tau_mod, long n_from) {
  const double nd = double(n_from);
  if (tau_mod >= 1.0 - 1e-15) {
    if (u <= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(nd, -u) + std::pow(nd, 1.0 - u) / (u - 1.0);
  }
  if (u >= 0.0) {
    return std::pow(nd, -u) * std::pow(tau_mod, nd) / (1.0 - tau_mod);
  }
  // growing polynomial factor: ratio test
  const double r = tau_mod * std::pow(1.0 + 1.0 / nd, -u);
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(nd, -u) * std::pow(tau_mod, nd) / (1.0 - r);
}

}  // namespace

SeqVector::SeqVector(std::map<long, Complex> finite, std::vector<SeqTail> tails)
    : finite_(std::move(finite)), tails_(std::move(tails)) {
  canonicalize();
}

void SeqVector::canonicalize() {
  for (const auto& [idx, v] : finite_) {
    if (idx < 1) throw std::invalid_argument("SeqVector: indices start at 1");
    (void)v;
  }
  long anchor = 2;
  if (!finite_.empty()) anchor = std::max(anchor, finite_.rbegin()->first + 1);
  for (const SeqTail& t : tails_) {
    if (t.start < 1) throw std::invalid_argument("SeqVector: tail start must be >= 1");
    if (std::abs(t.ratio) > 1.0 + 1e-12) {
      throw std::invalid_argument("SeqVector: tail ratio modulus must be <= 1");
    }
    anchor = std::max(anchor, t.start);
  }
  // fold tail coordinates below the common anchor into the finite part
  for (const SeqTail& t : tails_) {
    for (long n = t.start; n < anchor; ++n) {
      finite_[n] += t.coeff * tail_value_at(t, n) * cpow_int(t.ratio, n);
    }
  }
  // merge tails sharing (power, ratio)
  std::vector<SeqTail> merged;
  std::vector<SeqTail> sorted = tails_;
  std::sort(sorted.begin(), sorted.end(), [](const SeqTail& a, const SeqTail& b) {
    if (a.power != b.power) return a.power < b.power;
    if (a.ratio.real() != b.ratio.real()) return a.ratio.real() < b.ratio.real();
    return a.ratio.imag() < b.ratio.imag();
  });
  for (SeqTail t : sorted) {
    t.start = anchor;
    if (!merged.empty() && std::abs(merged.back().power - t.power) <= kKeyTol &&
        std::abs(merged.back().ratio - t.ratio) <= kKeyTol) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  tails_ = std::move(merged);
  anchor_ = anchor;

  double gmax = max_abs_coeff();
  std::erase_if(tails_, [&](const SeqTail& t) {
    return t.coeff == Complex{0.0, 0.0} || std::abs(t.coeff) < kCoeffRelTol * gmax;
  });
  std::erase_if(finite_, [&](const auto& kv) {
    return kv.second == Complex{0.0, 0.0} || std::abs(kv.second) < kCoeffRelTol * gmax;
  });
}

double SeqVector::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [idx, v] : finite_) {
    (void)idx;
    m = std::max(m, std::abs(v));
  }
  for (const SeqTail& t : tails_) m = std::max(m, std::abs(t.coeff));
  return m;
}

SeqVector SeqVector::basis(long k) {
  if (k < 1) throw std::invalid_argument("SeqVector::basis: index must be >= 1");
  return SeqVector({{k, Complex{1.0, 0.0}}}, {});
}

SeqVector SeqVector::power_tail(Complex c, double s, long start) {
  return SeqVector({}, {SeqTail{c, s, Complex{1.0, 0.0}, start}});
}

SeqVector SeqVector::geometric_tail(Complex c, double s, Complex ratio, long start) {
  return SeqVector({}, {SeqTail{c, s, ratio, start}});
}

Complex SeqVector::coord(long n) const {
  if (n < 1) throw std::invalid_argument("SeqVector::coord: indices start at 1");
  if (n < anchor_) {
    const auto it = finite_.find(n);
    return it == finite_.end() ? Complex{0.0, 0.0} : it->second;
  }
  Complex v{0.0, 0.0};
  for (const SeqTail& t : tails_) v += t.coeff * tail_value_at(t, n) * cpow_int(t.ratio, n);
  return v;
}

bool SeqVector::in_ell2() const {
  for (const SeqTail& t : tails_) {
    if (!tail_admissible(t)) return false;
  }
  return true;
}

double SeqVector::l2_tail_bound(long from) const {
  const long n0 = std::max(from, anchor_);
  double bound = 0.0;
  for (const SeqTail& t : tails_) {
    const double s = scalar_tail_bound(2.0 * t.power, std::norm(t.ratio), n0);
    bound += std::abs(t.coeff) * std::sqrt(s);
  }
  if (from < anchor_) {
    double extra = 0.0;
    for (long n = from; n < anchor_; ++n) extra += std::norm(coord(n));
    bound += std::sqrt(extra);
  }
  return bound;
}

SeqVector operator+(const SeqVector& f, const SeqVector& g) {
  std::map<long, Complex> finite = f.finite_;
  for (const auto& [idx, v] : g.finite_) finite[idx] += v;
  std::vector<SeqTail> tails = f.tails_;
  tails.insert(tails.end(), g.tails_.begin(), g.tails_.end());
  return SeqVector(std::move(finite), std::move(tails));
}

SeqVector operator*(Complex c, const SeqVector& f) {
  std::map<long, Complex> finite = f.finite_;
  for (auto& [idx, v] : finite) {
    (void)idx;
    v *= c;
  }
  std::vector<SeqTail> tails = f.tails_;
  for (SeqTail& t : tails) t.coeff *= c;
  return SeqVector(std::move(finite), std::move(tails));
}

SeqVector operator-(const SeqVector& f, const SeqVector& g) {
  return f + (Complex{-1.0, 0.0} * g);
}

nlohmann::json SeqVector::to_json() const {
  nlohmann::json j;
  nlohmann::json finite = nlohmann::json::array();
  for (const auto& [idx, v] : finite_) {
    finite.push_back({{"n", idx}, {"value", {v.real(), v.imag()}}});
  }
  nlohmann::json tails = nlohmann::json::array();
  for (const SeqTail& t : tails_) {
    tails.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}},
                     {"power", t.power},
                     {"ratio", {t.ratio.real(), t.ratio.imag()}},
                     {"start", t.start}});
  }
  j["finite"] = std::move(finite);
  j["tails"] = std::move(tails);
  return j;
}

SeqVector SeqVector::from_json(const nlohmann::json& j) {
  std::map<long, Complex> finite;
  for (const auto& e : j.at("finite")) {
    finite[e.at("n").get<long>()] =
        Complex{e.at("value")[0].get<double>(), e.at("value")[1].get<double>()};
  }
  std::vector<SeqTail> tails;
  for (const auto& e : j.at("tails")) {
    SeqTail t;
    t.coeff = Complex{e.at("coeff")[0].get<double>(), e.at("coeff")[1].get<double>()};
    t.power = e.at("power").get<double>();
    t.ratio = Complex{e.at("ratio")[0].get<double>(), e.at("ratio")[1].get<double>()};
    t.start = e.at("start").get<long>();
    tails.push_back(t);
  }
  return SeqVector(std::move(finite), std::move(tails));
}

DiagonalSymbol::DiagonalSymbol(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  bool all_zero = true;
  for (double c : coeffs_) all_zero = all_zero && c == 0.0;
  if (all_zero) throw std::invalid_argument("DiagonalSymbol: zero symbol is not supported");
}

double DiagonalSymbol::eval(long n) const {
  double r = 0.0;
  for (std::size_t d = coeffs_.size(); d-- > 0;) r = r * double(n) + coeffs_[d];
  return r;
}

long DiagonalSymbol::monotone_threshold() const {
  if (degree() == 0) return 1;
  // Cauchy bound for the polynomial and its derivative
  auto cauchy = [](const std::vector<double>& c) {
    const double lead = c.back();
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i] / lead));
    return 1.0 + m;
  };
  std::vector<double> deriv;
  for (std::size_t d = 1; d < coeffs_.size(); ++d) deriv.push_back(coeffs_[d] * double(d));
  const double b = std::max(cauchy(coeffs_), cauchy(deriv));
  return std::max<long>(2, static_cast<long>(std::ceil(b)) + 1);
}

SeqVector apply_diag(const DiagonalSymbol& sym, const SeqVector& f) {
  std::map<long, Complex> finite;
  for (const auto& [idx, v] : f.finite_part()) finite[idx] = v * sym.eval(idx);
  std::vector<SeqTail> tails;
  for (const SeqTail& t : f.tails()) {
    const auto& c = sym.coefficients();
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (c[d] == 0.0) continue;
      tails.push_back(SeqTail{t.coeff * c[d], t.power - double(d), t.ratio, t.start});
    }
  }
  return SeqVector(std::move(finite), std::move(tails));
}

bool in_domain(const DiagonalSymbol& sym, const SeqVector& f) {
  if (!f.in_ell2()) throw std::invalid_argument("in_domain: vector is not square summable");
  return apply_diag(sym, f).in_ell2();
}

SeqScaledView::SeqScaledView(SeqVector base, DiagonalSymbol symbol, Kind kind,
                             bool symbol_numerator)
    : base_(std::move(base)), symbol_(std::move(symbol)), kind_(kind),
      symbol_numerator_(symbol_numerator) {}

Complex SeqScaledView::denominator(long n) const {
  const double a = symbol_.eval(n);
  switch (kind_) {
    case Kind::ResolventPlus: return Complex{a, 1.0};
    case Kind::ResolventMinus: return Complex{a, -1.0};
    case Kind::OnePlusSquare: return Complex{1.0 + a * a, 0.0};
  }
  return Complex{1.0, 0.0};
}

Complex SeqScaledView::coord(long n) const {
  Complex v = base_.coord(n) / denominator(n);
  if (symbol_numerator_) v *= symbol_.eval(n);
  return v;
}

double SeqScaledView::l2_tail_bound(long from) const {
  // sup_{n >= from} |numerator(n)| / |denominator(n)|, certified via the
  // symbol's monotone threshold; both denominators have modulus >= 1.
  double ratio = 1.0;
  const long thr = symbol_.monotone_threshold();
  const double a = std::abs(symbol_.eval(std::max(from, thr)));
  if (!symbol_numerator_) {
    if (from >= thr) {
      const double denom = (kind_ == Kind::OnePlusSquare) ? (1.0 + a * a) : std::hypot(a, 1.0);
      ratio = 1.0 / std::max(1.0, denom);
    }
  } else {
    if (kind_ == Kind::OnePlusSquare) {
      ratio = 0.5;  // |a| / (1 + a^2) <= 1/2
      if (from >= thr && a >= 1.0) ratio = a / (1.0 + a * a);
    } else {
      ratio = 1.0;  // |a| / |a +- i| < 1
    }
  }
  return ratio * base_.l2_tail_bound(from);
}

SeqScaledView SeqScaledView::with_symbol_numerator() const {
  return SeqScaledView(base_, symbol_, kind_, true);
}

namespace {

// Euler-Maclaurin evaluation of sum_{n>=N} n^{-u} (u > 1) with certified
// remainder; x^{-u} is completely monotone so the remainder is bounded by
// the first omitted correction term.
struct EmValue {
  double value;
  double remainder;
};

EmValue euler_maclaurin_power_tail(double u, long n_from) {
  const double N = double(n_from);
  const double f = std::pow(N, -u);
  double value = std::pow(N, 1.0 - u) / (u - 1.0) + 0.5 * f + u * std::pow(N, -u - 1.0) / 12.0 -
                 u * (u + 1.0) * (u + 2.0) * std::pow(N, -u - 3.0) / 720.0;
  const double rem =
      u * (u + 1.0) * (u + 2.0) * (u + 3.0) * (u + 4.0) * std::pow(N, -u - 5.0) / 30240.0;
  return {value, rem};
}

struct TailComponent {
  Complex coeff;  // conj(c_f) * c_g
  double u;       // combined power
  Complex tau;    // conj(ratio_f) * ratio_g
};

// value + certified bound of coeff * sum_{n>=N} n^{-u} tau^n
void tail_component_eval(const TailComponent& tc, long n_from, Complex* value, double* bound) {
  const double mod = std::abs(tc.tau);
  if (ratio_is_one(tc.tau)) {
    const EmValue em = euler_maclaurin_power_tail(tc.u, n_from);
    *value = tc.coeff * em.value;
    *bound = std::abs(tc.coeff) * em.remainder;
    return;
  }
  if (mod < 1.0 - 1e-15) {
    // geometric decay: sum directly until the certified remainder is tiny
    Complex sum{0.0, 0.0};
    long n = n_from;
    double rem = std::numeric_limits<double>::infinity();
    for (; n < n_from + 4096 && n < kMaxIndex; ++n) {
      sum += std::pow(double(n), -tc.u) * cpow_int(tc.tau, n);
      const double ratio = mod * std::pow(1.0 + 1.0 / double(n + 1), -tc.u);
      if (ratio < 1.0) {
        rem = std::pow(double(n + 1), -tc.u) * std::pow(mod, double(n + 1)) / (1.0 - ratio);
        if (rem < 1e-18 * (1.0 + std::abs(sum))) {
          ++n;
          break;
        }
      }
    }
    *value = tc.coeff * sum;
    *bound = std::abs(tc.coeff) * rem;
    return;
  }
  // oscillatory unit-modulus ratio: partial sum plus Abel remainder bound
  const double abel = 2.0 / std::abs(Complex{1.0, 0.0} - tc.tau);
  Complex sum{0.0, 0.0};
  long n = n_from;
  const long n_stop = std::min(kMaxIndex, 4 * n_from + 1024);
  for (; n < n_stop; ++n) sum += std::pow(double(n), -tc.u) * cpow_int(tc.tau, n);
  *value = tc.coeff * sum;
  *bound = std::abs(tc.coeff) * abel * std::pow(double(n), -tc.u);
}

}  // namespace

CertifiedValue certified_inner_product(const SeqVector& f, const SeqVector& g, double eps) {
  if (!f.in_ell2() || !g.in_ell2()) {
    throw std::invalid_argument("certified_inner_product: operand is not square summable");
  }
  std::vector<TailComponent> components;
  for (const SeqTail& tf : f.tails()) {
    for (const SeqTail& tg : g.tails()) {
      components.push_back(
          {std::conj(tf.coeff) * tg.coeff, tf.power + tg.power, std::conj(tf.ratio) * tg.ratio});
    }
  }
  const long anchor = std::max(f.tail_start(), g.tail_start());
  long window = std::max<long>(anchor, 32);
  Complex direct{0.0, 0.0};
  long n = 1;
  for (; n < anchor; ++n) direct += std::conj(f.coord(n)) * g.coord(n);
  while (true) {
    for (; n < window; ++n) direct += std::conj(f.coord(n)) * g.coord(n);
    Complex tail_value{0.0, 0.0};
    double bound = 0.0;
    for (const TailComponent& tc : components) {
      Complex v;
      double b;
      tail_component_eval(tc, window, &v, &b);
      tail_value += v;
      bound += b;
    }
    if (bound <= eps) return {direct + tail_value, bound, true, n};
    if (window >= kMaxIndex) return {direct + tail_value, bound, false, n};
    window = std::min(kMaxIndex, window * 2);
  }
}

double l2_norm(const SeqVector& f, double eps) {
  const CertifiedValue v = certified_inner_product(f, f, eps);
  return std::sqrt(std::max(0.0, v.value.real()));
}

}  // namespace graphnorm
