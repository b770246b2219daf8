#include "dobkit/xfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dobkit/errors.hpp"

namespace dobkit {

Domain Domain::z(double sample_time) {
  if (!(sample_time > 0.0))
    throw std::invalid_argument("Domain::z: sample_time must be > 0");
  return {Kind::discrete, sample_time};
}

double Domain::nyquist() const {
  if (!is_discrete()) throw std::invalid_argument("nyquist: continuous domain");
  return M_PI / sample_time;
}

RationalTF::RationalTF(Polynomial num, Polynomial den, Domain domain)
    : num_(std::move(num)), den_(std::move(den)), domain_(domain) {
  if (den_.is_zero()) throw DegenerateLoopError("RationalTF: denominator is identically zero");
}

Complex RationalTF::evaluate(Complex point) const {
  const Complex d = den_(point);
  if (std::abs(d) < 1e-300)
    throw PoleHitError("evaluate: denominator vanished at the requested point");
  return num_(point) / d;
}

Complex RationalTF::at_omega(double omega) const {
  if (domain_.is_discrete())
    return evaluate(std::polar(1.0, omega * domain_.sample_time));
  return evaluate(Complex(0.0, omega));
}

namespace {
void require_same_domain(const RationalTF& a, const RationalTF& b, const char* op) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatchError(std::string(op) + ": operands live in different domains");
}
}  // namespace

RationalTF series(const RationalTF& a, const RationalTF& b) {
  require_same_domain(a, b, "series");
  return RationalTF(a.num() * b.num(), a.den() * b.den(), a.domain());
}

RationalTF parallel(const RationalTF& a, const RationalTF& b) {
  require_same_domain(a, b, "parallel");
  return RationalTF(a.num() * b.den() + b.num() * a.den(), a.den() * b.den(), a.domain());
}

std::vector<Complex> poles(const RationalTF& tf) {
  if (tf.den().degree() < 1) return {};
  return roots(tf.den());
}

std::vector<Complex> zeros(const RationalTF& tf) {
  if (tf.num().degree() < 1) return {};
  return roots(tf.num());
}

PoleClassification classify_poles(const RationalTF& tf) {
  PoleClassification out;
  for (Complex p : poles(tf)) {
    const double margin =
        tf.domain().is_discrete() ? std::abs(p) - 1.0 : p.real();
    if (std::abs(margin) <= kBoundaryTol)
      out.marginal.push_back(p);
    else if (margin > 0.0)
      out.unstable.push_back(p);
    else
      out.stable.push_back(p);
  }
  return out;
}

std::vector<Complex> unstable_poles(const RationalTF& tf) { return classify_poles(tf).unstable; }
std::vector<Complex> marginal_poles(const RationalTF& tf) { return classify_poles(tf).marginal; }

LoopSet sensitivity_from_open_loop(const RationalTF& open_loop, std::string label) {
  const Polynomial closed = open_loop.den() + open_loop.num();
  if (closed.is_zero())
    throw DegenerateLoopError("sensitivity_from_open_loop: 1 + L is identically zero");
  return LoopSet{open_loop,
                 RationalTF(open_loop.den(), closed, open_loop.domain()),
                 RationalTF(open_loop.num(), closed, open_loop.domain()),
                 std::move(label)};
}

std::vector<double> FrequencyResponse::magnitude() const {
  std::vector<double> m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m[i] = std::abs(values[i]);
  return m;
}

std::vector<double> FrequencyResponse::magnitude_db() const {
  std::vector<double> m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m[i] = 20.0 * std::log10(std::abs(values[i]));
  return m;
}

std::vector<double> FrequencyResponse::phase_deg() const {
  std::vector<double> m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    m[i] = std::arg(values[i]) * 180.0 / M_PI;
  return m;
}

FrequencyResponse frequency_response(const RationalTF& tf, std::span<const double> grid) {
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("frequency_response: grid must be strictly increasing");
  if (tf.domain().is_discrete() && !grid.empty()) {
    const double ny = tf.domain().nyquist();
    if (grid.front() <= 0.0 || grid.back() > ny * (1.0 + 1e-12))
      throw std::invalid_argument("frequency_response: discrete grid must lie in (0, pi/T_s]");
  }
  FrequencyResponse fr;
  fr.grid.assign(grid.begin(), grid.end());
  fr.values.resize(grid.size());
  fr.pole_hit.assign(grid.size(), 0);
  fr.domain = tf.domain();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      fr.values[i] = tf.at_omega(grid[i]);
    } catch (const PoleHitError&) {
      fr.values[i] = Complex(std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::quiet_NaN());
      fr.pole_hit[i] = 1;
    }
  }
  return fr;
}

std::vector<double> default_grid(const Domain& domain, double omega_min, double omega_max,
                                 std::size_t n) {
  if (!(omega_min > 0.0) || !(omega_max > omega_min))
    throw std::invalid_argument("default_grid: need 0 < omega_min < omega_max");
  if (domain.is_discrete()) omega_max = std::min(omega_max, domain.nyquist());
  if (n < 2) throw std::invalid_argument("default_grid: need at least 2 points");
  std::vector<double> g(n);
  const double l0 = std::log(omega_min), l1 = std::log(omega_max);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = std::exp(l0 + (l1 - l0) * double(i) / double(n - 1));
  g.back() = omega_max;  // land exactly on the cap
  return g;
}

double limit_sL_at_infinity(const RationalTF& open_loop) {
  if (open_loop.num().is_zero()) return 0.0;
  const int rel = open_loop.relative_degree();
  if (rel < 1)
    throw ImproperTfError("limit_sL_at_infinity: s*L diverges (relative degree < 1)");
  if (rel > 1) return 0.0;
  const Complex ratio = open_loop.num().leading() / open_loop.den().leading();
  return ratio.real();
}

Complex limit_L_at_infinity(const RationalTF& open_loop) {
  if (open_loop.num().is_zero()) return 0.0;
  const int rel = open_loop.relative_degree();
  if (rel < 0)
    throw ImproperTfError("limit_L_at_infinity: improper transfer function");
  if (rel > 0) return 0.0;
  return open_loop.num().leading() / open_loop.den().leading();
}

RationalTF minreal(const RationalTF& tf, double tol) {
  if (tf.num().degree() < 1 || tf.den().degree() < 1) return tf;
  std::vector<Complex> zs = roots(tf.num());
  std::vector<Complex> ps = roots(tf.den());
  std::vector<bool> zer_used(zs.size(), false);
  std::vector<bool> pol_used(ps.size(), false);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (!zer_used[j] && std::abs(ps[i] - zs[j]) <= tol) {
        pol_used[i] = true;
        zer_used[j] = true;
        break;
      }
    }
  }
  std::vector<Complex> zkeep, pkeep;
  for (std::size_t j = 0; j < zs.size(); ++j)
    if (!zer_used[j]) zkeep.push_back(zs[j]);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!pol_used[i]) pkeep.push_back(ps[i]);
  return RationalTF(Polynomial::from_roots(zkeep, tf.num().leading()),
                    Polynomial::from_roots(pkeep, tf.den().leading()), tf.domain());
}

}  // namespace dobkit
