#include "dobkit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dobkit/errors.hpp"

namespace dobkit {

namespace {
constexpr double kTrimRel = 1e-12;
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : coeffs_(coeffs) {
  trim();
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(Complex c) { return Polynomial{c}; }

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (Complex r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  // lowest degree first
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  double scale = 0.0;
  for (const Complex& c : coeffs_) scale = std::max(scale, std::abs(c));
  const double tol = kTrimRel * scale;
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
}

Complex Polynomial::operator()(Complex x) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = double(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial Polynomial::operator-() const {
  std::vector<Complex> c(coeffs_);
  for (Complex& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Complex> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs_);
  for (Complex& v : c) v *= s;
  return Polynomial(std::move(c));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

// Backward-error scale sum |c_j| * t^j; a root candidate x is accepted when
// |p(x)| <= 4n * eps * sum, i.e. it is an exact root of a polynomial with
// relatively perturbed coefficients.
double coeff_error_scale(const std::vector<Complex>& c, double t) {
  double acc = 0.0;
  double tp = 1.0;
  for (const Complex& v : c) {
    acc += std::abs(v) * tp;
    tp *= t;
  }
  return acc;
}

}  // namespace

std::vector<Complex> roots(const Polynomial& p, const RootsOptions& opt) {
  if (p.is_zero()) throw ZeroPolynomialError("roots: zero polynomial has no defined root set");
  const std::vector<Complex>& c = p.coeffs();
  const int n = p.degree();
  if (n == 0) return {};
  if (n == 1) return {-c[0] / c[1]};

  // Exact zero roots first; they cost nothing and improve conditioning.
  std::size_t nzero = 0;
  while (nzero < c.size() - 1 && c[nzero] == Complex(0.0)) ++nzero;
  std::vector<Complex> out(nzero, Complex(0.0));
  std::vector<Complex> work(c.begin() + nzero, c.end());
  const int m = static_cast<int>(work.size()) - 1;
  if (m == 0) return out;
  if (m == 1) {
    out.push_back(-work[0] / work[1]);
    return out;
  }

  // Initial guesses on a circle sized by the Cauchy bound.
  double bound = 0.0;
  for (int i = 0; i < m; ++i) bound = std::max(bound, std::abs(work[i] / work[m]));
  const double radius = 1.0 + bound;
  std::vector<Complex> x(m);
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * M_PI * (k + 0.25) / m + 0.577 / m;
    x[k] = radius * Complex(std::cos(theta), std::sin(theta));
  }

  const double eps = std::numeric_limits<double>::epsilon();
  const double accept_factor = 4.0 * (m + 1) * eps;
  std::vector<bool> frozen(m, false);

  auto eval_both = [&](Complex t, Complex& val, Complex& der) {
    val = work[m];
    der = 0.0;
    for (int i = m - 1; i >= 0; --i) {
      der = der * t + val;
      val = val * t + work[i];
    }
  };

  bool all_done = false;
  for (int sweep = 0; sweep < opt.max_sweeps && !all_done; ++sweep) {
    double max_rel_step = 0.0;
    for (int i = 0; i < m; ++i) {
      if (frozen[i]) continue;
      Complex val, der;
      eval_both(x[i], val, der);
      if (std::abs(val) <= accept_factor * coeff_error_scale(work, std::abs(x[i]))) {
        frozen[i] = true;
        continue;
      }
      Complex newton = (der != Complex(0.0)) ? val / der : Complex(0.0);
      if (der == Complex(0.0)) {
        // landed on a critical point; nudge off it
        x[i] += radius * 1e-6 * Complex(1.0, 1.0);
        max_rel_step = 1.0;
        continue;
      }
      Complex repulsion = 0.0;
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        Complex d = x[i] - x[j];
        if (d == Complex(0.0)) d = Complex(eps * radius, eps * radius);
        repulsion += 1.0 / d;
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = (std::abs(denom) > eps) ? newton / denom : newton;
      x[i] -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(x[i])));
    }
    all_done = true;
    for (int i = 0; i < m; ++i) all_done = all_done && frozen[i];
    if (!all_done && max_rel_step < opt.step_tol) all_done = true;
  }

  // Final acceptance check; an exhausted budget with a bad residual signals
  // ill-conditioned input.
  for (int i = 0; i < m; ++i) {
    Complex val, der;
    eval_both(x[i], val, der);
    const double scale = coeff_error_scale(work, std::abs(x[i]));
    if (std::abs(val) > 1e6 * accept_factor * scale)
      throw NonConvergenceError("roots: Aberth iteration did not converge within budget");
  }

  // One guarded Newton polish per root.
  for (int i = 0; i < m; ++i) {
    Complex val, der;
    eval_both(x[i], val, der);
    if (der == Complex(0.0)) continue;
    const Complex cand = x[i] - val / der;
    Complex val2, der2;
    eval_both(cand, val2, der2);
    if (std::abs(val2) < std::abs(val)) x[i] = cand;
  }

  // Cluster-mean pass: approximations to an s-fold root straddle it at
  // distance ~eps^(1/s); their mean is accurate to ~eps. Replace a cluster
  // by its mean only when that does not increase the residual, which keeps
  // genuinely distinct close roots apart.
  std::vector<int> group(m);
  for (int i = 0; i < m; ++i) group[i] = i;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double tol = 1e-5 * (1.0 + std::abs(x[i]));
      if (std::abs(x[i] - x[j]) <= tol) {
        const int gi = group[i], gj = group[j];
        for (int k = 0; k < m; ++k)
          if (group[k] == gj) group[k] = gi;
      }
    }
  for (int g = 0; g < m; ++g) {
    Complex sum = 0.0;
    int count = 0;
    for (int i = 0; i < m; ++i)
      if (group[i] == g) {
        sum += x[i];
        ++count;
      }
    if (count < 2) continue;
    const Complex mean = sum / double(count);
    Complex vmean, d;
    eval_both(mean, vmean, d);
    double vmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
      if (group[i] == g) {
        Complex v, dd;
        eval_both(x[i], v, dd);
        vmin = std::min(vmin, std::abs(v));
      }
    if (std::abs(vmean) <= vmin) {
      for (int i = 0; i < m; ++i)
        if (group[i] == g) x[i] = mean;
    }
  }

  out.insert(out.end(), x.begin(), x.end());
  return out;
}

}  // namespace dobkit
