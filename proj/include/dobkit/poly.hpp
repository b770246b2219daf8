#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace dobkit {

using Complex = std::complex<double>;

// Dense polynomial with complex coefficients, stored lowest degree first.
// Trailing (highest-degree) coefficients below 1e-12 * max|coeff| are
// trimmed on construction, so the leading coefficient of a nonzero
// polynomial is always meaningfully nonzero. The zero polynomial has an
// empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Complex> coeffs);
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex c);
  // lead * prod (x - r_i)
  static Polynomial from_roots(std::span<const Complex> roots, Complex lead = 1.0);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }
  Complex coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Complex(0.0); }

  Complex operator()(Complex x) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Complex s, const Polynomial& p);
  Polynomial operator-() const;

  // max |coeff|; 0 for the zero polynomial
  double max_abs_coeff() const;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct RootsOptions {
  int max_sweeps = 200;       // Aberth iteration budget
  double step_tol = 1e-13;    // converged when max step < step_tol * (1 + |root|)
};

// All roots (with multiplicity) of a polynomial of degree >= 1.
// Aberth-Ehrlich simultaneous iteration, backward-error stopping, a
// cluster-mean pass for multiple roots and one Newton polish per root.
// Throws ZeroPolynomialError for the zero polynomial (or degree 0) and
// NonConvergenceError when the sweep budget is exhausted.
std::vector<Complex> roots(const Polynomial& p, const RootsOptions& opt = {});

}  // namespace dobkit
