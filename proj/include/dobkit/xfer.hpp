#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dobkit/poly.hpp"

namespace dobkit {

// Evaluation domain of a transfer function: Laplace s or discrete z with a
// fixed sample time (seconds).
struct Domain {
  enum class Kind { continuous, discrete };
  Kind kind = Kind::continuous;
  double sample_time = 0.0;

  static Domain s() { return {Kind::continuous, 0.0}; }
  static Domain z(double sample_time);
  bool is_discrete() const { return kind == Kind::discrete; }
  double nyquist() const;  // pi / T_s; throws for continuous domain

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.kind == b.kind && (a.kind == Kind::continuous || a.sample_time == b.sample_time);
  }
};

// Ratio of two polynomials in s or z. No automatic pole/zero cancellation:
// loop algebra must keep uncancelled factors visible (see minreal for the
// explicit reduction).
class RationalTF {
 public:
  RationalTF(Polynomial num, Polynomial den, Domain domain);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const Domain& domain() const { return domain_; }

  // num(point)/den(point); throws PoleHitError when |den(point)| underflows
  // the 1e-300 guard.
  Complex evaluate(Complex point) const;

  // Response at angular frequency omega (rad/s): tf(j w) or tf(e^{j w T_s}).
  Complex at_omega(double omega) const;

  int relative_degree() const { return den_.degree() - num_.degree(); }

 private:
  Polynomial num_;
  Polynomial den_;
  Domain domain_;
};

RationalTF series(const RationalTF& a, const RationalTF& b);
RationalTF parallel(const RationalTF& a, const RationalTF& b);

std::vector<Complex> poles(const RationalTF& tf);
std::vector<Complex> zeros(const RationalTF& tf);

// Stability-boundary classification with tolerance 1e-9: continuous poles
// split on Re(p), discrete on |p| - 1. Poles within the band are marginal
// and never counted as unstable.
struct PoleClassification {
  std::vector<Complex> stable;
  std::vector<Complex> marginal;
  std::vector<Complex> unstable;
};
PoleClassification classify_poles(const RationalTF& tf);
std::vector<Complex> unstable_poles(const RationalTF& tf);
std::vector<Complex> marginal_poles(const RationalTF& tf);

inline constexpr double kBoundaryTol = 1e-9;

// {L, S, T} for one loop: S = 1/(1+L) and T = L/(1+L) over the shared
// denominator den(L) + num(L), so S + T = 1 holds exactly.
struct LoopSet {
  RationalTF open_loop;
  RationalTF sensitivity;
  RationalTF complementary;
  std::string label;
};
LoopSet sensitivity_from_open_loop(const RationalTF& open_loop, std::string label = "");

struct FrequencyResponse {
  std::vector<double> grid;            // rad/s, strictly increasing
  std::vector<Complex> values;
  std::vector<std::uint8_t> pole_hit;  // per-point flag, response left NaN
  Domain domain;

  std::vector<double> magnitude() const;
  std::vector<double> magnitude_db() const;
  std::vector<double> phase_deg() const;
};

// Pointwise response over a grid. A pole hit flags the point instead of
// aborting the sweep. Discrete grids must stay within (0, pi/T_s].
FrequencyResponse frequency_response(const RationalTF& tf, std::span<const double> grid);

// Logarithmic grid with n points; discrete domains are capped at Nyquist.
std::vector<double> default_grid(const Domain& domain, double omega_min, double omega_max,
                                 std::size_t n = 2000);

// lim_{s->inf} s*L(s); requires relative degree >= 1 (finite limit).
double limit_sL_at_infinity(const RationalTF& open_loop);
// lim_{z->inf} L(z); requires a proper transfer function.
Complex limit_L_at_infinity(const RationalTF& open_loop);

// Cancel pole/zero pairs closer than tol. Opt-in reduction only.
RationalTF minreal(const RationalTF& tf, double tol = 1e-9);

}  // namespace dobkit
