#include "dobkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dobkit {

namespace {

// Abscissae/weights for 15-point Gauss-Legendre on [-1, 1].
constexpr double kNodes[15] = {
    -0.98799251802048542849, -0.93727339240070590431, -0.84820658341042721620,
    -0.72441773136017004742, -0.57097217260853884754, -0.39415134707756336990,
    -0.20119409399743452230, 0.0,
    0.20119409399743452230,  0.39415134707756336990,  0.57097217260853884754,
    0.72441773136017004742,  0.84820658341042721620,  0.93727339240070590431,
    0.98799251802048542849};
constexpr double kWeights[15] = {
    0.03075324199611726835, 0.07036604748810812471, 0.10715922046717193501,
    0.13957067792615431445, 0.16626920581699393355, 0.18616100001556221103,
    0.19843148532711157646, 0.20257824192556127288,
    0.19843148532711157646, 0.18616100001556221103, 0.16626920581699393355,
    0.13957067792615431445, 0.10715922046717193501, 0.07036604748810812471,
    0.03075324199611726835};

double adaptive_impl(const Integrand& f, double a, double b, double whole, double abs_tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double left = gauss15(f, a, m);
  const double right = gauss15(f, m, b);
  const double err = std::abs(left + right - whole);
  if (err <= abs_tol || depth <= 0) return left + right;
  return adaptive_impl(f, a, m, left, 0.5 * abs_tol, depth - 1) +
         adaptive_impl(f, m, b, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double gauss15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 15; ++i) acc += kWeights[i] * f(c + h * kNodes[i]);
  return acc * h;
}

double integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                          int max_depth) {
  if (a == b) return 0.0;
  return adaptive_impl(f, a, b, gauss15(f, a, b), abs_tol, max_depth);
}

double integrate_log_singular(const Integrand& f, double a, double b,
                              std::span<const double> singularities, double abs_tol,
                              double shell_tol) {
  if (!(b > a)) {
    if (a == b) return 0.0;
    throw std::invalid_argument("integrate_log_singular: need a <= b");
  }
  std::vector<double> cuts;
  for (double s : singularities)
    if (s >= a && s <= b) cuts.push_back(s);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [&](double x, double y) { return std::abs(x - y) < 1e-14 * (b - a); }),
             cuts.end());

  // Shrink dyadic shells from the smooth side toward the singular point s.
  // Each shell is one Gauss panel; the log integrand varies by only ln 2
  // across a shell, so the panel is accurate. Stops once a shell's
  // contribution is negligible; the remaining sliver integrates x*ln(x)-like
  // mass that is below shell_tol by construction.
  auto toward = [&](double s, double far, double sign) {
    double total = 0.0;
    double width = std::abs(far - s);
    for (int k = 0; k < 60 && width > 0.0; ++k) {
      const double half = 0.5 * width;
      const double lo = s + sign * half;
      const double hi = s + sign * width;
      const double piece = gauss15(f, std::min(lo, hi), std::max(lo, hi));
      total += piece;
      width = half;
      if (std::abs(piece) < shell_tol && k > 2) break;
    }
    return total;
  };

  std::vector<double> edges;
  edges.push_back(a);
  for (double c : cuts) edges.push_back(c);
  edges.push_back(b);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    if (hi <= lo) continue;
    const bool sing_lo = std::binary_search(cuts.begin(), cuts.end(), lo);
    const bool sing_hi = std::binary_search(cuts.begin(), cuts.end(), hi);
    if (!sing_lo && !sing_hi) {
      total += integrate_adaptive(f, lo, hi, abs_tol);
    } else if (sing_lo && !sing_hi) {
      total += toward(lo, hi, +1.0);
    } else if (!sing_lo && sing_hi) {
      total += toward(hi, lo, -1.0);
    } else {
      const double mid = 0.5 * (lo + hi);
      total += toward(lo, mid, +1.0);
      total += toward(hi, mid, -1.0);
    }
  }
  return total;
}

}  // namespace dobkit
