#pragma once

#include <functional>
#include <span>

namespace dobkit {

using Integrand = std::function<double(double)>;

// Fixed 15-point Gauss-Legendre panel. Open nodes: the endpoints are never
// evaluated, which lets panels butt up against integrable singularities.
double gauss15(const Integrand& f, double a, double b);

// Adaptive bisection on the Gauss panel: a panel is accepted when the
// whole-panel estimate agrees with the sum of its halves.
double integrate_adaptive(const Integrand& f, double a, double b, double abs_tol,
                          int max_depth = 48);

// Integrate over [a, b] where f has integrable (log-type) singularities at
// the listed points. The interval is split at each singularity and dyadic
// shells shrink geometrically toward it until a shell contributes less than
// shell_tol. Singularities may sit at the endpoints.
double integrate_log_singular(const Integrand& f, double a, double b,
                              std::span<const double> singularities, double abs_tol,
                              double shell_tol = 1e-10);

}  // namespace dobkit
