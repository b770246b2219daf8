#include "dobkit/dobmodels.hpp"

#include <stdexcept>
#include <string>

namespace dobkit {

namespace {
void require_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw std::invalid_argument(std::string("DobParams: ") + name + " must be > 0");
}
}  // namespace

void DobParams::validate(bool allow_observer_off) const {
  require_positive(J_m, "J_m");
  require_positive(J_mn, "J_mn");
  require_positive(K_tau, "K_tau");
  require_positive(K_tau_n, "K_tau_n");
  require_positive(T_s, "T_s");
  if (g_dob < 0.0 || (!allow_observer_off && g_dob == 0.0))
    throw std::invalid_argument("DobParams: g_dob must be > 0");
  if (K_P < 0.0) throw std::invalid_argument("DobParams: K_P must be >= 0");
  if (K_D < 0.0) throw std::invalid_argument("DobParams: K_D must be >= 0");
}

LoopSet inner_loop_continuous(const DobParams& params, bool allow_observer_off) {
  params.validate(allow_observer_off);
  const double ag = params.alpha() * params.g_dob;
  RationalTF open_loop(Polynomial{ag}, Polynomial{0.0, 1.0}, Domain::s());
  return sensitivity_from_open_loop(open_loop, "inner-continuous");
}

LoopSet inner_loop_discrete(const DobParams& params, bool allow_observer_off) {
  params.validate(allow_observer_off);
  const double agt = params.alpha() * params.g_dob * params.T_s;
  RationalTF open_loop(Polynomial{agt}, Polynomial{-1.0, 1.0}, Domain::z(params.T_s));
  return sensitivity_from_open_loop(open_loop, "inner-discrete");
}

namespace {

RationalTF pd_factor_discrete(const DobParams& p, const Domain& dom) {
  if (p.K_P == 0.0 && p.K_D == 0.0)
    throw std::invalid_argument("outer loop: K_P and K_D cannot both be zero");
  if (p.K_D == 0.0) return RationalTF(Polynomial{p.K_P}, Polynomial{1.0}, dom);
  RationalTF prop(Polynomial{p.K_P}, Polynomial{1.0}, dom);
  RationalTF deriv(Polynomial{-p.K_D, p.K_D}, Polynomial{0.0, p.T_s}, dom);
  if (p.K_P == 0.0) return deriv;
  return parallel(prop, deriv);
}

RationalTF inner_reference_factor_discrete(const DobParams& p, const Domain& dom) {
  const double a = p.alpha();
  const double gt = p.g_dob * p.T_s;
  return RationalTF(a * Polynomial{-1.0, 1.0 + gt},
                    Polynomial{-(1.0 - a * gt), 1.0}, dom);
}

}  // namespace

LoopSet outer_loop_discrete(const DobParams& params, bool allow_observer_off) {
  params.validate(allow_observer_off);
  const Domain dom = Domain::z(params.T_s);
  const RationalTF pd = pd_factor_discrete(params, dom);
  const RationalTF inner = inner_reference_factor_discrete(params, dom);
  const double h = params.T_s * params.T_s / 2.0;
  const RationalTF plant(h * Polynomial{1.0, 1.0},
                         Polynomial{-1.0, 1.0} * Polynomial{-1.0, 1.0}, dom);
  return sensitivity_from_open_loop(series(series(pd, inner), plant), "outer-discrete");
}

LoopSet outer_loop_continuous(const DobParams& params, bool allow_observer_off) {
  params.validate(allow_observer_off);
  const Domain dom = Domain::s();
  const double a = params.alpha();
  const RationalTF pd(Polynomial{params.K_P, params.K_D}, Polynomial{1.0}, dom);
  const RationalTF inner(a * Polynomial{params.g_dob, 1.0},
                         Polynomial{a * params.g_dob, 1.0}, dom);
  const RationalTF plant(Polynomial{1.0}, Polynomial{0.0, 0.0, 1.0}, dom);
  return sensitivity_from_open_loop(series(series(pd, inner), plant), "outer-continuous");
}

ClosedLoopMaps closed_loop_maps_discrete(const DobParams& params) {
  const LoopSet inner = inner_loop_discrete(params);
  const LoopSet outer = outer_loop_discrete(params);
  const Domain dom = Domain::z(params.T_s);
  const RationalTF inv_jm(Polynomial{1.0 / params.J_m}, Polynomial{1.0}, dom);
  const RationalTF half_integrator((params.T_s / 2.0) * Polynomial{1.0, 1.0},
                                   Polynomial{-1.0, 1.0}, dom);
  return ClosedLoopMaps{
      series(outer.open_loop, outer.sensitivity),
      series(inv_jm, series(inner.sensitivity, outer.sensitivity)),
      series(series(inner.complementary, outer.complementary), half_integrator),
      outer.complementary,
      inner,
      outer};
}

}  // namespace dobkit
