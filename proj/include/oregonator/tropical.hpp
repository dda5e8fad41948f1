#pragma once

#include <span>
#include <utility>
#include <vector>

#include "oregonator/field.hpp"

namespace oreg {

struct OregonatorParams {
    double a = 25.0;   // rate scale
    double f = 1.5;    // stoichiometric factor
    double q = 8e-4;   // small parameter
    double Du = 0.0;
    double Dv = 0.0;
    bool allow_zero_rate = false; // a == 0 admitted for tests only

    void validate() const;
};

struct TropicalStepParams {
    double eps = 1e-2; // time-step parameter, > 0
    int alpha = 0;     // u-stencil offset
    int beta = 0;      // v-stencil offset

    void validate() const;
};

// One step of the positivity-preserving tropical scheme for the
// diffusion-free Oregonator:
//   u' = (e^-1 u + a u + a f q v / (u+q)) / (e^-1 + a u + a f v / (u+q))
//   v' = (e^-1 v + u) / (e^-1 + 1)
std::pair<double, double> trop_ode_step(double u, double v, const OregonatorParams& p,
                                        double eps);

// Spatial variant: u is replaced by its five-point mean m_alpha in the
// reaction terms, v relaxes towards m_beta(u).
std::pair<RealField2D, RealField2D> trop_pde_step(const RealField2D& u, const RealField2D& v,
                                                  const OregonatorParams& p,
                                                  const TropicalStepParams& sp,
                                                  const BoundaryRule<double>& b);

struct TrajectoryPoint {
    double t, u, v;
};

// Adaptive embedded Runge-Kutta reference for the continuous system
//   du/dt = a{u(1-u) - f v (u-q)/(u+q)},  dv/dt = u - v.
// Used only as an oracle; local error controlled to tol.
std::vector<TrajectoryPoint> ode_reference(double u0, double v0, const OregonatorParams& p,
                                           double t_end, double tol = 1e-10);

enum class SchemeKind { Ode, Pde };

// Error at fixed horizon between the tropical scheme (steps of size eps)
// and ode_reference, for each eps in eps_list (strictly decreasing).
std::vector<std::pair<double, double>> consistency_order(SchemeKind scheme,
                                                         const OregonatorParams& p, double u0,
                                                         double v0, double horizon,
                                                         std::span<const double> eps_list);

// Empirical order from consecutive (eps, error) pairs: log2(e_i / e_{i+1})
// per eps halving, averaged.
double empirical_order(std::span<const std::pair<double, double>> errors);

} // namespace oreg
