#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oregonator/field.hpp"

namespace oreg {

struct ZeroDimParams {
    std::int64_t F = 1;
    std::int64_t Q = 3;

    bool periodic_regime() const { return 0 < F && F < Q; }
};

// Two-layer scalar state of the second-order map; Psi_n = U_{n-1} - U_n.
struct ZeroState {
    std::int64_t u_prev, u_curr;
};

// U_{n+1} = max{U_n, F+Q+U_{n-1}-max(U_n,Q)} - max{U_n, F+U_{n-1}-max(U_n,Q)}
std::int64_t ud_ode_step(const ZeroState& s, const ZeroDimParams& p);

enum class StepCase { I, II };          // U_n >= Q / U_n < Q (agree at U_n = Q)
enum class StepBranch { Zero, Linear, Cap }; // value 0 / linear form / value Q

struct PiecewiseResult {
    std::int64_t value;
    StepCase step_case;
    StepBranch branch;
    std::string label() const;
};

// Three-branch case forms; value always equals ud_ode_step.
PiecewiseResult piecewise_step(const ZeroState& s, const ZeroDimParams& p);

enum class Stability { Stable, Unstable };

struct Equilibrium {
    double value;
    Stability stability;
    bool from_case1, from_case2;
};

// Equilibrium points of the second-order map; real-valued F, Q accepted.
std::vector<Equilibrium> equilibria(double F, double Q);

enum class IntervalClass { I1, I2, I3 }; // (-inf,-F], (-F,Q-F), [Q-F,inf)

IntervalClass classify_interval(std::int64_t psi, const ZeroDimParams& p);

// Closed form of Psi_{n+2} = Psi_n - Psi_{n+1} with Psi_1, Psi_2 given
// (constants from the solved 2x2 initial-value system).
double psi_closed_form(std::int64_t psi1, std::int64_t psi2, int n);

enum class AttractorKind { Period2, ConstantF, StableEquilibrium, Undecided };

struct Attractor {
    AttractorKind kind = AttractorKind::Undecided;
    std::int64_t lo = 0, hi = 0;  // Period2 values {lo, hi} = {0, Q}
    std::int64_t value = 0;       // ConstantF / StableEquilibrium value
    int entry_step = -1;
};

struct ClassifyResult {
    Attractor attractor;
    std::vector<std::int64_t> trajectory; // U_0, U_1, ...
    std::vector<std::pair<IntervalClass, IntervalClass>> transitions; // (Psi_n, Psi_{n+1})
};

// Iterates the map and classifies the long-time behaviour. Requires the
// periodic regime 0 < F < Q. Period2 reported only after two full confirmed
// periods.
ClassifyResult attractor_classify(std::int64_t u0, std::int64_t u1, const ZeroDimParams& p,
                                  int max_iter = 1000);

} // namespace oreg
