#include "oregonator/zerodim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oreg {

std::int64_t ud_ode_step(const ZeroState& s, const ZeroDimParams& p) {
    check_guard(s.u_prev);
    check_guard(s.u_curr);
    check_guard(p.F);
    check_guard(p.Q);
    const std::int64_t mq = std::max(s.u_curr, p.Q);
    const std::int64_t r = std::max(s.u_curr, p.F + p.Q + s.u_prev - mq) -
                           std::max(s.u_curr, p.F + s.u_prev - mq);
    check_guard(r);
    return r;
}

std::string PiecewiseResult::label() const {
    std::string out = step_case == StepCase::I ? "I/" : "II/";
    switch (branch) {
    case StepBranch::Zero: out += "0"; break;
    case StepBranch::Linear: out += step_case == StepCase::I ? "F+Q+U''-2U'" : "F+Psi"; break;
    case StepBranch::Cap: out += "Q"; break;
    }
    return out;
}

PiecewiseResult piecewise_step(const ZeroState& s, const ZeroDimParams& p) {
    const std::int64_t F = p.F, Q = p.Q, up = s.u_prev, uc = s.u_curr;
    // Case I: U_n >= Q, value = max(0, x+Q) - max(0, x) with x = F+U_{n-1}-2U_n.
    // Case II: U_n <= Q, value = max(0, F+Psi) - max(0, F+Psi-Q).
    // On 0 < F < Q these are exactly the printed three-branch forms; outside
    // that regime the printed conditions overlap and the max form is the one
    // matching the direct map on all of Z.
    if (uc >= Q) {
        const std::int64_t x = F + up - 2 * uc;
        const std::int64_t hi = std::max<std::int64_t>(0, x + Q);
        const std::int64_t lo = std::max<std::int64_t>(0, x);
        if (hi == 0 && lo == 0) return {0, StepCase::I, StepBranch::Zero};
        if (hi == x + Q && lo == x) return {Q, StepCase::I, StepBranch::Cap};
        return {hi - lo, StepCase::I, StepBranch::Linear};
    }
    const std::int64_t y = F + up - uc; // F + Psi_n
    const std::int64_t hi = std::max<std::int64_t>(0, y);
    const std::int64_t lo = std::max<std::int64_t>(0, y - Q);
    if (hi == 0 && lo == 0) return {0, StepCase::II, StepBranch::Zero};
    if (hi == y && lo == y - Q) return {Q, StepCase::II, StepBranch::Cap};
    return {hi - lo, StepCase::II, StepBranch::Linear};
}

std::vector<Equilibrium> equilibria(double F, double Q) {
    struct Cand {
        double value;
        bool c1, c2;
    };
    std::vector<Cand> cands;
    auto add = [&cands](double v, bool case1) {
        for (auto& c : cands)
            if (c.value == v) {
                (case1 ? c.c1 : c.c2) = true;
                return;
            }
        cands.push_back({v, case1, !case1});
    };
    // case I (U >= Q)
    if (F + Q <= 0 && F <= 0) add(0.0, true);
    if (F >= 0 && F >= Q) add(Q, true);
    // case II (U <= Q)
    if (F <= Q && F <= 0) add(0.0, false);
    if (0 < F && F < Q) add(F, false);
    if (F >= 0 && F >= Q) add(Q, false);

    std::vector<Equilibrium> out;
    for (const auto& c : cands) {
        const bool is_unstable_f = (0 < F && F < Q && c.value == F);
        out.push_back({c.value, is_unstable_f ? Stability::Unstable : Stability::Stable,
                       c.c1, c.c2});
    }
    std::sort(out.begin(), out.end(),
              [](const Equilibrium& a, const Equilibrium& b) { return a.value < b.value; });
    return out;
}

IntervalClass classify_interval(std::int64_t psi, const ZeroDimParams& p) {
    if (!p.periodic_regime()) throw std::invalid_argument("requires 0 < F < Q");
    if (psi <= -p.F) return IntervalClass::I1;
    if (psi < p.Q - p.F) return IntervalClass::I2;
    return IntervalClass::I3;
}

double psi_closed_form(std::int64_t psi1, std::int64_t psi2, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double s5 = std::sqrt(5.0);
    const double r1 = (-1.0 - s5) / 2.0; // dominant, alternating sign
    const double r2 = (-1.0 + s5) / 2.0;
    // c1 + c2 = Psi_1, c1*r1 + c2*r2 = Psi_2
    const double c1 = (r2 * static_cast<double>(psi1) - static_cast<double>(psi2)) / s5;
    const double c2 = (static_cast<double>(psi2) - r1 * static_cast<double>(psi1)) / s5;
    return c1 * std::pow(r1, n - 1) + c2 * std::pow(r2, n - 1);
}

ClassifyResult attractor_classify(std::int64_t u0, std::int64_t u1, const ZeroDimParams& p,
                                  int max_iter) {
    if (!p.periodic_regime())
        throw std::invalid_argument("attractor_classify requires 0 < F < Q");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    ClassifyResult res;
    auto& traj = res.trajectory;
    traj = {u0, u1};
    traj.reserve(max_iter + 2);
    for (int i = 0; i < max_iter; ++i)
        traj.push_back(ud_ode_step({traj[traj.size() - 2], traj.back()}, p));

    for (std::size_t n = 1; n + 1 < traj.size(); ++n)
        res.transitions.emplace_back(classify_interval(traj[n - 1] - traj[n], p),
                                     classify_interval(traj[n] - traj[n + 1], p));

    // two full confirmed periods: the pair (0,Q) or (Q,0) followed by four
    // more alternating values
    for (std::size_t n = 0; n + 5 < traj.size(); ++n) {
        const bool fwd = traj[n] == 0 && traj[n + 1] == p.Q;
        const bool rev = traj[n] == p.Q && traj[n + 1] == 0;
        if ((fwd || rev) && traj[n + 2] == traj[n] && traj[n + 3] == traj[n + 1] &&
            traj[n + 4] == traj[n] && traj[n + 5] == traj[n + 1]) {
            res.attractor = {AttractorKind::Period2, 0, p.Q, 0, static_cast<int>(n)};
            return res;
        }
    }
    for (std::size_t n = 0; n + 2 < traj.size(); ++n) {
        if (traj[n] == traj[n + 1] && traj[n + 1] == traj[n + 2]) {
            const auto kind = traj[n] == p.F ? AttractorKind::ConstantF
                                             : AttractorKind::StableEquilibrium;
            res.attractor = {kind, 0, 0, traj[n], static_cast<int>(n)};
            return res;
        }
    }
    res.attractor = {AttractorKind::Undecided, 0, 0, 0, -1};
    return res;
}

} // namespace oreg
