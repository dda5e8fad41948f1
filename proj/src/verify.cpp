#include "oregonator/verify.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

#include "oregonator/automaton.hpp"
#include "oregonator/tropical.hpp"
#include "oregonator/ultradiscrete.hpp"
#include "oregonator/zerodim.hpp"

namespace oreg {

namespace {

CheckResult result(std::string name, bool pass, std::string detail) {
    return {std::move(name), pass, std::move(detail)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// ---- limits ---------------------------------------------------------------

CheckResult check_limit_analytic() {
    const double lambda = 0.1;
    const std::array<double, 2> in{1.0, 1.0};
    const double gap = ud_limit_probe(in, LimitMap::MaxOfTerms, lambda);
    const double expect = lambda * std::log(2.0);
    const bool pass = std::abs(gap - expect) <= 1e-12;
    return result("limits/analytic-two-term",
                  pass, "gap=" + fmt(gap) + " expected=" + fmt(expect));
}

CheckResult check_limit_convergence() {
    std::mt19937 rng(20240501);
    std::uniform_int_distribution<int> small(-5, 5);
    std::uniform_int_distribution<int> epar(0, 5);
    const std::array<double, 3> lambdas{1e-1, 1e-2, 1e-3};
    int bad_monotone = 0, bad_final = 0;
    double worst_final = 0.0;
    const int trials = 120;
    for (int t = 0; t < trials; ++t) {
        const std::array<double, 6> in{double(small(rng)), double(small(rng)),
                                       double(small(rng)), double(small(rng)),
                                       double(small(rng)), double(epar(rng))};
        double prev = -1.0;
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            const double g = ud_limit_probe(in, LimitMap::OregonatorOde, lambdas[i]);
            if (i > 0 && g > prev + 1e-12) ++bad_monotone;
            if (i + 1 == lambdas.size()) {
                worst_final = std::max(worst_final, g);
                if (g > 0.05) ++bad_final;
            }
            prev = g;
        }
    }
    const bool pass = bad_monotone == 0 && bad_final == 0;
    return result("limits/gap-decreasing-random-inputs", pass,
                  std::to_string(trials) + " inputs, worst final gap " + fmt(worst_final));
}

// ---- ca-equiv -------------------------------------------------------------

// All 2^18 two-layer 3x3 configurations, compared at the centre cell.
CheckResult check_ca_equiv_exhaustive() {
    const auto b = BoundaryRule<std::int64_t>::fixed(0);
    long mismatch_full = 0, mismatch_tsu = 0;
    for (std::uint32_t bits = 0; bits < (1u << 18); ++bits) {
        CAState s{IntField2D(3, 3, 0), IntField2D(3, 3, 0), 0};
        for (int i = 0; i < 9; ++i) {
            s.w_curr.at(i % 3, i / 3) = (bits >> i) & 1;
            s.w_prev.at(i % 3, i / 3) = (bits >> (9 + i)) & 1;
        }
        const auto simple = ca_step_simple(s, 1, 1, 0, b);
        if (ca_step_full(s, 1, -1, 1, 0, b).at(1, 1) != simple.at(1, 1)) ++mismatch_full;
        if (tsu_step(s.w_curr, s.w_prev, b).at(1, 1) != simple.at(1, 1)) ++mismatch_tsu;
    }
    const bool pass = mismatch_full == 0 && mismatch_tsu == 0;
    return result("ca-equiv/exhaustive-3x3-sweep", pass,
                  "full-vs-simple mismatches " + std::to_string(mismatch_full) +
                      ", simple-vs-tsu " + std::to_string(mismatch_tsu));
}

CheckResult check_ca_equiv_random() {
    std::mt19937 rng(911);
    std::bernoulli_distribution bit(0.4);
    const auto b = BoundaryRule<std::int64_t>::fixed(0);
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        CAState s{IntField2D(16, 16, 0), IntField2D(16, 16, 0), 0};
        for (int k = 0; k < 16; ++k)
            for (int j = 0; j < 16; ++j) {
                s.w_curr.at(j, k) = bit(rng);
                s.w_prev.at(j, k) = bit(rng);
            }
        const auto simple = ca_step_simple(s, 1, 1, 0, b);
        if (ca_step_full(s, 1, -1, 1, 0, b) != simple) ++mismatches;
        if (tsu_step(s.w_curr, s.w_prev, b) != simple) ++mismatches;
    }
    return result("ca-equiv/random-16x16-states", mismatches == 0,
                  "200 states, mismatches " + std::to_string(mismatches));
}

// ---- attractor ------------------------------------------------------------

CheckResult check_attractor_sweep() {
    long cases = 0, failures = 0;
    std::string first_failure;
    for (std::int64_t F = 1; F <= 4; ++F)
        for (std::int64_t Q = F + 1; Q <= 8; ++Q)
            for (std::int64_t u0 = -8; u0 <= 8; ++u0)
                for (std::int64_t u1 = -8; u1 <= 8; ++u1) {
                    ++cases;
                    const auto r = attractor_classify(u0, u1, {F, Q}, 200);
                    const bool want_const = (u0 == F && u1 == F);
                    bool ok;
                    if (want_const)
                        ok = r.attractor.kind == AttractorKind::ConstantF;
                    else
                        ok = r.attractor.kind == AttractorKind::Period2 &&
                             r.attractor.lo == 0 && r.attractor.hi == Q;
                    if (!ok) {
                        ++failures;
                        if (first_failure.empty())
                            first_failure = " first at F=" + std::to_string(F) +
                                            " Q=" + std::to_string(Q) +
                                            " u0=" + std::to_string(u0) +
                                            " u1=" + std::to_string(u1);
                    }
                }
    return result("attractor/global-sweep", failures == 0,
                  std::to_string(cases) + " cases, failures " + std::to_string(failures) +
                      first_failure);
}

// ---- consistency ----------------------------------------------------------

CheckResult check_consistency(SchemeKind kind, const char* name) {
    OregonatorParams p;
    p.a = 1.0;
    p.f = 1.0;
    p.q = 1.0;
    const std::array<double, 3> eps{1e-2, 5e-3, 2.5e-3};
    const auto errs = consistency_order(kind, p, 0.5, 0.3, 1.0, eps);
    const double order = empirical_order(errs);
    const bool pass = order >= 0.8 && order <= 1.2;
    return result(name, pass, "empirical order " + fmt(order));
}

CheckResult check_mass_conservation() {
    OregonatorParams p;
    p.a = 0.0;
    p.allow_zero_rate = true;
    TropicalStepParams sp;
    sp.eps = 0.1;
    sp.alpha = 1;
    sp.beta = 1;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> val(0.2, 2.0);
    RealField2D u(16, 16), v(16, 16);
    for (int k = 0; k < 16; ++k)
        for (int j = 0; j < 16; ++j) {
            u.at(j, k) = val(rng);
            v.at(j, k) = val(rng);
        }
    const double before = field_sum(u);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        auto [un, vn] = trop_pde_step(u, v, p, sp, BoundaryRule<double>::periodic());
        u = std::move(un);
        v = std::move(vn);
        worst = std::max(worst, std::abs(field_sum(u) - before) / before);
    }
    return result("consistency/diffusion-mass-conservation", worst <= 1e-12,
                  "worst relative drift " + fmt(worst));
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

} // namespace

std::vector<CheckResult> verify_limits() {
    return {check_limit_analytic(), check_limit_convergence()};
}

std::vector<CheckResult> verify_ca_equiv() {
    return {check_ca_equiv_exhaustive(), check_ca_equiv_random()};
}

std::vector<CheckResult> verify_attractor() {
    return {check_attractor_sweep()};
}

std::vector<CheckResult> verify_consistency() {
    return {check_consistency(SchemeKind::Ode, "consistency/ode-order"),
            check_consistency(SchemeKind::Pde, "consistency/pde-order"),
            check_mass_conservation()};
}

std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> out;
    append(out, verify_limits());
    append(out, verify_ca_equiv());
    append(out, verify_attractor());
    append(out, verify_consistency());
    return out;
}

} // namespace oreg
