// Acceptance gate: one line per criterion, exit 0 iff all pass.
// All tolerances and sweep ranges are pinned here.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oregonator/automaton.hpp"
#include "oregonator/tropical.hpp"
#include "oregonator/ultradiscrete.hpp"
#include "oregonator/verify.hpp"
#include "oregonator/zerodim.hpp"

using namespace oreg;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail = "") {
    std::printf("%2d %-52s %s%s%s\n", idx, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass) ++g_failures;
}

bool suites_pass(const std::vector<CheckResult>& rs, std::string& detail) {
    bool ok = true;
    for (const auto& r : rs) {
        if (!r.passed) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + r.name + ": " + r.detail;
        }
    }
    return ok;
}

// 1. transition tables of the simplified and TSU rules, all four columns
void criterion_tables() {
    const auto b = BoundaryRule<std::int64_t>::fixed(0);
    bool ok = true;
    for (int m : {0, 1})
        for (int prev : {0, 1}) {
            CAState s{IntField2D(3, 3, 0), IntField2D(3, 3, 0), 0};
            s.w_curr.at(1, 0) = m;
            s.w_prev.at(1, 1) = prev;
            const std::int64_t want = (m == 1 && prev == 0) ? 1 : 0;
            ok = ok && ca_step_simple(s, 1, 1, 0, b).at(1, 1) == want;
            ok = ok && tsu_step(s.w_curr, s.w_prev, b).at(1, 1) == want;
        }
    report(1, "transition tables exact", ok);
}

// 2. rule equivalences on the exhaustive 3x3 sweep and 200 random states
void criterion_equivalences() {
    std::string detail;
    const bool ok = suites_pass(verify_ca_equiv(), detail);
    report(2, "rule equivalences (full=simple, simple=tsu)", ok, detail);
}

// 3. pattern reproduction: ring, target, spiral with annihilation
void criterion_patterns() {
    bool ring_ok = true;
    {
        PatternSeed seed;
        seed.kind = SeedKind::SingleRing;
        const auto seeded = seed_pattern(seed, 21, 21);
        CARunConfig cfg;
        cfg.steps = 8;
        cfg.beta = 1;
        const auto frames = ca_run(seeded.state, cfg);
        for (int n = 0; n <= 8 && ring_ok; ++n)
            for (int k = 0; k < 21 && ring_ok; ++k)
                for (int j = 0; j < 21; ++j) {
                    const int d = std::abs(j - 10) + std::abs(k - 10);
                    // front at radius n; at n = 1 the just-fired centre is
                    // still on, so the frame is the closed ball of radius 1
                    const bool want = (n == 1) ? d <= 1 : d == n;
                    if ((frames[n].at(j, k) == 1) != want) {
                        ring_ok = false;
                        break;
                    }
                }
    }
    report(3, "ring front is the L1 sphere (radius 0..8)", ring_ok);

    bool target_ok;
    {
        PatternSeed seed;
        seed.kind = SeedKind::Target;
        const auto seeded = seed_pattern(seed, 21, 21);
        CARunConfig cfg;
        cfg.steps = 16;
        cfg.beta = 1;
        const auto frames = ca_run(seeded.state, cfg, seeded.pacemaker);
        target_ok = all_cells_periodic(frames, 4, 1);
    }
    report(3, "target cells eventually 4-periodic (16 steps)", target_ok);

    bool spiral_ok = false;
    {
        PatternSeed seed;
        seed.kind = SeedKind::Spiral;
        const auto seeded = seed_pattern(seed, 81, 81);
        CARunConfig cfg;
        cfg.steps = 60;
        cfg.beta = 1;
        const auto frames = ca_run(seeded.state, cfg);
        const int ck = 40, j0 = 40 - 4;
        for (int dk : {-1, 0})
            spiral_ok = spiral_ok || spiral_signature(frames, j0 - 1, ck + dk, 3, 8) ||
                        spiral_signature(frames, j0 + 8, ck + dk, 3, 8);
    }
    report(3, "spiral rotation signature (8 consecutive steps)", spiral_ok);

    // two seeds facing each other: identical to the superposition of the
    // single-seed runs until the fronts meet, strictly fewer excited cells
    // afterwards (annihilation, no pass-through)
    bool annihilation_ok;
    {
        const int W = 81, H = 81, L = 9;
        auto make = [&](int k0, int shift) {
            CAState s{IntField2D(W, H, 0), IntField2D(W, H, 0), 0};
            for (int i = 0; i < L; ++i) {
                s.w_curr.at(36 + i, k0) = 1;
                s.w_prev.at(36 + i, k0 + shift) = 1;
            }
            return s;
        };
        const CAState a = make(25, +1), b = make(55, -1);
        CAState both{IntField2D(W, H, 0), IntField2D(W, H, 0), 0};
        for (int k = 0; k < H; ++k)
            for (int j = 0; j < W; ++j) {
                both.w_prev.at(j, k) = a.w_prev.at(j, k) | b.w_prev.at(j, k);
                both.w_curr.at(j, k) = a.w_curr.at(j, k) | b.w_curr.at(j, k);
            }
        CARunConfig cfg;
        cfg.steps = 60;
        cfg.beta = 1;
        const auto fa = ca_run(a, cfg), fb = ca_run(b, cfg), fc = ca_run(both, cfg);
        int first_diff = -1;
        bool never_exceeds = true;
        long final_gap = 0;
        for (int n = 0; n <= 60; ++n) {
            bool same = true;
            long pc = 0, ps = 0;
            for (int k = 0; k < H; ++k)
                for (int j = 0; j < W; ++j) {
                    const std::int64_t sup = fa[n].at(j, k) | fb[n].at(j, k);
                    pc += fc[n].at(j, k);
                    ps += sup;
                    if (fc[n].at(j, k) != sup) same = false;
                }
            if (!same && first_diff < 0) first_diff = n;
            if (pc > ps) never_exceeds = false;
            if (n == 60) final_gap = ps - pc;
        }
        annihilation_ok = first_diff > 0 && first_diff <= 60 && never_exceeds &&
                          final_gap > 0;
    }
    report(3, "facing fronts annihilate without pass-through", annihilation_ok);
}

// 4. zero-dimensional attractor theorem over the full sweep box
void criterion_attractor() {
    std::string detail;
    const bool ok = suites_pass(verify_attractor(), detail);
    report(4, "attractor sweep: Period2 {0,Q} except (F,F)", ok, detail);
}

// 5. piecewise forms equal the direct map on the full box
void criterion_piecewise() {
    bool ok = true;
    for (std::int64_t F = -5; F <= 5 && ok; ++F)
        for (std::int64_t Q = -5; Q <= 5 && ok; ++Q)
            for (std::int64_t up = -10; up <= 10 && ok; ++up)
                for (std::int64_t uc = -10; uc <= 10; ++uc) {
                    const ZeroDimParams p{F, Q};
                    if (piecewise_step({up, uc}, p).value != ud_ode_step({up, uc}, p)) {
                        ok = false;
                        break;
                    }
                }
    report(5, "piecewise forms equal the direct map (exhaustive)", ok);
}

// 6. equilibria with empirically confirmed stability tags
void criterion_equilibria() {
    bool ok = true;
    std::string detail;

    auto expect_single = [&](double F, double Q, double value, Stability st) {
        const auto eqs = equilibria(F, Q);
        if (eqs.size() != 1 || eqs[0].value != value || eqs[0].stability != st) {
            ok = false;
            detail += "wrong set at F=" + std::to_string(F) + " Q=" + std::to_string(Q) + "; ";
        }
    };
    expect_single(-1, 1, 0, Stability::Stable);
    expect_single(2, 1, 1, Stability::Stable);
    expect_single(1, 3, 1, Stability::Unstable);

    // stable tags: every +-1 perturbation settles back within 50 steps
    auto settles = [](std::int64_t eq, const ZeroDimParams& p) {
        for (std::int64_t d0 : {-1L, 0L, 1L})
            for (std::int64_t d1 : {-1L, 0L, 1L}) {
                std::int64_t up = eq + d0, uc = eq + d1;
                for (int n = 0; n < 50; ++n) {
                    const std::int64_t next = ud_ode_step({up, uc}, p);
                    up = uc;
                    uc = next;
                }
                if (up != eq || uc != eq) return false;
            }
        return true;
    };
    if (!settles(0, {-1, 1})) {
        ok = false;
        detail += "0 not stable at (F,Q)=(-1,1); ";
    }
    if (!settles(1, {2, 1})) {
        ok = false;
        detail += "Q not stable at (F,Q)=(2,1); ";
    }

    // unstable tag: every +-1 perturbation of (F,F) leaves and reaches Period2
    for (std::int64_t u0 = 0; u0 <= 2 && ok; ++u0)
        for (std::int64_t u1 = 0; u1 <= 2; ++u1) {
            if (u0 == 1 && u1 == 1) continue;
            const auto r = attractor_classify(u0, u1, {1, 3}, 200);
            if (r.attractor.kind != AttractorKind::Period2) {
                ok = false;
                detail += "perturbation of F did not reach Period2; ";
                break;
            }
        }
    report(6, "equilibria sets and empirical stability tags", ok, detail);
}

// 7. max-plus limit: analytic case exact, random gaps decreasing, final <= 0.05
void criterion_limits() {
    std::string detail;
    const bool ok = suites_pass(verify_limits(), detail);
    report(7, "ultradiscretization limit gaps", ok, detail);
}

// 8. finite-E saturation at E* on 100 random bounded states
void criterion_saturation() {
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::int64_t> val(-6, 6);
    UDParams p;
    p.A = 1;
    p.F = 2;
    p.Q = -1;
    p.alpha = 1;
    p.beta = 1;
    const auto b = BoundaryRule<std::int64_t>::periodic();
    const std::int64_t estar = saturation_threshold(6, p);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        UDState s{IntField2D(6, 6), IntField2D(6, 6)};
        for (auto& v : s.U) v = val(rng);
        for (auto& v : s.V) v = val(rng);
        UDParams pf = p;
        pf.E = ExtInt::of(estar);
        const auto fin = ud_step_full(s, pf, b);
        const auto inf = ud_step_Einf(s, p, b);
        ok = fin.U == inf.U && fin.V == inf.V;
    }
    report(8, "finite-E map saturates at E* (100 random states)", ok);
}

// 9. first-order consistency and diffusion mass conservation
void criterion_consistency() {
    std::string detail;
    const bool ok = suites_pass(verify_consistency(), detail);
    report(9, "scheme consistency order and mass conservation", ok, detail);
}

// 10. sustained oscillation of the scalar scheme at excitable parameters
void criterion_oscillation() {
    OregonatorParams p;
    p.a = 25.0;
    p.f = 1.5;
    p.q = 8e-4;
    const double eps = 1e-3;
    const int steps = static_cast<int>(50.0 / eps);
    double u = 0.5, v = 0.2, pu = 0.5, ppu = 0.5;
    std::vector<double> maxima;
    for (int n = 0; n < steps; ++n) {
        auto [un, vn] = trop_ode_step(u, v, p, eps);
        const double t = (n + 1) * eps;
        if (t > 20.0 && pu > ppu && pu > un && pu > 0.1) maxima.push_back(pu);
        ppu = pu;
        pu = un;
        u = un;
        v = vn;
    }
    bool ok = maxima.size() >= 2;
    double worst = 0.0;
    for (std::size_t i = 1; i < maxima.size(); ++i)
        worst = std::max(worst, std::abs(maxima[i] - maxima[i - 1]) / maxima[i - 1]);
    ok = ok && worst <= 0.05;
    report(10, "sustained oscillation of the scalar scheme", ok,
           "u-maxima " + std::to_string(maxima.size()) + ", worst spread " +
               std::to_string(worst));
}

// 11. closed form vs recursion, divergence iff nonzero start
void criterion_closed_form() {
    bool ok = true;
    for (std::int64_t p1 = -4; p1 <= 4 && ok; ++p1)
        for (std::int64_t p2 = -4; p2 <= 4 && ok; ++p2) {
            std::int64_t a = p1, b = p2;
            std::int64_t peak = 0;
            for (int n = 1; n <= 30; ++n) {
                if (std::abs(psi_closed_form(p1, p2, n) - double(a)) > 1e-6) ok = false;
                peak = std::max(peak, std::abs(a));
                const std::int64_t c = a - b;
                a = b;
                b = c;
            }
            const bool diverged = peak >= 1000;
            const bool zero_start = p1 == 0 && p2 == 0;
            if (diverged == zero_start) ok = false;
        }
    report(11, "closed form matches recursion; divergence iff nonzero", ok);
}

} // namespace

int main() {
    criterion_tables();
    criterion_equivalences();
    criterion_patterns();
    criterion_attractor();
    criterion_piecewise();
    criterion_equilibria();
    criterion_limits();
    criterion_saturation();
    criterion_consistency();
    criterion_oscillation();
    criterion_closed_form();
    std::printf("%s (%d failing)\n", g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
