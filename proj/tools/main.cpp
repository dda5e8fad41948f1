#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "oregonator/automaton.hpp"
#include "oregonator/frame_io.hpp"
#include "oregonator/tropical.hpp"
#include "oregonator/ultradiscrete.hpp"
#include "oregonator/verify.hpp"
#include "oregonator/zerodim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerification = 4;

// Merges a flat JSON config into the argument list: every key becomes
// --key value unless that flag already appears on the command line
// (flags win on conflict).
std::vector<std::string> merge_config(std::vector<std::string> args) {
    fs::path config;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a path");
            config = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (config.empty()) return args;

    std::ifstream in(config);
    if (!in) throw std::invalid_argument("cannot open config file: " + config.string());
    json j = json::parse(in);
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    for (const auto& [key, value] : j.items()) {
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (present) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else {
            args.push_back(flag);
            args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    return args;
}

oreg::ExtInt parse_E(const std::string& s) {
    if (s == "inf" || s == "+inf" || s == "infinity") return oreg::ExtInt::infinity();
    return oreg::ExtInt::of(std::stoll(s));
}

void ensure_dir(const fs::path& dir) { fs::create_directories(dir); }

// ---- trop -----------------------------------------------------------------

struct TropOdeOpts {
    oreg::OregonatorParams p;
    double eps = 1e-2, u0 = 1.0, v0 = 1.0;
    int steps = 10;
    std::string out = "trop_ode.csv";
};

int run_trop_ode(const TropOdeOpts& o) {
    o.p.validate();
    if (o.eps <= 0) throw std::invalid_argument("eps must be > 0");
    if (o.steps < 0) throw std::invalid_argument("steps must be >= 0");
    std::ofstream csv(o.out);
    csv << "n,u,v\n";
    double u = o.u0, v = o.v0;
    csv.precision(17);
    for (int n = 0;; ++n) {
        csv << n << ',' << u << ',' << v << '\n';
        if (n == o.steps) break;
        std::tie(u, v) = oreg::trop_ode_step(u, v, o.p, o.eps);
    }
    std::printf("wrote %s (%d rows)\n", o.out.c_str(), o.steps + 1);
    return kExitOk;
}

struct TropPdeOpts {
    oreg::OregonatorParams p;
    oreg::TropicalStepParams sp;
    int width = 16, height = 16, steps = 10;
    double u0 = 1.0, v0 = 1.0, bump = 0.0;
    std::string boundary = "periodic";
    double fill = 1.0;
    std::string out = "out";
};

int run_trop_pde(const TropPdeOpts& o) {
    o.p.validate();
    o.sp.validate();
    if (o.steps < 0) throw std::invalid_argument("steps must be >= 0");
    if (o.u0 <= 0 || o.v0 <= 0) throw std::invalid_argument("initial values must be > 0");
    const auto b = o.boundary == "periodic" ? oreg::BoundaryRule<double>::periodic()
                 : o.boundary == "fixed"    ? oreg::BoundaryRule<double>::fixed(o.fill)
                                            : throw std::invalid_argument(
                                                  "boundary must be periodic or fixed");
    oreg::RealField2D u(o.width, o.height, o.u0), v(o.width, o.height, o.v0);
    if (o.bump > 0) u.at(o.width / 2, o.height / 2) = o.bump;

    ensure_dir(o.out);
    const double mass0 = oreg::field_sum(u);
    double worst_drift = 0.0;
    for (int n = 0;; ++n) {
        oreg::write_pgm(fs::path(o.out) / oreg::frame_filename(n, ".pgm"), u);
        worst_drift =
            std::max(worst_drift, std::abs(oreg::field_sum(u) - mass0) / std::abs(mass0));
        if (n == o.steps) break;
        std::tie(u, v) = oreg::trop_pde_step(u, v, o.p, o.sp, b);
    }
    std::printf("wrote %d frames to %s\n", o.steps + 1, o.out.c_str());
    if (o.boundary == "periodic")
        std::printf("u-mass relative drift %.3e\n", worst_drift);
    return kExitOk;
}

// ---- ud -------------------------------------------------------------------

struct UdOpts {
    std::int64_t A = 0, F = 1, Q = -1;
    std::string E = "inf";
    int alpha = 0, beta = 0;
    int width = 8, height = 8, steps = 4;
    std::int64_t u_init = 0, v_init = 0;
    std::string load_u, load_v;
    std::string boundary = "periodic";
    std::int64_t fill = 0;
    std::string out = "out";
};

int run_ud(const UdOpts& o) {
    oreg::UDParams p;
    p.A = o.A;
    p.F = o.F;
    p.Q = o.Q;
    p.E = parse_E(o.E);
    p.alpha = o.alpha;
    p.beta = o.beta;
    p.validate();
    if (o.steps < 0) throw std::invalid_argument("steps must be >= 0");
    const auto b = o.boundary == "periodic"
                       ? oreg::BoundaryRule<std::int64_t>::periodic()
                       : oreg::BoundaryRule<std::int64_t>::fixed(o.fill);

    oreg::UDState s{oreg::IntField2D(o.width, o.height, o.u_init),
                    oreg::IntField2D(o.width, o.height, o.v_init)};
    if (!o.load_u.empty()) s.U = oreg::read_pgm_int(o.load_u);
    if (!o.load_v.empty()) s.V = oreg::read_pgm_int(o.load_v);
    if (!s.U.same_shape(s.V)) throw std::invalid_argument("U and V layer sizes must match");

    ensure_dir(o.out);
    for (int n = 0;; ++n) {
        oreg::write_pgm(fs::path(o.out) / ("u_" + oreg::frame_filename(n, ".pgm")), s.U);
        oreg::write_pgm(fs::path(o.out) / ("v_" + oreg::frame_filename(n, ".pgm")), s.V);
        if (n == o.steps) break;
        s = oreg::ud_step_full(s, p, b);
    }
    std::printf("wrote %d frame pairs to %s\n", o.steps + 1, o.out.c_str());
    return kExitOk;
}

// ---- ca -------------------------------------------------------------------

struct CaOpts {
    std::string pattern = "ring";
    std::string rule = "simple";
    int size = 21, steps = 8;
    std::int64_t F = 1, Q = -1;
    int alpha = 1, beta = 1;
    int segment = 9;
    std::string out = "out";
    bool ascii = false;
    bool csv = false;
};

int run_ca(const CaOpts& o) {
    oreg::PatternSeed seed;
    if (o.pattern == "ring")
        seed.kind = oreg::SeedKind::SingleRing;
    else if (o.pattern == "target")
        seed.kind = oreg::SeedKind::Target;
    else if (o.pattern == "spiral") {
        seed.kind = oreg::SeedKind::Spiral;
        seed.spiral_segment = o.segment;
    } else
        throw std::invalid_argument("pattern must be ring, target or spiral");

    oreg::CARunConfig cfg;
    cfg.steps = o.steps;
    cfg.F = o.F;
    cfg.Q = o.Q;
    cfg.alpha = o.alpha;
    cfg.beta = o.beta;
    if (o.rule == "simple")
        cfg.rule = oreg::CARule::Simple;
    else if (o.rule == "full")
        cfg.rule = oreg::CARule::Full;
    else if (o.rule == "tsu")
        cfg.rule = oreg::CARule::Tsu;
    else
        throw std::invalid_argument("rule must be simple, full or tsu");

    auto seeded = oreg::seed_pattern(seed, o.size, o.size);
    auto frames = oreg::ca_run(seeded.state, cfg, seeded.pacemaker);

    ensure_dir(o.out);
    for (std::size_t n = 0; n < frames.size(); ++n)
        oreg::write_pbm(fs::path(o.out) / oreg::frame_filename(int(n), ".pbm"), frames[n]);
    if (o.csv) oreg::write_frames_csv(fs::path(o.out) / "frames.csv", frames);
    if (o.ascii)
        for (std::size_t n = 0; n < frames.size(); ++n)
            std::cout << "# step " << n << '\n' << oreg::render_ascii(frames[n]);

    std::printf("wrote %zu frames to %s\n", frames.size(), o.out.c_str());
    if (o.pattern == "target") {
        const bool ok = oreg::all_cells_periodic(frames, 4, 1);
        std::printf("period 4 %s\n", ok ? "confirmed" : "NOT confirmed");
    } else if (o.pattern == "spiral") {
        const int cj = o.size / 2, ck = o.size / 2, j0 = cj - o.segment / 2;
        bool ok = false;
        for (int dk : {-1, 0})
            ok = ok || oreg::spiral_signature(frames, j0 - 1, ck + dk, 3, 8) ||
                 oreg::spiral_signature(frames, j0 + o.segment - 1, ck + dk, 3, 8);
        std::printf("rotation signature %s\n", ok ? "confirmed" : "NOT confirmed");
    }
    return kExitOk;
}

// ---- zerodim ----------------------------------------------------------------

int run_classify(std::int64_t F, std::int64_t Q, std::int64_t u0, std::int64_t u1,
                 int max_iter, const std::string& out) {
    const auto r = oreg::attractor_classify(u0, u1, {F, Q}, max_iter);
    if (!out.empty()) {
        std::ofstream csv(out);
        csv << "n,u\n";
        for (std::size_t n = 0; n < r.trajectory.size(); ++n)
            csv << n << ',' << r.trajectory[n] << '\n';
    }
    switch (r.attractor.kind) {
    case oreg::AttractorKind::Period2:
        std::printf("Period2 {%lld,%lld} at step %d\n", (long long)r.attractor.lo,
                    (long long)r.attractor.hi, r.attractor.entry_step);
        break;
    case oreg::AttractorKind::ConstantF:
        std::printf("ConstantF\n");
        break;
    case oreg::AttractorKind::StableEquilibrium:
        std::printf("StableEquilibrium %lld\n", (long long)r.attractor.value);
        break;
    case oreg::AttractorKind::Undecided:
        std::printf("Undecided after %d iterations\n", max_iter);
        return kExitVerification;
    }
    return kExitOk;
}

int run_equilibria(double F, double Q) {
    const auto eqs = oreg::equilibria(F, Q);
    bool any_stable = false;
    std::string parts;
    for (const auto& e : eqs) {
        std::string name = e.value == 0.0 ? "0"
                         : e.value == F   ? "F=" + std::to_string((long long)F)
                                          : "Q=" + std::to_string((long long)Q);
        if (e.stability == oreg::Stability::Stable) any_stable = true;
        if (!parts.empty()) parts += "; ";
        parts += name + (e.stability == oreg::Stability::Stable ? " stable" : " unstable");
    }
    if (parts.empty()) parts = "no equilibria";
    if (!any_stable) parts += "; no stable equilibria";
    std::printf("%s\n", parts.c_str());
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& suite) {
    std::vector<oreg::CheckResult> rs;
    if (suite == "all")
        rs = oreg::verify_all();
    else if (suite == "limits")
        rs = oreg::verify_limits();
    else if (suite == "ca-equiv")
        rs = oreg::verify_ca_equiv();
    else if (suite == "attractor")
        rs = oreg::verify_attractor();
    else if (suite == "consistency")
        rs = oreg::verify_consistency();
    else
        throw std::invalid_argument("unknown suite: " + suite);

    int failed = 0;
    for (const auto& r : rs) {
        std::printf("%s %s (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (!r.passed) ++failed;
    }
    std::printf("%zu checks, %d failed\n", rs.size(), failed);
    return failed == 0 ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical and ultradiscrete Oregonator toolkit"};
    app.require_subcommand(1);

    TropOdeOpts to;
    TropPdeOpts tp;
    UdOpts ud;
    CaOpts ca;

    auto* trop = app.add_subcommand("trop", "tropical difference schemes");
    auto* tode = trop->add_subcommand("ode", "zero-dimensional scheme");
    tode->add_option("--a", to.p.a);
    tode->add_option("--f", to.p.f);
    tode->add_option("--q", to.p.q);
    tode->add_flag("--allow-zero-rate", to.p.allow_zero_rate);
    tode->add_option("--eps", to.eps);
    tode->add_option("--u0", to.u0);
    tode->add_option("--v0", to.v0);
    tode->add_option("--steps", to.steps);
    tode->add_option("--out", to.out);

    auto* tpde = trop->add_subcommand("pde", "lattice scheme");
    tpde->add_option("--a", tp.p.a);
    tpde->add_option("--f", tp.p.f);
    tpde->add_option("--q", tp.p.q);
    tpde->add_flag("--allow-zero-rate", tp.p.allow_zero_rate);
    tpde->add_option("--eps", tp.sp.eps);
    tpde->add_option("--alpha", tp.sp.alpha);
    tpde->add_option("--beta", tp.sp.beta);
    tpde->add_option("--width", tp.width);
    tpde->add_option("--height", tp.height);
    tpde->add_option("--steps", tp.steps);
    tpde->add_option("--u0", tp.u0);
    tpde->add_option("--v0", tp.v0);
    tpde->add_option("--bump", tp.bump);
    tpde->add_option("--boundary", tp.boundary);
    tpde->add_option("--fill", tp.fill);
    tpde->add_option("--out", tp.out);

    auto* udc = app.add_subcommand("ud", "ultradiscrete lattice maps");
    auto* udrun = udc->add_subcommand("run", "iterate the full max-plus map");
    udrun->add_option("--A", ud.A);
    udrun->add_option("--F", ud.F);
    udrun->add_option("--Q", ud.Q);
    udrun->add_option("--E", ud.E);
    udrun->add_option("--alpha", ud.alpha);
    udrun->add_option("--beta", ud.beta);
    udrun->add_option("--width", ud.width);
    udrun->add_option("--height", ud.height);
    udrun->add_option("--steps", ud.steps);
    udrun->add_option("--u-init", ud.u_init);
    udrun->add_option("--v-init", ud.v_init);
    udrun->add_option("--load-u", ud.load_u);
    udrun->add_option("--load-v", ud.load_v);
    udrun->add_option("--boundary", ud.boundary);
    udrun->add_option("--fill", ud.fill);
    udrun->add_option("--out", ud.out);

    auto* cac = app.add_subcommand("ca", "binary cellular automaton");
    auto* carun = cac->add_subcommand("run", "run a pattern preset");
    carun->add_option("--pattern", ca.pattern);
    carun->add_option("--rule", ca.rule);
    carun->add_option("--size", ca.size);
    carun->add_option("--steps", ca.steps);
    carun->add_option("--F", ca.F);
    carun->add_option("--Q", ca.Q);
    carun->add_option("--alpha", ca.alpha);
    carun->add_option("--beta", ca.beta);
    carun->add_option("--segment", ca.segment);
    carun->add_option("--out", ca.out);
    carun->add_flag("--ascii", ca.ascii);
    carun->add_flag("--csv", ca.csv);

    std::int64_t zF = 1, zQ = 3, zu0 = 0, zu1 = 0;
    int zmax = 1000;
    std::string zout;
    double eF = 1, eQ = 3;
    auto* zd = app.add_subcommand("zerodim", "zero-dimensional attractor analysis");
    auto* zcl = zd->add_subcommand("classify", "classify a trajectory");
    zcl->add_option("--F", zF);
    zcl->add_option("--Q", zQ);
    zcl->add_option("--u0", zu0);
    zcl->add_option("--u1", zu1);
    zcl->add_option("--max-iter", zmax);
    zcl->add_option("--out", zout);
    auto* zeq = zd->add_subcommand("equilibria", "equilibrium points and stability");
    zeq->add_option("--F", eF);
    zeq->add_option("--Q", eQ);

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "run property suites");
    ver->add_option("suite", suite, "all|limits|ca-equiv|attractor|consistency");

    std::vector<std::string> args;
    try {
        args = merge_config(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }

    try {
        std::vector<std::string> rargs(args.rbegin(), args.rend());
        app.parse(rargs);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (tode->parsed()) return run_trop_ode(to);
        if (tpde->parsed()) return run_trop_pde(tp);
        if (udrun->parsed()) return run_ud(ud);
        if (carun->parsed()) return run_ca(ca);
        if (zcl->parsed()) return run_classify(zF, zQ, zu0, zu1, zmax, zout);
        if (zeq->parsed()) return run_equilibria(eF, eQ);
        if (ver->parsed()) return run_verify(suite);
        std::fprintf(stderr, "error: no command\n");
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumeric;
    }
}
