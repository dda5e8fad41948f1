#include "oregonator/tropical.hpp"

#include <cmath>
#include <stdexcept>

namespace oreg {

void OregonatorParams::validate() const {
    if (a < 0.0 || f < 0.0 || q <= 0.0 || Du < 0.0 || Dv < 0.0)
        throw std::invalid_argument("Oregonator parameters must be nonnegative, q > 0");
    if (a == 0.0 && !allow_zero_rate)
        throw std::invalid_argument("a = 0 only admitted with allow_zero_rate");
}

void TropicalStepParams::validate() const {
    if (eps <= 0.0) throw std::invalid_argument("eps must be > 0");
    if (alpha < 0 || beta < 0) throw std::invalid_argument("stencil offsets must be >= 0");
}

namespace {

double trop_u_update(double u_mean, double v, const OregonatorParams& p, double inv_eps) {
    const double denom_uq = u_mean + p.q;
    const double num = inv_eps * u_mean + p.a * u_mean + p.a * p.f * p.q * v / denom_uq;
    const double den = inv_eps + p.a * u_mean + p.a * p.f * v / denom_uq;
    return num / den;
}

} // namespace

std::pair<double, double> trop_ode_step(double u, double v, const OregonatorParams& p,
                                        double eps) {
    p.validate();
    if (eps <= 0.0) throw std::invalid_argument("eps must be > 0");
    if (u <= 0.0 || v <= 0.0)
        throw std::domain_error("tropical scheme requires positive u, v");
    const double inv_eps = 1.0 / eps;
    const double u_next = trop_u_update(u, v, p, inv_eps);
    const double v_next = (inv_eps * v + u) / (inv_eps + 1.0);
    return {u_next, v_next};
}

std::pair<RealField2D, RealField2D> trop_pde_step(const RealField2D& u, const RealField2D& v,
                                                  const OregonatorParams& p,
                                                  const TropicalStepParams& sp,
                                                  const BoundaryRule<double>& b) {
    p.validate();
    sp.validate();
    if (!u.same_shape(v)) throw std::invalid_argument("u and v grids must match");
    if (!all_positive(u) || !all_positive(v))
        throw std::domain_error("tropical scheme requires positive fields");

    const double inv_eps = 1.0 / sp.eps;
    const RealField2D mu = mean5(u, sp.alpha, b);
    const RealField2D mv = mean5(v, sp.beta, b);
    const RealField2D mu_beta = mean5(u, sp.beta, b);

    RealField2D un(u.width(), u.height());
    RealField2D vn(u.width(), u.height());
    for (int k = 0; k < u.height(); ++k) {
        for (int j = 0; j < u.width(); ++j) {
            un.at(j, k) = trop_u_update(mu.at(j, k), v.at(j, k), p, inv_eps);
            vn.at(j, k) = (inv_eps * mv.at(j, k) + mu_beta.at(j, k)) / (inv_eps + 1.0);
        }
    }
    return {un, vn};
}

namespace {

struct Rhs {
    const OregonatorParams& p;
    void operator()(double u, double v, double& du, double& dv) const {
        du = p.a * (u * (1.0 - u) - p.f * v * (u - p.q) / (u + p.q));
        dv = u - v;
    }
};

} // namespace

std::vector<TrajectoryPoint> ode_reference(double u0, double v0, const OregonatorParams& p,
                                           double t_end, double tol) {
    p.validate();
    if (u0 <= 0.0 || v0 <= 0.0) throw std::domain_error("initial data must be positive");
    if (t_end <= 0.0) throw std::invalid_argument("t_end must be > 0");

    // Dormand-Prince 5(4) with standard step control.
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Rhs rhs{p};
    double t = 0.0, u = u0, v = v0;
    double dt = std::min(1e-3, t_end);
    std::vector<TrajectoryPoint> traj{{0.0, u0, v0}};

    double k1u, k1v;
    rhs(u, v, k1u, k1v);
    while (t < t_end) {
        if (t + dt > t_end) dt = t_end - t;
        double k2u, k2v, k3u, k3v, k4u, k4v, k5u, k5v, k6u, k6v, k7u, k7v;
        rhs(u + dt * a21 * k1u, v + dt * a21 * k1v, k2u, k2v);
        rhs(u + dt * (a31 * k1u + a32 * k2u), v + dt * (a31 * k1v + a32 * k2v), k3u, k3v);
        rhs(u + dt * (a41 * k1u + a42 * k2u + a43 * k3u),
            v + dt * (a41 * k1v + a42 * k2v + a43 * k3v), k4u, k4v);
        rhs(u + dt * (a51 * k1u + a52 * k2u + a53 * k3u + a54 * k4u),
            v + dt * (a51 * k1v + a52 * k2v + a53 * k3v + a54 * k4v), k5u, k5v);
        rhs(u + dt * (a61 * k1u + a62 * k2u + a63 * k3u + a64 * k4u + a65 * k5u),
            v + dt * (a61 * k1v + a62 * k2v + a63 * k3v + a64 * k4v + a65 * k5v), k6u, k6v);
        const double un = u + dt * (b1 * k1u + b3 * k3u + b4 * k4u + b5 * k5u + b6 * k6u);
        const double vn = v + dt * (b1 * k1v + b3 * k3v + b4 * k4v + b5 * k5v + b6 * k6v);
        rhs(un, vn, k7u, k7v);
        const double erru =
            dt * (e1 * k1u + e3 * k3u + e4 * k4u + e5 * k5u + e6 * k6u + e7 * k7u);
        const double errv =
            dt * (e1 * k1v + e3 * k3v + e4 * k4v + e5 * k5v + e6 * k6v + e7 * k7v);
        const double sku = tol * (1.0 + std::abs(un));
        const double skv = tol * (1.0 + std::abs(vn));
        const double err = std::sqrt(0.5 * ((erru / sku) * (erru / sku) +
                                            (errv / skv) * (errv / skv)));
        if (err <= 1.0) {
            t += dt;
            u = un;
            v = vn;
            k1u = k7u; // FSAL
            k1v = k7v;
            traj.push_back({t, u, v});
        }
        const double fac = std::clamp(0.9 * std::pow(err > 0 ? 1.0 / err : 1e4, 0.2), 0.2, 5.0);
        dt *= fac;
        if (dt < 1e-14 * std::max(1.0, t))
            throw std::runtime_error("ode_reference: step size underflow near q-singularity");
        (void)c2; (void)c3; (void)c4; (void)c5;
    }
    return traj;
}

std::vector<std::pair<double, double>> consistency_order(SchemeKind scheme,
                                                         const OregonatorParams& p, double u0,
                                                         double v0, double horizon,
                                                         std::span<const double> eps_list) {
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] > 0.0) || eps_list[i] >= eps_list[i - 1])
            throw std::invalid_argument("eps_list must be strictly decreasing positive");

    const auto ref = ode_reference(u0, v0, p, horizon, 1e-12);
    const double uref = ref.back().u;
    const double vref = ref.back().v;

    std::vector<std::pair<double, double>> out;
    for (double eps : eps_list) {
        const long n = std::lround(horizon / eps);
        const double h = horizon / static_cast<double>(n);
        double err;
        if (scheme == SchemeKind::Ode) {
            double u = u0, v = v0;
            for (long i = 0; i < n; ++i) std::tie(u, v) = trop_ode_step(u, v, p, h);
            err = std::max(std::abs(u - uref), std::abs(v - vref));
        } else {
            // Uniform field, zero stencil offsets: the spatial scheme reduces
            // cellwise to the scalar one and the same oracle applies.
            RealField2D u(4, 4, u0), v(4, 4, v0);
            TropicalStepParams sp{h, 0, 0};
            const auto b = BoundaryRule<double>::periodic();
            for (long i = 0; i < n; ++i) std::tie(u, v) = trop_pde_step(u, v, p, sp, b);
            err = std::max(std::abs(u.at(0, 0) - uref), std::abs(v.at(0, 0) - vref));
        }
        out.emplace_back(eps, err);
    }
    return out;
}

double empirical_order(std::span<const std::pair<double, double>> errors) {
    if (errors.size() < 2) throw std::invalid_argument("need at least two (eps, error) pairs");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const double ratio_eps = errors[i].first / errors[i + 1].first;
        acc += std::log(errors[i].second / errors[i + 1].second) / std::log(ratio_eps);
    }
    return acc / static_cast<double>(errors.size() - 1);
}

} // namespace oreg
