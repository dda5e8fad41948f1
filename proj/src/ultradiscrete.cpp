#include "oregonator/ultradiscrete.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace oreg {

void UDParams::validate(bool require_ca_regime) const {
    check_guard(A);
    check_guard(F);
    check_guard(Q);
    if (alpha < 0 || beta < 0) throw std::invalid_argument("stencil offsets must be >= 0");
    if (require_ca_regime && !(Q < 0 && 0 < F))
        throw std::invalid_argument("CA regime requires Q < 0 < F");
}

namespace {

std::int64_t max2(std::int64_t a, std::int64_t b) { return a > b ? a : b; }
std::int64_t max3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return max2(a, max2(b, c));
}

void check_state(const UDState& s) {
    if (!s.U.same_shape(s.V)) throw std::invalid_argument("U and V grids must match");
    for (auto v : s.U) check_guard(v);
    for (auto v : s.V) check_guard(v);
}

} // namespace

UDState ud_step_full(const UDState& s, const UDParams& p, const BoundaryRule<std::int64_t>& b) {
    p.validate();
    check_state(s);
    if (p.E.is_infinite()) return ud_step_Einf(s, p, b);

    const std::int64_t E = p.E.value();
    const IntField2D mu = max5(s.U, p.alpha, b);
    const IntField2D mv = max5(s.V, p.beta, b);
    const IntField2D mu_beta = max5(s.U, p.beta, b);

    UDState out{IntField2D(s.U.width(), s.U.height()), IntField2D(s.U.width(), s.U.height())};
    for (int k = 0; k < s.U.height(); ++k) {
        for (int j = 0; j < s.U.width(); ++j) {
            const std::int64_t M = mu.at(j, k);
            const std::int64_t V = s.V.at(j, k);
            const std::int64_t mq = max2(M, p.Q);
            const std::int64_t un = max3(M - E, p.A + M, p.A + p.F + p.Q + V - mq) -
                                    max3(-E, p.A + M, p.A + p.F + V - mq);
            const std::int64_t vn = max2(mv.at(j, k) - E, mu_beta.at(j, k)) - max2(-E, 0);
            check_guard(un);
            check_guard(vn);
            out.U.at(j, k) = un;
            out.V.at(j, k) = vn;
        }
    }
    return out;
}

UDState ud_step_Einf(const UDState& s, const UDParams& p, const BoundaryRule<std::int64_t>& b) {
    p.validate();
    check_state(s);

    const IntField2D mu = max5(s.U, p.alpha, b);
    const IntField2D mu_beta = max5(s.U, p.beta, b);

    UDState out{IntField2D(s.U.width(), s.U.height()), IntField2D(s.U.width(), s.U.height())};
    for (int k = 0; k < s.U.height(); ++k) {
        for (int j = 0; j < s.U.width(); ++j) {
            const std::int64_t M = mu.at(j, k);
            const std::int64_t V = s.V.at(j, k);
            const std::int64_t mq = max2(M, p.Q);
            const std::int64_t un =
                max2(M, p.F + p.Q + V - mq) - max2(M, p.F + V - mq);
            check_guard(un);
            out.U.at(j, k) = un;
            out.V.at(j, k) = mu_beta.at(j, k);
        }
    }
    return out;
}

IntField2D ud_step_single(const IntField2D& u_curr, const IntField2D& u_prev, const UDParams& p,
                          const BoundaryRule<std::int64_t>& b) {
    p.validate();
    if (!u_curr.same_shape(u_prev)) throw std::invalid_argument("layer dimensions must match");
    for (auto v : u_curr) check_guard(v);
    for (auto v : u_prev) check_guard(v);

    const IntField2D mu = max5(u_curr, p.alpha, b);
    const IntField2D mp = max5(u_prev, p.beta, b);

    IntField2D out(u_curr.width(), u_curr.height());
    for (int k = 0; k < u_curr.height(); ++k) {
        for (int j = 0; j < u_curr.width(); ++j) {
            const std::int64_t M = mu.at(j, k);
            const std::int64_t P = mp.at(j, k);
            const std::int64_t mq = max2(M, p.Q);
            const std::int64_t un =
                max2(M, p.F + p.Q + P - mq) - max2(M, p.F + P - mq);
            check_guard(un);
            out.at(j, k) = un;
        }
    }
    return out;
}

std::int64_t saturation_threshold(std::int64_t value_bound, const UDParams& p) {
    if (value_bound < 0) throw std::invalid_argument("value_bound must be >= 0");
    return 4 * value_bound + std::abs(p.A) + std::abs(p.F) + std::abs(p.Q) + 1;
}

namespace {

// lambda * log(sum_i exp(x_i / lambda)), max-shifted.
double lse(std::span<const double> terms, double lambda) {
    double m = terms[0];
    for (double t : terms) m = std::max(m, t);
    double acc = 0.0;
    for (double t : terms) acc += std::exp((t - m) / lambda);
    return m + lambda * std::log(acc);
}

double probe_oregonator(std::span<const double> in, double lambda) {
    if (in.size() != 6)
        throw std::invalid_argument("OregonatorOde probe expects {U, V, A, F, Q, E}");
    const double U = in[0], V = in[1], A = in[2], F = in[3], Q = in[4], E = in[5];

    // log-space evaluation of the scalar tropical scheme at x = exp(X/lambda)
    const double log_uq = lse(std::array{U, Q}, lambda); // lambda*log(u + q)
    const double num_u = lse(std::array{U - E, A + U, A + F + Q + V - log_uq}, lambda);
    const double den_u = lse(std::array{-E, A + U, A + F + V - log_uq}, lambda);
    const double num_v = lse(std::array{V - E, U}, lambda);
    const double den_v = lse(std::array{-E, 0.0}, lambda);

    // the max-plus map at the same point (alpha = 0, so M_a(U) = U)
    const double mq = std::max(U, Q);
    const double ud_u = std::max({U - E, A + U, A + F + Q + V - mq}) -
                        std::max({-E, A + U, A + F + V - mq});
    const double ud_v = std::max(V - E, U) - std::max(-E, 0.0);

    return std::max(std::abs((num_u - den_u) - ud_u), std::abs((num_v - den_v) - ud_v));
}

} // namespace

double ud_limit_probe(std::span<const double> inputs, LimitMap map, double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("lambda must be > 0");
    if (inputs.empty()) throw std::invalid_argument("inputs must be nonempty");
    switch (map) {
    case LimitMap::MaxOfTerms: {
        double m = inputs[0];
        for (double t : inputs) m = std::max(m, t);
        return lse(inputs, lambda) - m;
    }
    case LimitMap::OregonatorOde:
        return probe_oregonator(inputs, lambda);
    }
    throw std::logic_error("unknown LimitMap");
}

} // namespace oreg
