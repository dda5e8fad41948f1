#include "oregonator/automaton.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace oreg {

IntField2D w_shift(const IntField2D& u, std::int64_t Q) {
    check_guard(Q);
    IntField2D out(u.width(), u.height());
    for (int k = 0; k < u.height(); ++k)
        for (int j = 0; j < u.width(); ++j) {
            const std::int64_t w = u.at(j, k) - Q;
            check_guard(w);
            out.at(j, k) = w;
        }
    return out;
}

namespace {

void require_shape(const IntField2D& a, const IntField2D& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("layer dimensions must match");
}

void require_binary(const IntField2D& f, const char* what) {
    if (!all_binary(f))
        throw std::domain_error(std::string(what) + ": layers must be binary");
}

} // namespace

IntField2D ca_step_full(const CAState& s, std::int64_t F, std::int64_t Q, int alpha, int beta,
                        const BoundaryRule<std::int64_t>& b) {
    require_shape(s.w_curr, s.w_prev);
    check_guard(F);
    check_guard(Q);
    const IntField2D ma = max5(s.w_curr, alpha, b);
    const IntField2D mb = max5(s.w_prev, beta, b);
    IntField2D out(s.w_curr.width(), s.w_curr.height());
    for (int k = 0; k < out.height(); ++k)
        for (int j = 0; j < out.width(); ++j) {
            const std::int64_t M = ma.at(j, k);
            const std::int64_t P = mb.at(j, k);
            const std::int64_t w = std::max(M, F + P - M) - std::max(M + Q, F + P - M);
            check_guard(w);
            out.at(j, k) = w;
        }
    return out;
}

IntField2D ca_step_simple(const CAState& s, std::int64_t F, int alpha, int beta,
                          const BoundaryRule<std::int64_t>& b) {
    require_shape(s.w_curr, s.w_prev);
    require_binary(s.w_curr, "ca_step_simple");
    require_binary(s.w_prev, "ca_step_simple");
    const IntField2D ma = max5(s.w_curr, alpha, b);
    const IntField2D mb = max5(s.w_prev, beta, b);
    IntField2D out(s.w_curr.width(), s.w_curr.height());
    for (int k = 0; k < out.height(); ++k)
        for (int j = 0; j < out.width(); ++j)
            out.at(j, k) = std::max<std::int64_t>(2 * ma.at(j, k) - mb.at(j, k) - F, 0);
    return out;
}

IntField2D tsu_step(const IntField2D& y_curr, const IntField2D& y_prev,
                    const BoundaryRule<std::int64_t>& b) {
    require_shape(y_curr, y_prev);
    require_binary(y_curr, "tsu_step");
    require_binary(y_prev, "tsu_step");
    const IntField2D m1 = max5(y_curr, 1, b);
    IntField2D out(y_curr.width(), y_curr.height());
    for (int k = 0; k < out.height(); ++k)
        for (int j = 0; j < out.width(); ++j)
            out.at(j, k) = std::max<std::int64_t>(m1.at(j, k) - y_prev.at(j, k), 0);
    return out;
}

std::vector<IntField2D> ca_run(CAState seed, const CARunConfig& cfg,
                               const std::optional<Pacemaker>& pacemaker) {
    if (cfg.steps < 0) throw std::invalid_argument("steps must be >= 0");
    std::vector<IntField2D> frames;
    frames.reserve(cfg.steps + 1);
    frames.push_back(seed.w_curr);
    for (int n = 0; n < cfg.steps; ++n) {
        IntField2D next;
        switch (cfg.rule) {
        case CARule::Simple:
            next = ca_step_simple(seed, cfg.F, cfg.alpha, cfg.beta, cfg.boundary);
            break;
        case CARule::Full:
            next = ca_step_full(seed, cfg.F, cfg.Q, cfg.alpha, cfg.beta, cfg.boundary);
            break;
        case CARule::Tsu:
            next = tsu_step(seed.w_curr, seed.w_prev, cfg.boundary);
            break;
        }
        if (pacemaker)
            next.at(pacemaker->j, pacemaker->k) = pacemaker->sequence[n % 4];
        seed.w_prev = std::move(seed.w_curr);
        seed.w_curr = std::move(next);
        seed.step += 1;
        frames.push_back(seed.w_curr);
    }
    return frames;
}

namespace {

// Rotation about the lattice corner shared by cells (cj,ck) and (cj+1,ck+1).
// Spiral cores of the period-4 rotating solution sit on corners, not cells.
// Window cells: (cj+dx, ck+dy), dx,dy in [-r+1, r].
bool window_rotates(const IntField2D& cur, const IntField2D& nxt, int cj, int ck, int r,
                    int dir) {
    for (int dy = -r + 1; dy <= r; ++dy)
        for (int dx = -r + 1; dx <= r; ++dx) {
            // corner-relative offsets in half-cell units
            const int hx = 2 * dx - 1, hy = 2 * dy - 1;
            const int sx = dir > 0 ? hy : -hy;
            const int sy = dir > 0 ? -hx : hx;
            if (nxt.at(cj + dx, ck + dy) != cur.at(cj + (sx + 1) / 2, ck + (sy + 1) / 2))
                return false;
        }
    return true;
}

} // namespace

bool spiral_signature(const std::vector<IntField2D>& frames, int core_j, int core_k,
                      int window_radius, int consecutive) {
    if (frames.empty()) return false;
    const auto& f0 = frames.front();
    const int r = window_radius;
    if (core_j - r + 1 < 0 || core_k - r + 1 < 0 || core_j + r >= f0.width() ||
        core_k + r >= f0.height())
        return false;
    for (int dir : {+1, -1}) {
        int run = 0;
        for (std::size_t n = 0; n + 1 < frames.size(); ++n) {
            bool any = false;
            for (int dy = -r + 1; dy <= r && !any; ++dy)
                for (int dx = -r + 1; dx <= r && !any; ++dx)
                    any = frames[n].at(core_j + dx, core_k + dy) != 0;
            if (any && window_rotates(frames[n], frames[n + 1], core_j, core_k, r, dir)) {
                if (++run >= consecutive) return true;
            } else {
                run = 0;
            }
        }
    }
    return false;
}

bool all_cells_periodic(const std::vector<IntField2D>& frames, int period, int transient) {
    // per cell, the series after max(transient, first excitation) must repeat
    // with the given period wherever comparable
    for (int k = 0; k < frames.front().height(); ++k)
        for (int j = 0; j < frames.front().width(); ++j) {
            std::size_t start = transient;
            while (start < frames.size() && frames[start].at(j, k) == 0) ++start;
            for (std::size_t n = start; n + period < frames.size(); ++n)
                if (frames[n].at(j, k) != frames[n + period].at(j, k)) return false;
        }
    return true;
}

namespace {

// Horizontal segment in the current layer; previous layer holds the same
// segment displaced one row (a broken front whose back edge sets the chirality).
CAState spiral_candidate(int width, int height, int length, int prev_shift, int trunc_left,
                         int trunc_right) {
    CAState s{IntField2D(width, height, 0), IntField2D(width, height, 0), 0};
    const int cj = width / 2, ck = height / 2;
    const int j0 = cj - length / 2;
    for (int i = 0; i < length; ++i) s.w_curr.at(j0 + i, ck) = 1;
    for (int i = trunc_left; i < length - trunc_right; ++i)
        s.w_prev.at(j0 + i, ck + prev_shift) = 1;
    return s;
}

bool spiral_trial(const CAState& s, int length) {
    CARunConfig cfg;
    cfg.rule = CARule::Simple;
    cfg.steps = 40;
    cfg.beta = 1;
    auto frames = ca_run(s, cfg);
    const int cj = s.w_curr.width() / 2, ck = s.w_curr.height() / 2;
    const int j0 = cj - length / 2;
    const int r = 3;
    // cores sit on the lattice corners flanking the segment ends
    for (int dk : {-1, 0})
        if (spiral_signature(frames, j0 - 1, ck + dk, r, 8) ||
            spiral_signature(frames, j0 + length - 1, ck + dk, r, 8))
            return true;
    return false;
}

bool seed_search_enabled() {
    const char* v = std::getenv("OREGONATOR_SEED_SEARCH");
    return v == nullptr || std::string(v) != "off";
}

} // namespace

SeededState seed_pattern(const PatternSeed& seed, int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid too small");
    const int cj = width / 2, ck = height / 2;
    switch (seed.kind) {
    case SeedKind::SingleRing: {
        CAState s{IntField2D(width, height, 0), IntField2D(width, height, 0), 0};
        s.w_curr.at(cj, ck) = 1;
        return {std::move(s), std::nullopt};
    }
    case SeedKind::Target: {
        CAState s{IntField2D(width, height, 0), IntField2D(width, height, 0), 0};
        return {std::move(s), Pacemaker{cj, ck}};
    }
    case SeedKind::Spiral: {
        const int L = seed.spiral_segment;
        if (L < 2 || cj - L / 2 - 5 < 0 || cj - L / 2 + L + 5 > width)
            throw std::invalid_argument("spiral segment does not fit");
        CAState canonical = spiral_candidate(width, height, L, 1, 0, 0);
        if (spiral_trial(canonical, L)) return {std::move(canonical), std::nullopt};
        if (seed_search_enabled()) {
            for (int shift : {1, -1})
                for (int tl = 0; tl <= 3; ++tl)
                    for (int tr = 0; tr <= 3; ++tr) {
                        if (tl + tr >= L) continue;
                        CAState c = spiral_candidate(width, height, L, shift, tl, tr);
                        if (spiral_trial(c, L)) return {std::move(c), std::nullopt};
                    }
        }
        throw std::runtime_error("no spiral seed candidate passes the rotation signature");
    }
    case SeedKind::Custom: {
        if (!seed.custom_prev.same_shape(seed.custom_curr))
            throw std::invalid_argument("custom layers must match");
        if (seed.custom_curr.width() != width || seed.custom_curr.height() != height)
            throw std::invalid_argument("custom layers must match requested size");
        return {CAState{seed.custom_prev, seed.custom_curr, 0}, std::nullopt};
    }
    }
    throw std::logic_error("unknown seed kind");
}

} // namespace oreg
