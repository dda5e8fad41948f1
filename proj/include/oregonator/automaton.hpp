#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "oregonator/field.hpp"

namespace oreg {

// Two-time-layer binary state W of the excitable-medium automaton.
struct CAState {
    IntField2D w_prev, w_curr;
    int step = 0;
};

// W = U - Q, cellwise.
IntField2D w_shift(const IntField2D& u, std::int64_t Q);

// Unsimplified rule:
//   W' = max{M_a(W_n), F+M_b(W_{n-1})-M_a(W_n)}
//      - max{M_a(W_n)+Q, F+M_b(W_{n-1})-M_a(W_n)}
IntField2D ca_step_full(const CAState& s, std::int64_t F, std::int64_t Q, int alpha, int beta,
                        const BoundaryRule<std::int64_t>& b);

// Simplified rule, valid on binary layers: W' = max{2 M_a(W_n) - M_b(W_{n-1}) - F, 0}.
IntField2D ca_step_simple(const CAState& s, std::int64_t F, int alpha, int beta,
                          const BoundaryRule<std::int64_t>& b);

// Takahashi-Shida-Usami rule: Y' = max(M_1(Y_n) - Y_{n-1}, 0).
IntField2D tsu_step(const IntField2D& y_curr, const IntField2D& y_prev,
                    const BoundaryRule<std::int64_t>& b);

// A cell forced to a cyclic value sequence after every step.
struct Pacemaker {
    int j, k;
    std::array<std::int64_t, 4> sequence{1, 1, 0, 0};
};

enum class SeedKind { SingleRing, Target, Spiral, Custom };

struct PatternSeed {
    SeedKind kind = SeedKind::SingleRing;
    int spiral_segment = 9;            // Spiral: length of the value-1 line
    IntField2D custom_prev, custom_curr; // Custom only
};

struct SeededState {
    CAState state;
    std::optional<Pacemaker> pacemaker;
};

// Builds the initial two layers (and pacemaker, for Target). For Spiral the
// canonical layer-offset segment is tried first; if it fails the rotation
// signature, a deterministic search over small offsets/truncations picks the
// first passing candidate (disable with OREGONATOR_SEED_SEARCH=off).
SeededState seed_pattern(const PatternSeed& seed, int width, int height);

enum class CARule { Simple, Full, Tsu };

struct CARunConfig {
    CARule rule = CARule::Simple;
    int steps = 0;
    std::int64_t F = 1;
    std::int64_t Q = -1;
    int alpha = 1;
    int beta = 0;
    BoundaryRule<std::int64_t> boundary = BoundaryRule<std::int64_t>::fixed(0);
};

// Frame 0 is the seed's current layer; frame i is the layer after i steps.
// The pacemaker cell is overridden after each step.
std::vector<IntField2D> ca_run(CAState seed, const CARunConfig& cfg,
                               const std::optional<Pacemaker>& pacemaker = std::nullopt);

// True if some window of `consecutive` steps after a transient satisfies
// frame(n+1) = rot90(frame(n)) on the square window of the given radius.
// The rotation centre is the lattice corner shared by cells (core_j, core_k)
// and (core_j+1, core_k+1): rotating cores sit between cells, not on them.
bool spiral_signature(const std::vector<IntField2D>& frames, int core_j, int core_k,
                      int window_radius, int consecutive);

// True if every cell's time series is eventually periodic with period
// dividing `period` over the given frames.
bool all_cells_periodic(const std::vector<IntField2D>& frames, int period, int transient);

} // namespace oreg
