#pragma once

#include <cstdint>
#include <span>

#include "oregonator/field.hpp"

namespace oreg {

// Extended integer for the max-plus image of epsilon: a finite value or +inf.
// Terms of the form X - E drop out of a max when E is infinite.
class ExtInt {
public:
    static ExtInt infinity() { return ExtInt(true, 0); }
    static ExtInt of(std::int64_t v) {
        check_guard(v);
        return ExtInt(false, v);
    }

    bool is_infinite() const { return inf_; }
    std::int64_t value() const {
        if (inf_) throw std::logic_error("ExtInt: value() on +inf");
        return v_;
    }

    friend bool operator==(const ExtInt&, const ExtInt&) = default;

private:
    ExtInt(bool inf, std::int64_t v) : inf_(inf), v_(v) {}
    bool inf_;
    std::int64_t v_;
};

struct UDParams {
    std::int64_t A = 0;
    std::int64_t F = 1;
    std::int64_t Q = -1;
    ExtInt E = ExtInt::infinity();
    int alpha = 0;
    int beta = 0;

    void validate(bool require_ca_regime = false) const;
};

struct UDState {
    IntField2D U, V;
};

// Full max-plus lattice map (finite or infinite E):
//   U' = max{M_a(U)-E, A+M_a(U), A+F+Q+V-max(M_a(U),Q)}
//      - max{-E,      A+M_a(U), A+F+V-max(M_a(U),Q)}
//   V' = max{M_b(V)-E, M_b(U)} - max{-E, 0}
UDState ud_step_full(const UDState& s, const UDParams& p, const BoundaryRule<std::int64_t>& b);

// The E -> +inf limit map:
//   U' = max{M_a(U), F+Q+V-max(M_a(U),Q)} - max{M_a(U), F+V-max(M_a(U),Q)}
//   V' = M_b(U)
UDState ud_step_Einf(const UDState& s, const UDParams& p, const BoundaryRule<std::int64_t>& b);

// Single second-order equation obtained by eliminating V:
//   U_{n+1} = max{M_a(U_n), F+Q+M_b(U_{n-1})-max(M_a(U_n),Q)}
//           - max{M_a(U_n), F+M_b(U_{n-1})-max(M_a(U_n),Q)}
IntField2D ud_step_single(const IntField2D& u_curr, const IntField2D& u_prev, const UDParams& p,
                          const BoundaryRule<std::int64_t>& b);

// Conservative E above which ud_step_full coincides with ud_step_Einf for
// states bounded by |value| <= value_bound.
std::int64_t saturation_threshold(std::int64_t value_bound, const UDParams& p);

enum class LimitMap {
    MaxOfTerms,    // inputs: the exponents; gap = lambda*log(sum e^{X/l}) - max X
    OregonatorOde, // inputs: {U, V, A, F, Q, E}; gap of the scalar scheme vs the max-plus map
};

// Gap between lambda*log of the tropical-scheme expression evaluated at
// x = exp(X/lambda) and the corresponding max-plus map output. Evaluation is
// carried out in log space with max-shifted exponent sums, so large |X|/lambda
// never leaves floating range.
double ud_limit_probe(std::span<const double> inputs, LimitMap map, double lambda);

} // namespace oreg
