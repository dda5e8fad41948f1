#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oreg {

// Absolute bound on integer cell values. Chosen so that expressions of the
// form 2*M - M' - F stay far inside int64 range.
inline constexpr std::int64_t kValueGuard = std::int64_t{1} << 40;

inline void check_guard(std::int64_t v) {
    if (v > kValueGuard || v < -kValueGuard)
        throw std::overflow_error("integer cell value exceeds |2^40| guard");
}

template <class T>
struct BoundaryRule {
    enum class Kind { Periodic, Fixed };
    Kind kind = Kind::Periodic;
    T fill{};

    static BoundaryRule periodic() { return {Kind::Periodic, T{}}; }
    static BoundaryRule fixed(T v) { return {Kind::Fixed, v}; }
};

// Rectangular grid, row-major, j = column, k = row. Origin top-left.
template <class T>
class Field2D {
public:
    Field2D() : w_(1), h_(1), cells_(1, T{}) {}
    Field2D(int width, int height, T init = T{})
        : w_(width), h_(height), cells_(static_cast<std::size_t>(width) * height, init) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("Field2D dimensions must be >= 1");
    }

    int width() const { return w_; }
    int height() const { return h_; }
    std::size_t size() const { return cells_.size(); }

    T& at(int j, int k) { return cells_[index(j, k)]; }
    const T& at(int j, int k) const { return cells_[index(j, k)]; }

    // Out-of-range coordinates resolved by the boundary rule.
    T sample(int j, int k, const BoundaryRule<T>& b) const {
        if (j >= 0 && j < w_ && k >= 0 && k < h_) return at(j, k);
        if (b.kind == BoundaryRule<T>::Kind::Fixed) return b.fill;
        return at(mod(j, w_), mod(k, h_));
    }

    bool same_shape(const Field2D& o) const { return w_ == o.w_ && h_ == o.h_; }

    auto begin() { return cells_.begin(); }
    auto end() { return cells_.end(); }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    friend bool operator==(const Field2D&, const Field2D&) = default;

private:
    std::size_t index(int j, int k) const {
        return static_cast<std::size_t>(k) * w_ + j;
    }
    static int mod(int a, int m) {
        int r = a % m;
        return r < 0 ? r + m : r;
    }

    int w_, h_;
    std::vector<T> cells_;
};

using RealField2D = Field2D<double>;
using IntField2D = Field2D<std::int64_t>;

namespace detail {

template <class T, class Fold>
Field2D<T> stencil5(const Field2D<T>& f, int alpha, const BoundaryRule<T>& b, Fold fold) {
    if (alpha < 0) throw std::invalid_argument("stencil offset must be >= 0");
    Field2D<T> out(f.width(), f.height());
    for (int k = 0; k < f.height(); ++k)
        for (int j = 0; j < f.width(); ++j)
            out.at(j, k) = fold(f.at(j, k),
                                f.sample(j - alpha, k, b), f.sample(j + alpha, k, b),
                                f.sample(j, k - alpha, b), f.sample(j, k + alpha, b));
    return out;
}

} // namespace detail

// m_alpha: five-point arithmetic mean (center plus axis neighbours at distance alpha).
inline RealField2D mean5(const RealField2D& f, int alpha, const BoundaryRule<double>& b) {
    if (alpha == 0) return f; // exact identity: all five samples are the centre
    return detail::stencil5(f, alpha, b, [](double c, double l, double r, double u, double d) {
        return (c + l + r + u + d) / 5.0;
    });
}

// M_alpha: five-point max over the same stencil.
inline IntField2D max5(const IntField2D& f, int alpha, const BoundaryRule<std::int64_t>& b) {
    return detail::stencil5(f, alpha, b,
                            [](std::int64_t c, std::int64_t l, std::int64_t r, std::int64_t u,
                               std::int64_t d) { return std::max({c, l, r, u, d}); });
}

inline double field_sum(const RealField2D& f) {
    return std::accumulate(f.begin(), f.end(), 0.0);
}

inline bool all_positive(const RealField2D& f) {
    return std::all_of(f.begin(), f.end(), [](double v) { return v > 0.0; });
}

inline bool all_binary(const IntField2D& f) {
    return std::all_of(f.begin(), f.end(), [](std::int64_t v) { return v == 0 || v == 1; });
}

} // namespace oreg
