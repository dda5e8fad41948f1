#include "doctest.h"

#include <cmath>
#include <random>

#include "oregonator/field.hpp"

using namespace oreg;

TEST_CASE("mean5 on constants and at alpha = 0") {
    const auto b = BoundaryRule<double>::periodic();
    RealField2D f(5, 4, 2.5);
    for (int alpha : {0, 1, 3})
        for (double v : mean5(f, alpha, b)) CHECK(v == doctest::Approx(2.5).epsilon(1e-15));

    RealField2D g(4, 4);
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) g.at(j, k) = j * 10 + k;
    CHECK(mean5(g, 0, b) == g);
}

TEST_CASE("mean5 spreads a point source over the plus stencil") {
    RealField2D f(5, 5, 0.0);
    f.at(0, 0) = 5.0;
    const auto out = mean5(f, 1, BoundaryRule<double>::fixed(0.0));
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 5; ++j) {
            const bool on_plus = (j == 0 && k == 0) || (j == 1 && k == 0) || (j == 0 && k == 1);
            CHECK(out.at(j, k) == (on_plus ? 1.0 : 0.0));
        }
}

TEST_CASE("max5 identity, plus shape, constants") {
    const auto b = BoundaryRule<std::int64_t>::fixed(0);
    IntField2D f(5, 5, 0);
    f.at(2, 2) = 1;
    CHECK(max5(f, 0, b) == f);

    const auto out = max5(f, 1, b);
    int ones = 0;
    for (auto v : out) ones += v == 1;
    CHECK(ones == 5);
    CHECK(out.at(2, 2) == 1);
    CHECK(out.at(1, 2) == 1);
    CHECK(out.at(3, 2) == 1);
    CHECK(out.at(2, 1) == 1);
    CHECK(out.at(2, 3) == 1);

    IntField2D c(3, 3, -3);
    CHECK(max5(c, 1, BoundaryRule<std::int64_t>::periodic()) == c);
}

TEST_CASE("field_sum basics") {
    CHECK(field_sum(RealField2D(2, 2, 1.0)) == 4.0);
    CHECK(field_sum(RealField2D(1, 1, 7.25)) == 7.25);
}

TEST_CASE("mean5 conserves the sum under periodic boundary") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> val(0.1, 3.0);
    RealField2D f(64, 64);
    for (auto& v : f) v = val(rng);
    const double before = field_sum(f);
    for (int alpha : {1, 2, 5}) {
        const double after = field_sum(mean5(f, alpha, BoundaryRule<double>::periodic()));
        CHECK(std::abs(after - before) / before <= 1e-12);
    }
}

TEST_CASE("max5 is monotone and deterministic") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<std::int64_t> val(-9, 9);
    std::uniform_int_distribution<std::int64_t> bumpv(0, 4);
    const auto b = BoundaryRule<std::int64_t>::periodic();
    for (int trial = 0; trial < 50; ++trial) {
        IntField2D f(8, 8), g(8, 8);
        for (int k = 0; k < 8; ++k)
            for (int j = 0; j < 8; ++j) {
                f.at(j, k) = val(rng);
                g.at(j, k) = f.at(j, k) + bumpv(rng);
            }
        const auto mf = max5(f, 1, b), mg = max5(g, 1, b);
        for (int k = 0; k < 8; ++k)
            for (int j = 0; j < 8; ++j) CHECK(mf.at(j, k) <= mg.at(j, k));
        CHECK(max5(f, 1, b) == mf);
    }
}

TEST_CASE("boundary rules resolve out-of-range samples") {
    IntField2D f(3, 2, 0);
    f.at(0, 0) = 7;
    CHECK(f.sample(-3, 0, BoundaryRule<std::int64_t>::periodic()) == 7);
    CHECK(f.sample(-1, 0, BoundaryRule<std::int64_t>::fixed(9)) == 9);
    // offset larger than the grid is fine under Fixed
    const auto out = max5(f, 10, BoundaryRule<std::int64_t>::fixed(-5));
    CHECK(out.at(0, 0) == 7);
    CHECK(out.at(1, 0) == 0);
}

TEST_CASE("guard rejects values beyond 2^40") {
    CHECK_THROWS_AS(check_guard((std::int64_t{1} << 40) + 1), std::overflow_error);
    CHECK_NOTHROW(check_guard(std::int64_t{1} << 40));
    CHECK_THROWS_AS(RealField2D(0, 3), std::invalid_argument);
}
