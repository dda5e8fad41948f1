#include "doctest.h"

#include "oregonator/verify.hpp"

TEST_CASE("every property suite passes") {
    for (const auto& r : oreg::verify_all()) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}
