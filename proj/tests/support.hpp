#pragma once

#include <cmath>
#include <numbers>

#include "doctest.h"

inline constexpr double kPi = std::numbers::pi;

// CHECK that |a - b| < tol and show both values when it fails.
#define CHECK_NEAR(a, b, tol)                                           \
    do {                                                                \
        const double check_a_ = (a);                                    \
        const double check_b_ = (b);                                    \
        INFO("lhs=", check_a_, " rhs=", check_b_, " tol=", (tol));      \
        CHECK(std::abs(check_a_ - check_b_) < (tol));                   \
    } while (0)

#define CHECK_REL(a, b, tol)                                                      \
    do {                                                                          \
        const double check_a_ = (a);                                              \
        const double check_b_ = (b);                                              \
        INFO("lhs=", check_a_, " rhs=", check_b_, " rel tol=", (tol));            \
        CHECK(std::abs(check_a_ - check_b_) < (tol) * std::abs(check_b_));        \
    } while (0)
