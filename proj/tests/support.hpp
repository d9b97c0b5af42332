#pragma once

#include <doctest.h>

#include "modp/error.hpp"

// Evaluates expr and checks it throws modp::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                                    \
    do {                                                                    \
        bool thrown_ = false;                                               \
        try {                                                               \
            (void)(expr);                                                   \
        } catch (const modp::Error& e_) {                                   \
            thrown_ = true;                                                 \
            CHECK_MESSAGE(e_.code() == (expected), e_.what());              \
        }                                                                   \
        CHECK_MESSAGE(thrown_, "expected an exception from " #expr);        \
    } while (0)
