#pragma once

#include "zetakit/numeric.hpp"

#include <doctest.h>

namespace zetakit::test {

// Oracle values below were produced once with mpmath at 60 digits and frozen.
inline Real ref(const char* digits) { return Real(digits); }

inline double rel(const Real& value, const Real& expected) {
    return relative_error(value, expected, 1e-300).convert_to<double>();
}

}  // namespace zetakit::test

#define CHECK_REL(value, expected, tol) CHECK(::zetakit::test::rel((value), (expected)) <= (tol))
