#pragma once

#include <vector>

#include "treespectra/polynomial.hpp"
#include "treespectra/rational.hpp"

namespace treespectra {

struct RootInterval {
    BigRational lo, hi;
    bool exact() const { return lo == hi; }
};

// Isolating intervals for the distinct real roots of a square-free polynomial
// in [lo, hi], each refined to width <= max_width, sorted ascending. Rational
// roots hit during bisection come back as degenerate intervals.
std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& f, const BigRational& lo,
                                             const BigRational& hi, const BigRational& max_width);

// The rational with smallest denominator in [lo, hi] (continued-fraction walk).
BigRational simplest_rational_in(const BigRational& lo, const BigRational& hi);

// Double approximation of the root bracketed by iv: interval midpoint followed
// by Newton steps on f, clamped to the interval.
double refine_root_double(const RationalPolynomial& f, const RootInterval& iv);

}  // namespace treespectra
