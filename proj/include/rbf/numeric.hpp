#pragma once
//
// Low-level floating-point helpers shared by the resonance evaluators.
//
// The recurring problem: we need sin/cos of π·(large product) where only the
// product's value mod 2 matters.  Computing fl(a·b) and calling std::sin
// throws away exactly the low-order bits that survive the reduction, so
// frac2_prod recovers the product's rounding error with an fma and folds it
// back in after the (exact) mod-2 subtraction.  sinpi_norm/cospi_norm then
// reduce to a quarter period using only exact subtractions (Sterbenz), so the
// sole inexact step is one small-argument std::sin/std::cos call.
//
#include <cmath>
#include <numbers>

namespace rbf::detail {

inline constexpr double kPi = std::numbers::pi;

// y − ⌊y⌋ ∈ [0,1).  Exact for |y| < 2^52; the guard catches the one rounding
// case (y a hair below an integer from the left) that would return 1.0.
inline double frac1(double y) {
    double r = y - std::floor(y);
    if (r >= 1.0 || r < 0.0) r = 0.0;
    return r;
}

// (a·b) mod 2 ∈ [0,2).  p carries the rounded product, e its exact rounding
// error (fma), and the mod-2 subtraction is exact because p and 2⌊p/2⌋ lie on
// the same ulp grid.  Adding e back restores the sub-ulp phase.
inline double frac2_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    double r = p - 2.0 * std::floor(p * 0.5);
    r += e;
    if (r >= 2.0) r -= 2.0;
    if (r < 0.0) r += 2.0;
    return r;
}

// sin(πt) for t ∈ [0,2).  The reductions t−1, 1−t are exact (Sterbenz), so
// accuracy is that of std::sin on [0, π/2].
inline double sinpi_norm(double t) {
    double sign = 1.0;
    if (t >= 1.0) {
        t -= 1.0;
        sign = -1.0;
    }
    if (t > 0.5) t = 1.0 - t;
    return sign * std::sin(kPi * t);
}

// cos(πt) for t ∈ [0,2), same reduction discipline.  The middle quadrants go
// through sin(π(1/2 − t)) so the argument stays small where cos is steep.
inline double cospi_norm(double t) {
    if (t >= 1.0) t = 2.0 - t;  // cos(2π − x) = cos(x)
    if (t <= 0.25) return std::cos(kPi * t);
    if (t < 0.75) return std::sin(kPi * (0.5 - t));
    return -std::cos(kPi * (1.0 - t));
}

// distance from y to the nearest integer, in [0, 1/2]
inline double integer_distance(double y) {
    double f = frac1(y);
    return f <= 0.5 ? f : 1.0 - f;
}

// Neumaier's compensated accumulator.  The branch keeps the correction term
// valid whichever operand dominates, so the running error stays O(ε)
// independent of term count.  Used wherever thousands of terms meet a 1e−12
// budget (grid sums, DFT loops, ζ series).
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace rbf::detail
