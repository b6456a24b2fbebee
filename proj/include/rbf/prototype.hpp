#pragma once
//
// Exact analytics for the prototype integrand f(x) = sin²(2πkx), with
// effective frequency m = 2k.  Everything is closed form:
//
//   ∫₀¹ sin²(2πkx) dx = 1/2 − C(m),      C(m) = sin(2πm)/(4πm),
//   S_P(m) = Σ_{j=0}^{P−1} cos(2πmj/P) = P·χ_P(m/P),
//   B_P   = −½·χ_P(m/P) + C(m)           (the P-point trapezoid bias, exact).
//
// The bias expression is the identity the direct quadrature oracle gets
// checked against: the two agree to ~1e−15 at any (P, m), resonant or not.
//
#include "rbf/grid.hpp"

namespace rbf {

// k > 0 is the fundamental frequency; m = 2k is what the formulas consume.
// Constructible from either side (both conversions are exact in binary).
struct PrototypeParams {
    double k;
    double m;

    static PrototypeParams from_k(double k);
    static PrototypeParams from_m(double m);
};

// C(m) = sin(2πm)/(4πm), the deviation of the exact integral from 1/2.
// C → 1/2 as m → 0⁺; |C(m)| ≤ 1/(4πm); vanishes exactly whenever 2m is a
// non-zero integer (so at half-integers as well as integers).
struct CorrectionTerm {
    double m;
    double value;
};
CorrectionTerm correction_term(double m);

// ∫₀¹ sin²(2πkx) dx = 1/2 − C(m)
double exact_integral_sin2(const PrototypeParams& params);

// S_P(m), evaluated as P·χ_P(m/P) through the stable resonance core.  The
// direct cosine sum exists only in tests, as the independent oracle.
double finite_cosine_sum(GridSize P, double m);

// Trapezoid bias of the prototype: −½·χ_P(m/P) + C(m).
double bias_sin2(GridSize P, const PrototypeParams& params);

}  // namespace rbf
