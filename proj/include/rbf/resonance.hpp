#pragma once
//
// Grid resonance function
//
//     χ̃_P(y) = (1/P) Σ_{j=0}^{P−1} e^{2πiyj},
//
// the normalized character average that measures how strongly a frequency y
// (relative to the sampling rate) locks onto a P-point periodic grid.
// Key facts, all load-bearing downstream:
//
//   · χ̃_P(y+1) = χ̃_P(y)            (1-periodicity)
//   · χ̃_P(−y) = conj(χ̃_P(y))       (conjugate symmetry)
//   · |χ̃_P(y)| ≤ 1, = 1 iff y ∈ ℤ  (full resonance only on integers)
//   · χ̃_P(n/P) = 0 for n ≢ 0 mod P (complete root-of-unity cancellation)
//   · χ̃_1 ≡ 1                      (degenerate one-point grid)
//
// Away from integers the sum collapses to the closed form
//
//     χ̃_P(y) = (1/P) e^{iπ(P−1)y} · sin(πPy)/sin(πy),
//
// which is what chi_tilde_closed evaluates — but only where the sine ratio is
// well-conditioned.  Near ℤ it is a 0/0 limit, so a guard band hands those
// points back to the direct sum (unconditionally stable, just O(P)).
//
#include <complex>
#include <cstdint>
#include <vector>

#include "rbf/grid.hpp"

namespace rbf {

using Complex = std::complex<double>;

// Which evaluation path produced a value.  IntegerLimit is reserved for the
// exact resonance value 1+0i, so branch == IntegerLimit ⟺ value == 1.
enum class EvalBranch { NaiveSum, ClosedForm, IntegerLimit };

struct ResonanceValue {
    Complex value;
    EvalBranch branch;
};

// Direct O(P) character average with compensated accumulation.  The reference
// evaluator: defined for every finite y, used as the cross-check oracle and
// inside the closed form's guard band.
ResonanceValue chi_tilde_naive(GridSize P, double y);

// Closed-form evaluator with guard bands around ℤ:
//   dist(y,ℤ) ≤ 1e−12 → exactly 1 (IntegerLimit)
//   dist(y,ℤ) ≤ 1e−6  → direct sum (sin ratio too ill-conditioned)
//   otherwise         → sine-ratio closed form
ResonanceValue chi_tilde_closed(GridSize P, double y);

// χ_P(y) = Re χ̃_P(y); for non-integer y this is
// (1/P)·(sin(πPy)/sin(πy))·cos(π(P−1)y).
double chi_real(GridSize P, double y);

// Quadratic model of the resonance lobe around the integer peak at k:
//     χ_P(k+ε) ≈ 1 − π²(P−1)(2P−1)ε²/3,
// intended for |ε| ≲ 1/(2P).  This is a local model, never a substitute for
// chi_real.  (χ_P is even about each integer, so the neglected remainder is
// quartic in ε, not cubic.)
double chi_taylor_lobe(GridSize P, std::int64_t k, double eps);

// ∂²χ_P/∂y² at the resonance peaks: −2π²(P−1)(2P−1)/3, the same at every
// integer peak.
double chi_curvature_at_peak(GridSize P);

// The P unit phasors e^{2πiyj}, j = 0..P−1, and their mean (= χ̃_P(y)).
struct ArrowsDecomposition {
    std::vector<Complex> arrows;
    Complex centroid;
};
ArrowsDecomposition arrows(GridSize P, double y);

// Exact value of χ̃_P(k/P) for integer k: 1 if P | k, else 0 (the sampled
// phasors form complete root-of-unity sets).  This indicator is the fast path
// of the spectral filter.
int character_orthogonality_check(GridSize P, std::int64_t k);

}  // namespace rbf
