#pragma once
//
// Sparse Fourier spectra and the two equivalent faces of the trapezoid bias
// for f(x) = Σ_k c_k e^{2πikx}:
//
//   filter view   B_P[f] = Σ_{k≠0} c_k · χ̃_P(k/P)    (every mode, filtered)
//   alias view    B_P[f] = Σ_{l≠0} c_{lP}             (lattice modes only)
//
// For integer k the filter χ̃_P(k/P) is exactly the indicator [P | k], which
// is why the two sums agree identically — the filter picture just makes the
// mechanism visible.  Also here: the DFT spectrum estimator (direct
// summation, desk scale), decay-model tail bounds with a hand-rolled ζ, and
// the exponential-tail fit used to bound smooth spectra.
//
#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include "rbf/grid.hpp"
#include "rbf/quadrature.hpp"
#include "rbf/resonance.hpp"

namespace rbf {

// Finite sparse spectrum {k → c_k}.  declared_symmetric_real is the caller's
// promise that f is real (c_{−k} = conj(c_k)); bias_real_reduction requires
// it and validate() enforces it.  source_n records the estimating DFT's N so
// consumers can respect the self-aliasing guard l_max·P < N/2.
class FourierSpectrum {
  public:
    using Modes = std::map<std::int64_t, Complex>;

    void set_mode(std::int64_t k, Complex c) { modes_[k] = c; }
    Complex mode(std::int64_t k) const {
        auto it = modes_.find(k);
        return it == modes_.end() ? Complex{0.0, 0.0} : it->second;
    }
    const Modes& modes() const { return modes_; }

    bool declared_symmetric_real() const { return symmetric_real_; }
    void declare_symmetric_real(bool flag) { symmetric_real_ = flag; }

    std::optional<std::int64_t> source_n() const { return source_n_; }
    void set_source_n(std::int64_t n) { source_n_ = n; }

    std::int64_t max_abs_mode() const;          // 0 for the empty spectrum
    double max_hermitian_violation() const;     // max_k |c_{−k} − conj(c_k)|
    void validate() const;                      // throws if the symmetry promise is broken

  private:
    Modes modes_;
    bool symmetric_real_ = false;
    std::optional<std::int64_t> source_n_;
};

// Indicator is the exact fast path ([P | k] for integer k); Diagnostic runs
// every mode through the full χ̃ evaluator so exports can show the genuine
// filter values.  The two agree to ~1e−15.
enum class FilterPath { Indicator, Diagnostic };

// Σ_{k≠0} c_k·χ̃_P(k/P).  P ≥ 2.
Complex bias_rbf_general(const FourierSpectrum& spec, GridSize P,
                         FilterPath path = FilterPath::Indicator);

// Σ_{0<|l|≤l_max} c_{lP}.  covered says whether the window l_max·P reaches
// every stored mode (exact truncation for finite spectra).
struct AliasResult {
    Complex value;
    bool covered;
};
AliasResult bias_classical_alias(const FourierSpectrum& spec, GridSize P, std::int64_t l_max);

// Real-function reduction Σ_{l≥1} 2·Re(c_{lP}); requires the symmetry
// promise (contract error otherwise).
double bias_real_reduction(const FourierSpectrum& spec, GridSize P, std::int64_t l_max);

// ĉ_k = (1/N)·Σ_j f(j/N)·e^{−2πikj/N} for |k| ≤ k_max (default N/2 − 1), by
// direct summation over an exact root-of-unity table; drops |ĉ_k| ≤ drop_tol,
// marks the result symmetric-real, and stamps source_n = N.  Requesting
// k_max ≥ N/2 is a domain error (those modes are pure aliases).
FourierSpectrum estimate_spectrum_dft(const PeriodicFunction& f, GridSize N, double drop_tol,
                                      std::optional<std::int64_t> k_max = std::nullopt);

// |c_k| ≤ C·|k|^{−s−1} (f ∈ C^{s+1}) and |c_k| ≤ C·e^{−γ|k|} (analytic).
struct AlgebraicDecay {
    std::int64_t s;
    double coefficient;
};
struct ExponentialDecay {
    double gamma;
    double coefficient;
};

// ζ(s) for s > 1 by direct series with a midpoint-rule integral tail;
// absolute error well under 1e−14.
double riemann_zeta(double s);

// Worst-case |B_P| ≤ 2·C·ζ(s+1)·P^{−s−1} under algebraic decay.  s = 0 is a
// domain error (ζ(1) diverges).
double bound_algebraic(const AlgebraicDecay& model, GridSize P);

// Worst-case |B_P| ≤ 2·C·e^{−γP}/(1 − e^{−γP}) under exponential decay.
// γP > 700 would underflow e^{−γP}; reported via the flag instead of garbage.
struct ExponentialBound {
    double value;
    bool underflow;
};
ExponentialBound bound_exponential(const ExponentialDecay& model, GridSize P);

// Least-squares fit of log|c_k| against |k| over the stored modes (k ≠ 0),
// then C is lifted until C·e^{−γ|k|} majorizes every stored mode — the fit
// is a bound, not a regression line.
ExponentialDecay fit_exponential_tail(const FourierSpectrum& spec);

// Band-limited spectra of the registry entries.
FourierSpectrum cosine_mode_spectrum(std::int64_t n);   // cos(2πnx): c_{±n} = 1/2
FourierSpectrum sin2_integer_spectrum(std::int64_t m);  // sin²(πmx): c_0 = 1/2, c_{±m} = −1/4

// One bundled comparison of every bias path that applies to a function.
// classical_bias is absent when no finite or estimated spectrum applies
// (e.g. the sin² prototype at non-integer m, whose periodization is not
// band-limited); direct_bias is absent without a known exact integral.
struct BiasReport {
    Complex rbf_bias{0.0, 0.0};
    std::optional<Complex> classical_bias;
    std::optional<double> direct_bias;
    double max_pairwise_discrepancy = 0.0;
};
BiasReport make_bias_report(Complex rbf, std::optional<Complex> classical,
                            std::optional<double> direct);

}  // namespace rbf
