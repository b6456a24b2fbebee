#include "rbf/resonance.hpp"

#include <cmath>
#include <stdexcept>

#include "rbf/numeric.hpp"

namespace rbf {
namespace {

using detail::cospi_norm;
using detail::frac1;
using detail::frac2_prod;
using detail::NeumaierSum;
using detail::sinpi_norm;

constexpr double kIntegerTol = 1e-12;  // exact-resonance band
constexpr double kGuardTol = 1e-6;     // closed form untrusted below this

void require_finite(double y) {
    if (!std::isfinite(y)) throw std::domain_error("resonance: y must be finite");
}

// Exact resonance gets its dedicated label wherever it shows up (P = 1,
// integer y) so that branch == IntegerLimit ⟺ value == 1 holds by
// construction.
EvalBranch classify(const Complex& v, EvalBranch produced_by) {
    return v == Complex(1.0, 0.0) ? EvalBranch::IntegerLimit : produced_by;
}

// e^{2πi·y·j} with the phase reduced mod 2 before sin/cos.  two_y must be
// 2·frac1(y), which is exact.
Complex unit_phasor(double two_y, std::int64_t j) {
    double t = frac2_prod(two_y, static_cast<double>(j));
    return {cospi_norm(t), sinpi_norm(t)};
}

Complex naive_mean(std::int64_t P, double y) {
    double two_y = 2.0 * frac1(y);
    NeumaierSum re, im;
    for (std::int64_t j = 0; j < P; ++j) {
        Complex a = unit_phasor(two_y, j);
        re.add(a.real());
        im.add(a.imag());
    }
    // divide, don't multiply by 1/P: P/P = 1 exactly on resonance
    double Pd = static_cast<double>(P);
    return {re.value() / Pd, im.value() / Pd};
}

}  // namespace

ResonanceValue chi_tilde_naive(GridSize P, double y) {
    require_finite(y);
    Complex v = naive_mean(P.value(), y);
    return {v, classify(v, EvalBranch::NaiveSum)};
}

ResonanceValue chi_tilde_closed(GridSize P, double y) {
    require_finite(y);
    std::int64_t n = P.value();
    if (n == 1) return {Complex(1.0, 0.0), EvalBranch::IntegerLimit};

    double d = detail::integer_distance(y);
    if (d <= kIntegerTol) return {Complex(1.0, 0.0), EvalBranch::IntegerLimit};
    if (d <= kGuardTol) {
        Complex v = naive_mean(n, y);
        return {v, classify(v, EvalBranch::NaiveSum)};
    }

    double yr = frac1(y);  // ∈ (1e−6, 1 − 1e−6) here, so sin(πyr) is safe
    double Pd = static_cast<double>(n);
    double num = sinpi_norm(frac2_prod(Pd, yr));
    double den = sinpi_norm(yr);
    double tp = frac2_prod(Pd - 1.0, yr);  // phase angle / π, mod 2
    Complex phase(cospi_norm(tp), sinpi_norm(tp));
    Complex v = (num / (Pd * den)) * phase;
    return {v, classify(v, EvalBranch::ClosedForm)};
}

double chi_real(GridSize P, double y) { return chi_tilde_closed(P, y).value.real(); }

double chi_taylor_lobe(GridSize P, std::int64_t /*k*/, double eps) {
    // the lobe shape is identical at every integer peak, so k only fixes the
    // expansion point and drops out of the model
    double Pd = static_cast<double>(P.value());
    double curv_half = detail::kPi * detail::kPi * (Pd - 1.0) * (2.0 * Pd - 1.0) / 3.0;
    return 1.0 - curv_half * eps * eps;
}

double chi_curvature_at_peak(GridSize P) {
    double Pd = static_cast<double>(P.value());
    return -2.0 * detail::kPi * detail::kPi * (Pd - 1.0) * (2.0 * Pd - 1.0) / 3.0;
}

ArrowsDecomposition arrows(GridSize P, double y) {
    require_finite(y);
    std::int64_t n = P.value();
    ArrowsDecomposition out;
    out.arrows.reserve(static_cast<std::size_t>(n));
    double two_y = 2.0 * frac1(y);
    NeumaierSum re, im;
    for (std::int64_t j = 0; j < n; ++j) {
        Complex a = unit_phasor(two_y, j);
        out.arrows.push_back(a);
        re.add(a.real());
        im.add(a.imag());
    }
    double Pd = static_cast<double>(n);
    out.centroid = {re.value() / Pd, im.value() / Pd};
    return out;
}

int character_orthogonality_check(GridSize P, std::int64_t k) {
    return k % P.value() == 0 ? 1 : 0;
}

}  // namespace rbf
