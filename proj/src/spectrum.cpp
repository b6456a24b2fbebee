#include "rbf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rbf/numeric.hpp"

namespace rbf {
namespace {

using detail::NeumaierSum;

void require_quadrature_grid(GridSize P) {
    if (P.value() < 2) throw std::domain_error("spectrum: need P >= 2");
}

void require_window(std::int64_t l_max) {
    if (l_max < 1) throw std::domain_error("spectrum: need l_max >= 1");
}

}  // namespace

std::int64_t FourierSpectrum::max_abs_mode() const {
    std::int64_t m = 0;
    for (const auto& [k, c] : modes_) m = std::max(m, std::abs(k));
    return m;
}

double FourierSpectrum::max_hermitian_violation() const {
    double worst = 0.0;
    for (const auto& [k, c] : modes_) worst = std::max(worst, std::abs(mode(-k) - std::conj(c)));
    return worst;
}

void FourierSpectrum::validate() const {
    if (symmetric_real_ && max_hermitian_violation() > 1e-12)
        throw std::invalid_argument(
            "FourierSpectrum: declared symmetric-real but c_{-k} != conj(c_k)");
}

Complex bias_rbf_general(const FourierSpectrum& spec, GridSize P, FilterPath path) {
    require_quadrature_grid(P);
    double Pd = static_cast<double>(P.value());
    NeumaierSum re, im;
    for (const auto& [k, c] : spec.modes()) {
        if (k == 0) continue;
        if (path == FilterPath::Indicator) {
            if (character_orthogonality_check(P, k)) {
                re.add(c.real());
                im.add(c.imag());
            }
        } else {
            Complex filtered = c * chi_tilde_closed(P, static_cast<double>(k) / Pd).value;
            re.add(filtered.real());
            im.add(filtered.imag());
        }
    }
    return {re.value(), im.value()};
}

AliasResult bias_classical_alias(const FourierSpectrum& spec, GridSize P, std::int64_t l_max) {
    require_quadrature_grid(P);
    require_window(l_max);
    NeumaierSum re, im;
    for (std::int64_t l = -l_max; l <= l_max; ++l) {
        if (l == 0) continue;
        Complex c = spec.mode(l * P.value());
        re.add(c.real());
        im.add(c.imag());
    }
    bool covered = l_max * P.value() >= spec.max_abs_mode();
    return {{re.value(), im.value()}, covered};
}

double bias_real_reduction(const FourierSpectrum& spec, GridSize P, std::int64_t l_max) {
    require_quadrature_grid(P);
    require_window(l_max);
    if (!spec.declared_symmetric_real())
        throw std::invalid_argument("bias_real_reduction: spectrum not declared symmetric-real");
    spec.validate();
    NeumaierSum acc;
    for (std::int64_t l = 1; l <= l_max; ++l) acc.add(2.0 * spec.mode(l * P.value()).real());
    return acc.value();
}

FourierSpectrum estimate_spectrum_dft(const PeriodicFunction& f, GridSize N, double drop_tol,
                                      std::optional<std::int64_t> k_max) {
    std::int64_t n = N.value();
    if (n < 2) throw std::domain_error("estimate_spectrum_dft: need N >= 2");
    if (drop_tol < 0.0) throw std::domain_error("estimate_spectrum_dft: need drop_tol >= 0");
    std::int64_t kmax = k_max.value_or((n - 1) / 2);
    if (kmax < 0 || kmax >= n / 2 + n % 2)
        throw std::domain_error("estimate_spectrum_dft: modes >= N/2 are pure aliases");

    double Nd = static_cast<double>(n);
    std::vector<double> samples(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j)
        samples[static_cast<std::size_t>(j)] = f.evaluate(static_cast<double>(j) / Nd);

    // exact root-of-unity table: w_r = e^{−2πir/N}; the quadrant-reduced
    // sin/cos make w_{N−r} the exact conjugate of w_r, so real input yields
    // exactly Hermitian output
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        double t = 2.0 * static_cast<double>(r) / Nd;
        roots[static_cast<std::size_t>(r)] = {detail::cospi_norm(t), -detail::sinpi_norm(t)};
    }

    FourierSpectrum spec;
    for (std::int64_t k = -kmax; k <= kmax; ++k) {
        std::int64_t step = ((k % n) + n) % n;
        NeumaierSum re, im;
        for (std::int64_t j = 0; j < n; ++j) {
            const Complex& w = roots[static_cast<std::size_t>((step * j) % n)];
            double fj = samples[static_cast<std::size_t>(j)];
            re.add(fj * w.real());
            im.add(fj * w.imag());
        }
        Complex c{re.value() / Nd, im.value() / Nd};
        if (std::abs(c) > drop_tol) spec.set_mode(k, c);
    }
    spec.declare_symmetric_real(true);
    spec.set_source_n(n);
    return spec;
}

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta: need s > 1");
    NeumaierSum acc;
    double n = 1.0;
    for (;;) {
        acc.add(std::pow(n, -s));
        // midpoint-rule tail: Σ_{j>n} j^{−s} = ∫_{n+1/2}^{∞} x^{−s} dx + err
        // with |err| ≤ (s/24)·n^{−s−1}; stop once that error is dust
        if (n >= 10.0 && s / 24.0 * std::pow(n, -s - 1.0) < 1e-16) break;
        n += 1.0;
    }
    double tail = std::pow(n + 0.5, 1.0 - s) / (s - 1.0);
    return acc.value() + tail;
}

double bound_algebraic(const AlgebraicDecay& model, GridSize P) {
    if (model.s < 1)
        throw std::domain_error("bound_algebraic: need s >= 1 (zeta(1) diverges at s = 0)");
    if (!(model.coefficient > 0.0) || !std::isfinite(model.coefficient))
        throw std::domain_error("bound_algebraic: need C > 0");
    double sp1 = static_cast<double>(model.s + 1);
    return 2.0 * model.coefficient * riemann_zeta(sp1) *
           std::pow(static_cast<double>(P.value()), -sp1);
}

ExponentialBound bound_exponential(const ExponentialDecay& model, GridSize P) {
    if (!(model.gamma > 0.0) || !std::isfinite(model.gamma))
        throw std::domain_error("bound_exponential: need gamma > 0");
    if (!(model.coefficient > 0.0) || !std::isfinite(model.coefficient))
        throw std::domain_error("bound_exponential: need C > 0");
    double x = model.gamma * static_cast<double>(P.value());
    if (x > 700.0) return {0.0, true};  // e^{−x} underflows
    double geom = std::exp(-x) / (-std::expm1(-x));
    return {2.0 * model.coefficient * geom, false};
}

ExponentialDecay fit_exponential_tail(const FourierSpectrum& spec) {
    // least squares of log|c_k| on |k|, then lift C to make the model a
    // majorant of every stored mode
    std::vector<std::pair<double, double>> pts;
    for (const auto& [k, c] : spec.modes()) {
        double a = std::abs(c);
        if (k != 0 && a > 0.0) pts.push_back({static_cast<double>(std::abs(k)), std::log(a)});
    }
    if (pts.size() < 2) throw std::domain_error("fit_exponential_tail: need >= 2 nonzero modes");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double nn = static_cast<double>(pts.size());
    double denom = nn * sxx - sx * sx;
    if (denom == 0.0) throw std::domain_error("fit_exponential_tail: degenerate mode layout");
    double slope = (nn * sxy - sx * sy) / denom;
    double gamma = -slope;
    if (!(gamma > 0.0)) throw std::domain_error("fit_exponential_tail: spectrum tail does not decay");
    double coeff = 0.0;
    for (const auto& [k, c] : spec.modes())
        if (k != 0)
            coeff = std::max(coeff, std::abs(c) * std::exp(gamma * std::abs(static_cast<double>(k))));
    return {gamma, coeff};
}

FourierSpectrum cosine_mode_spectrum(std::int64_t n) {
    if (n < 1) throw std::domain_error("cosine_mode_spectrum: need n >= 1");
    FourierSpectrum spec;
    spec.set_mode(n, {0.5, 0.0});
    spec.set_mode(-n, {0.5, 0.0});
    spec.declare_symmetric_real(true);
    return spec;
}

FourierSpectrum sin2_integer_spectrum(std::int64_t m) {
    if (m < 1) throw std::domain_error("sin2_integer_spectrum: need m >= 1");
    FourierSpectrum spec;
    spec.set_mode(0, {0.5, 0.0});
    spec.set_mode(m, {-0.25, 0.0});
    spec.set_mode(-m, {-0.25, 0.0});
    spec.declare_symmetric_real(true);
    return spec;
}

BiasReport make_bias_report(Complex rbf, std::optional<Complex> classical,
                            std::optional<double> direct) {
    BiasReport report;
    report.rbf_bias = rbf;
    report.classical_bias = classical;
    report.direct_bias = direct;
    double worst = 0.0;
    if (classical) worst = std::max(worst, std::abs(rbf - *classical));
    if (direct) worst = std::max(worst, std::abs(rbf - Complex{*direct, 0.0}));
    if (classical && direct) worst = std::max(worst, std::abs(*classical - Complex{*direct, 0.0}));
    report.max_pairwise_discrepancy = worst;
    return report;
}

}  // namespace rbf
