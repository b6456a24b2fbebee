#include "rbf/tensor2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rbf/numeric.hpp"

namespace rbf {
namespace {

using detail::NeumaierSum;

void require_quadrature_grid(GridSize P) {
    if (P.value() < 2) throw std::domain_error("tensor2d: need P >= 2");
}

}  // namespace

std::int64_t Spectrum2D::max_abs_mode() const {
    std::int64_t m = 0;
    for (const auto& [k, c] : modes_) m = std::max({m, std::abs(k.first), std::abs(k.second)});
    return m;
}

double Spectrum2D::max_hermitian_violation() const {
    double worst = 0.0;
    for (const auto& [k, c] : modes_)
        worst = std::max(worst, std::abs(mode(-k.first, -k.second) - std::conj(c)));
    return worst;
}

void Spectrum2D::validate() const {
    if (symmetric_real_ && max_hermitian_violation() > 1e-12)
        throw std::invalid_argument("Spectrum2D: declared symmetric-real but c_{-k} != conj(c_k)");
}

Complex chi2d(GridSize P, double y1, double y2) {
    return chi_tilde_closed(P, y1).value * chi_tilde_closed(P, y2).value;
}

Complex bias_rbf_2d(const Spectrum2D& spec, GridSize P, FilterPath path) {
    require_quadrature_grid(P);
    double Pd = static_cast<double>(P.value());
    NeumaierSum re, im;
    for (const auto& [k, c] : spec.modes()) {
        auto [k1, k2] = k;
        if (k1 == 0 && k2 == 0) continue;
        if (path == FilterPath::Indicator) {
            if (character_orthogonality_check(P, k1) && character_orthogonality_check(P, k2)) {
                re.add(c.real());
                im.add(c.imag());
            }
        } else {
            Complex filtered =
                c * chi2d(P, static_cast<double>(k1) / Pd, static_cast<double>(k2) / Pd);
            re.add(filtered.real());
            im.add(filtered.imag());
        }
    }
    return {re.value(), im.value()};
}

Alias2DResult bias_classical_2d(const Spectrum2D& spec, GridSize P, std::int64_t l_max) {
    require_quadrature_grid(P);
    if (l_max < 1) throw std::domain_error("bias_classical_2d: need l_max >= 1");
    NeumaierSum re, im;
    for (std::int64_t l1 = -l_max; l1 <= l_max; ++l1) {
        for (std::int64_t l2 = -l_max; l2 <= l_max; ++l2) {
            if (l1 == 0 && l2 == 0) continue;
            Complex c = spec.mode(l1 * P.value(), l2 * P.value());
            re.add(c.real());
            im.add(c.imag());
        }
    }
    bool covered = l_max * P.value() >= spec.max_abs_mode();
    return {{re.value(), im.value()}, covered};
}

Spectrum2D prod_cos8pi_spectrum() {
    Spectrum2D spec;
    for (std::int64_t k1 : {-4, 4})
        for (std::int64_t k2 : {-4, 4}) spec.set_mode(k1, k2, {0.25, 0.0});
    spec.declare_symmetric_real(true);
    return spec;
}

}  // namespace rbf
