#include "rbf/prototype.hpp"

#include <cmath>
#include <stdexcept>

#include "rbf/numeric.hpp"
#include "rbf/resonance.hpp"

namespace rbf {
namespace {

void require_positive_m(double m) {
    if (!std::isfinite(m) || m <= 0.0)
        throw std::domain_error("prototype: need finite m > 0");
}

void require_quadrature_grid(GridSize P) {
    if (P.value() < 2) throw std::domain_error("prototype: need P >= 2");
}

}  // namespace

PrototypeParams PrototypeParams::from_k(double k) {
    PrototypeParams p{k, 2.0 * k};
    require_positive_m(p.m);
    return p;
}

PrototypeParams PrototypeParams::from_m(double m) {
    PrototypeParams p{0.5 * m, m};
    require_positive_m(p.m);
    return p;
}

CorrectionTerm correction_term(double m) {
    if (!std::isfinite(m) || m < 0.0) throw std::domain_error("correction_term: need m >= 0");
    // Below 1e−8 the dropped series term (πm)²/6 ≲ 1.7e−17 is under double
    // resolution of 1/2, so the limit branch keeps C continuous to machine
    // precision.
    if (m < 1e-8) return {m, 0.5};
    // sin(2πm) through mod-2 reduction: exactly zero whenever 2m ∈ ℤ
    double s = detail::sinpi_norm(detail::frac2_prod(2.0, m));
    return {m, s / (4.0 * detail::kPi * m)};
}

double exact_integral_sin2(const PrototypeParams& params) {
    require_positive_m(params.m);
    return 0.5 - correction_term(params.m).value;
}

double finite_cosine_sum(GridSize P, double m) {
    require_quadrature_grid(P);
    require_positive_m(m);
    double Pd = static_cast<double>(P.value());
    return Pd * chi_real(P, m / Pd);
}

double bias_sin2(GridSize P, const PrototypeParams& params) {
    require_quadrature_grid(P);
    require_positive_m(params.m);
    double Pd = static_cast<double>(P.value());
    return -0.5 * chi_real(P, params.m / Pd) + correction_term(params.m).value;
}

}  // namespace rbf
