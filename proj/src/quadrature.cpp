#include "rbf/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rbf/numeric.hpp"
#include "rbf/prototype.hpp"

namespace rbf {
namespace {

void require_quadrature_grid(GridSize P) {
    if (P.value() < 2) throw std::domain_error("quadrature: need P >= 2");
}

}  // namespace

double trapezoid_1d(const PeriodicFunction& f, GridSize P) {
    require_quadrature_grid(P);
    std::int64_t n = P.value();
    double Pd = static_cast<double>(n);
    detail::NeumaierSum acc;
    for (std::int64_t j = 0; j < n; ++j) acc.add(f.evaluate(static_cast<double>(j) / Pd));
    return acc.value() / Pd;
}

double trapezoid_2d(const PeriodicFunction2D& f, GridSize P) {
    require_quadrature_grid(P);
    std::int64_t n = P.value();
    double Pd = static_cast<double>(n);
    detail::NeumaierSum acc;
    for (std::int64_t j1 = 0; j1 < n; ++j1) {
        double x1 = static_cast<double>(j1) / Pd;
        for (std::int64_t j2 = 0; j2 < n; ++j2)
            acc.add(f.evaluate(x1, static_cast<double>(j2) / Pd));
    }
    return acc.value() / (Pd * Pd);
}

double direct_bias(const PeriodicFunction& f, GridSize P) {
    if (!f.exact_integral)
        throw std::invalid_argument("direct_bias: '" + f.label + "' has no exact integral");
    return trapezoid_1d(f, P) - *f.exact_integral;
}

double direct_bias_2d(const PeriodicFunction2D& f, GridSize P) {
    if (!f.exact_integral)
        throw std::invalid_argument("direct_bias_2d: '" + f.label + "' has no exact integral");
    return trapezoid_2d(f, P) - *f.exact_integral;
}

namespace registry {

PeriodicFunction sin2(double k) {
    auto params = PrototypeParams::from_k(k);  // validates k > 0
    double two_pi_k = 2.0 * detail::kPi * k;
    return {
        [two_pi_k](double x) {
            double s = std::sin(two_pi_k * x);
            return s * s;
        },
        exact_integral_sin2(params),
        "sin2(" + std::to_string(k) + ")",
    };
}

PeriodicFunction cos2pin(std::int64_t n) {
    if (n < 1) throw std::domain_error("cos2pin: need n >= 1");
    double two_pi_n = 2.0 * detail::kPi * static_cast<double>(n);
    return {
        [two_pi_n](double x) { return std::cos(two_pi_n * x); },
        0.0,
        "cos2pin(" + std::to_string(n) + ")",
    };
}

PeriodicFunction expcos() {
    return {
        [](double x) { return std::exp(std::cos(2.0 * detail::kPi * x)); },
        kExpcosIntegral,
        "expcos",
    };
}

PeriodicFunction2D prod_cos8pi() {
    return {
        [](double x1, double x2) {
            return std::cos(8.0 * detail::kPi * x1) * std::cos(8.0 * detail::kPi * x2);
        },
        0.0,
        "prod_cos8pi",
    };
}

}  // namespace registry
}  // namespace rbf
