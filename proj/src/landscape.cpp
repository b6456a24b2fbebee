#include "rbf/landscape.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rbf/format.hpp"
#include "rbf/numeric.hpp"
#include "rbf/prototype.hpp"
#include "rbf/quadrature.hpp"
#include "rbf/resonance.hpp"

namespace rbf {
namespace {

using nlohmann::ordered_json;

// modes used for the expcos tail fit; far below the DFT's N/2 so the
// self-aliasing guard l_max·P < N/2 holds for every desk-scale sweep
constexpr std::int64_t kExpcosFitModes = 64;

void require_quadrature_grid(GridSize P) {
    if (P.value() < 2) throw std::domain_error("landscape: need P >= 2");
}

void require_sweep_range(std::int64_t P_min, std::int64_t P_max) {
    if (P_min < 2 || P_max < P_min)
        throw std::domain_error("sweep: need 2 <= P_min <= P_max");
}

// Row-parallel runner.  Rows are independent and land in a pre-sized vector,
// so the result does not depend on scheduling.
template <typename Fn>
void run_rows(std::int64_t count, int threads, Fn&& fn) {
    std::int64_t nt = std::min<std::int64_t>(threads, count);
    if (nt <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nt));
    for (std::int64_t t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::int64_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

double curvature_bound(double m, std::int64_t P) {
    double Pd = static_cast<double>(P);
    return detail::kPi * detail::kPi * m * m / (3.0 * Pd * Pd);
}

}  // namespace

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::Peak: return "Peak";
        case PointClass::Zero: return "Zero";
        default: return "Interior";
    }
}

std::vector<LandscapeSample> sample_landscape(GridSize P, double y_min, double y_max,
                                              std::int64_t n_points) {
    if (n_points < 2) throw std::domain_error("sample_landscape: need n_points >= 2");
    if (!(y_min < y_max)) throw std::domain_error("sample_landscape: need y_min < y_max");

    std::int64_t Pv = P.value();
    double Pd = static_cast<double>(Pv);
    double span = y_max - y_min;
    double nm1 = static_cast<double>(n_points - 1);

    std::vector<double> ys;
    ys.reserve(static_cast<std::size_t>(n_points) + 8);
    for (std::int64_t i = 0; i < n_points; ++i)
        ys.push_back(y_min + (static_cast<double>(i) * span) / nm1);
    // inject the exact rationals n/P (integers included) so zero/peak rows
    // sit on the true lattice; over-scan one index and filter
    std::int64_t n_lo = static_cast<std::int64_t>(std::floor(y_min * Pd)) - 1;
    std::int64_t n_hi = static_cast<std::int64_t>(std::ceil(y_max * Pd)) + 1;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        double y = static_cast<double>(n) / Pd;
        if (y >= y_min && y <= y_max) ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    double window = span / nm1 / 2.0;
    std::vector<LandscapeSample> rows;
    rows.reserve(ys.size());
    for (double y : ys) {
        double chi = chi_real(P, y);
        PointClass cls = PointClass::Interior;
        if (detail::integer_distance(y) < window && std::abs(chi - 1.0) < 1e-9) {
            cls = PointClass::Peak;
        } else {
            double t = y * Pd;
            std::int64_t n_near = std::llround(t);
            double rational_dist = std::abs(t - static_cast<double>(n_near)) / Pd;
            if (n_near % Pv != 0 && rational_dist < window && std::abs(chi) < 1e-9)
                cls = PointClass::Zero;
        }
        rows.push_back({y, chi, cls});
    }
    return rows;
}

std::vector<SweepRow> sweep_bias_sin2(double k, std::int64_t P_min, std::int64_t P_max,
                                      int threads) {
    require_sweep_range(P_min, P_max);
    auto params = PrototypeParams::from_k(k);
    auto f = registry::sin2(k);
    std::vector<SweepRow> rows(static_cast<std::size_t>(P_max - P_min + 1));
    run_rows(static_cast<std::int64_t>(rows.size()), threads, [&](std::int64_t i) {
        std::int64_t P = P_min + i;
        GridSize g{P};
        rows[static_cast<std::size_t>(i)] = {P, direct_bias(f, g), bias_sin2(g, params),
                                             curvature_bound(params.m, P)};
    });
    return rows;
}

std::vector<SweepRow> sweep_bias_cos2pin(std::int64_t n, std::int64_t P_min, std::int64_t P_max,
                                         int threads) {
    require_sweep_range(P_min, P_max);
    auto f = registry::cos2pin(n);
    auto spec = cosine_mode_spectrum(n);
    std::vector<SweepRow> rows(static_cast<std::size_t>(P_max - P_min + 1));
    run_rows(static_cast<std::int64_t>(rows.size()), threads, [&](std::int64_t i) {
        std::int64_t P = P_min + i;
        GridSize g{P};
        // l_max = n always covers the only mode pair (±n)
        rows[static_cast<std::size_t>(i)] = {P, direct_bias(f, g),
                                             bias_real_reduction(spec, g, n),
                                             curvature_bound(static_cast<double>(n), P)};
    });
    return rows;
}

std::vector<SweepRow> sweep_bias_expcos(std::int64_t P_min, std::int64_t P_max, GridSize dft_n,
                                        int threads) {
    require_sweep_range(P_min, P_max);
    auto f = registry::expcos();
    std::int64_t kmax = std::min(kExpcosFitModes, (dft_n.value() - 1) / 2);
    // drop_tol 0: keep the DFT noise floor in the fit so the tail bound
    // stays above the double-precision bias measurements at large P
    auto spec = estimate_spectrum_dft(f, dft_n, 0.0, kmax);
    auto tail = fit_exponential_tail(spec);
    std::vector<SweepRow> rows(static_cast<std::size_t>(P_max - P_min + 1));
    run_rows(static_cast<std::int64_t>(rows.size()), threads, [&](std::int64_t i) {
        std::int64_t P = P_min + i;
        GridSize g{P};
        std::int64_t l_max = std::max<std::int64_t>(1, kmax / P);
        rows[static_cast<std::size_t>(i)] = {P, direct_bias(f, g),
                                             bias_real_reduction(spec, g, l_max),
                                             bound_exponential(tail, g).value};
    });
    return rows;
}

std::vector<FilterViewRow> filter_view(const FourierSpectrum& spec, GridSize P,
                                       std::int64_t k_range) {
    require_quadrature_grid(P);
    if (k_range < 1) throw std::domain_error("filter_view: need k_range >= 1");
    std::vector<FilterViewRow> rows;
    rows.reserve(static_cast<std::size_t>(2 * k_range));
    for (std::int64_t k = -k_range; k <= k_range; ++k) {
        if (k == 0) continue;  // DC never contributes to the bias
        double input = std::abs(spec.mode(k));
        double filter = character_orthogonality_check(P, k) ? 1.0 : 0.0;
        rows.push_back({k, input, filter, input * filter});
    }
    return rows;
}

std::vector<Landscape2DRow> sample_landscape_2d(GridSize P, double range, std::int64_t n) {
    if (n < 2) throw std::domain_error("sample_landscape_2d: need n >= 2");
    if (!(range > 0.0)) throw std::domain_error("sample_landscape_2d: need range > 0");
    double nm1 = static_cast<double>(n - 1);
    std::vector<double> ys(static_cast<std::size_t>(n));
    std::vector<Complex> chis(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        ys[static_cast<std::size_t>(i)] = (static_cast<double>(i) * range) / nm1;
        chis[static_cast<std::size_t>(i)] = chi_tilde_closed(P, ys[static_cast<std::size_t>(i)]).value;
    }
    std::vector<Landscape2DRow> rows;
    rows.reserve(static_cast<std::size_t>(n * n));
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            const Complex& a = chis[static_cast<std::size_t>(i)];
            const Complex& b = chis[static_cast<std::size_t>(j)];
            rows.push_back({ys[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)],
                            (a * b).real(), a.real() * b.real()});
        }
    }
    return rows;
}

void write_csv(const std::vector<LandscapeSample>& rows, std::ostream& out) {
    out << "y,chi,classification\n";
    for (const auto& r : rows)
        out << format_double(r.y) << ',' << format_double(r.chi) << ','
            << to_string(r.classification) << '\n';
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "P,direct_error,rbf_prediction,classical_bound\n";
    for (const auto& r : rows)
        out << format_int(r.P) << ',' << format_double(r.direct_error) << ','
            << format_double(r.rbf_prediction) << ',' << format_double(r.classical_bound) << '\n';
}

void write_csv(const std::vector<FilterViewRow>& rows, std::ostream& out) {
    out << "k,input_mag,filter_mag,filtered_mag\n";
    for (const auto& r : rows)
        out << format_int(r.k) << ',' << format_double(r.input_mag) << ','
            << format_double(r.filter_mag) << ',' << format_double(r.filtered_mag) << '\n';
}

void write_csv(const std::vector<Landscape2DRow>& rows, std::ostream& out) {
    out << "y1,y2,re_product,product_of_re\n";
    for (const auto& r : rows)
        out << format_double(r.y1) << ',' << format_double(r.y2) << ','
            << format_double(r.re_product) << ',' << format_double(r.product_of_re) << '\n';
}

void write_json(const std::vector<LandscapeSample>& rows, std::ostream& out) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows)
        j.push_back({{"y", normalize_zero(r.y)},
                     {"chi", normalize_zero(r.chi)},
                     {"classification", to_string(r.classification)}});
    out << j.dump(2) << '\n';
}

void write_json(const std::vector<SweepRow>& rows, std::ostream& out) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows)
        j.push_back({{"P", r.P},
                     {"direct_error", normalize_zero(r.direct_error)},
                     {"rbf_prediction", normalize_zero(r.rbf_prediction)},
                     {"classical_bound", normalize_zero(r.classical_bound)}});
    out << j.dump(2) << '\n';
}

void write_json(const std::vector<FilterViewRow>& rows, std::ostream& out) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows)
        j.push_back({{"k", r.k},
                     {"input_mag", normalize_zero(r.input_mag)},
                     {"filter_mag", normalize_zero(r.filter_mag)},
                     {"filtered_mag", normalize_zero(r.filtered_mag)}});
    out << j.dump(2) << '\n';
}

void write_json(const std::vector<Landscape2DRow>& rows, std::ostream& out) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows)
        j.push_back({{"y1", normalize_zero(r.y1)},
                     {"y2", normalize_zero(r.y2)},
                     {"re_product", normalize_zero(r.re_product)},
                     {"product_of_re", normalize_zero(r.product_of_re)}});
    out << j.dump(2) << '\n';
}

}  // namespace rbf
