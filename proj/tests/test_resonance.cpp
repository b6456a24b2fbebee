#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "rbf/resonance.hpp"

using rbf::arrows;
using rbf::character_orthogonality_check;
using rbf::chi_curvature_at_peak;
using rbf::chi_real;
using rbf::chi_taylor_lobe;
using rbf::chi_tilde_closed;
using rbf::chi_tilde_naive;
using rbf::Complex;
using rbf::EvalBranch;
using rbf::GridSize;

namespace {

// Frozen reference values, computed once with a 40-digit arbitrary-precision
// oracle and rounded to nearest double.
const Complex kChi5At03{0.2, 0.14530850560107218};
constexpr double kChiReal20At023 = 0.028557637411830532;
constexpr double kLobe20Eps1e3 = 0.9975622077129309;
constexpr double kChiReal20At1001 = 0.9975640340211007;

double dist_to_int(double y) {
    double f = y - std::floor(y);
    return f <= 0.5 ? f : 1.0 - f;
}

}  // namespace

TEST_CASE("naive sum: pinned values") {
    auto r1 = chi_tilde_naive(GridSize{5}, 1.0);
    CHECK(r1.value == Complex(1.0, 0.0));
    CHECK(r1.branch == EvalBranch::IntegerLimit);

    auto r2 = chi_tilde_naive(GridSize{5}, 0.2);  // fifth roots of unity cancel
    CHECK(std::abs(r2.value) < 1e-14);
    CHECK(r2.branch == EvalBranch::NaiveSum);

    auto r3 = chi_tilde_naive(GridSize{5}, 0.3);
    CHECK(std::abs(r3.value - kChi5At03) < 1e-14);
    CHECK(r3.branch == EvalBranch::NaiveSum);
}

TEST_CASE("closed form: pinned values and branches") {
    auto r = chi_tilde_closed(GridSize{20}, 0.23);
    CHECK(r.branch == EvalBranch::ClosedForm);
    CHECK(std::abs(r.value.real() - kChiReal20At023) < 1e-15);

    auto ri = chi_tilde_closed(GridSize{7}, 3.0);
    CHECK(ri.value == Complex(1.0, 0.0));
    CHECK(ri.branch == EvalBranch::IntegerLimit);

    // large P, just off the half-integer: closed and naive must agree
    GridSize big{10000};
    double y = 0.5 + 1.0 / 30000.0;
    CHECK(std::abs(chi_tilde_closed(big, y).value - chi_tilde_naive(big, y).value) < 1e-10);
}

TEST_CASE("guard band branch selection") {
    GridSize P{20};
    CHECK(chi_tilde_closed(P, 1.0 + 1e-13).branch == EvalBranch::IntegerLimit);
    CHECK(chi_tilde_closed(P, 1.0 + 1e-13).value == Complex(1.0, 0.0));
    for (double d : {1e-11, 1e-9, 1e-7}) {
        auto r = chi_tilde_closed(P, 1.0 + d);
        CHECK(r.branch == EvalBranch::NaiveSum);
        CHECK(std::abs(r.value - chi_tilde_naive(P, 1.0 + d).value) == 0.0);
    }
    CHECK(chi_tilde_closed(P, 1.0 + 1e-5).branch == EvalBranch::ClosedForm);
}

TEST_CASE("chi_real: zeros, peaks, parity") {
    GridSize P{20};
    CHECK(std::abs(chi_real(P, 1.0 / 20.0)) < 1e-14);
    CHECK(chi_real(P, 2.0) == 1.0);
    CHECK(std::abs(chi_real(P, -0.23) - chi_real(P, 0.23)) < 1e-15);
}

TEST_CASE("P = 1 degenerates to the constant 1") {
    GridSize one{1};
    for (double y : {0.0, 0.37, -2.6, 123.456}) {
        auto rn = chi_tilde_naive(one, y);
        auto rc = chi_tilde_closed(one, y);
        CHECK(rn.value == Complex(1.0, 0.0));
        CHECK(rc.value == Complex(1.0, 0.0));
        CHECK(rn.branch == EvalBranch::IntegerLimit);
        CHECK(rc.branch == EvalBranch::IntegerLimit);
    }
}

TEST_CASE("Taylor lobe model") {
    CHECK(chi_taylor_lobe(GridSize{20}, 0, 0.0) == 1.0);
    CHECK(std::abs(chi_taylor_lobe(GridSize{20}, 1, 1e-3) - kLobe20Eps1e3) < 1e-15);
    CHECK(chi_taylor_lobe(GridSize{5}, 0, -1e-3) == chi_taylor_lobe(GridSize{5}, 0, 1e-3));

    // The model drops a quartic remainder: at P=20, ε=1e−3 the true residual
    // is ≈ 1.83e−6, and halving ε divides it by ≈ 16 (not the 8 a cubic
    // remainder would give).
    CHECK(std::abs(chi_real(GridSize{20}, 1.001) - kChiReal20At1001) < 1e-15);
    double res = std::abs(chi_real(GridSize{20}, 1.001) - chi_taylor_lobe(GridSize{20}, 1, 1e-3));
    CHECK(res > 1.5e-6);
    CHECK(res < 2.2e-6);

    for (std::int64_t P : {5, 20}) {
        for (double eps : {1e-2, 1e-3}) {
            double r1 = std::abs(chi_real(GridSize{P}, 1.0 + eps) -
                                 chi_taylor_lobe(GridSize{P}, 1, eps));
            double r2 = std::abs(chi_real(GridSize{P}, 1.0 + eps / 2.0) -
                                 chi_taylor_lobe(GridSize{P}, 1, eps / 2.0));
            double ratio = r1 / r2;
            CHECK(ratio > 12.0);
            CHECK(ratio < 18.0);
        }
    }
}

TEST_CASE("curvature at the peak matches a finite difference") {
    for (std::int64_t P : {5, 20, 50}) {
        GridSize g{P};
        double curv = chi_curvature_at_peak(g);
        double h = 1e-5;
        double fd = (chi_real(g, 1.0 + h) - 2.0 * chi_real(g, 1.0) + chi_real(g, 1.0 - h)) / (h * h);
        CHECK(std::abs(fd - curv) / std::abs(curv) < 1e-5);
    }
    // closed-form constant, spot value: −2π²·19·39/3 at P = 20
    double expect = -2.0 * std::numbers::pi * std::numbers::pi * 19.0 * 39.0 / 3.0;
    CHECK(chi_curvature_at_peak(GridSize{20}) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("arrows decomposition") {
    auto a1 = arrows(GridSize{5}, 1.0);
    REQUIRE(a1.arrows.size() == 5);
    for (const auto& v : a1.arrows) CHECK(v == Complex(1.0, 0.0));
    CHECK(a1.centroid == Complex(1.0, 0.0));

    auto a2 = arrows(GridSize{5}, 0.2);  // the five fifth-roots of unity
    for (std::size_t j = 0; j < 5; ++j) {
        Complex root = std::polar(1.0, 2.0 * std::numbers::pi * 0.2 * static_cast<double>(j));
        CHECK(std::abs(a2.arrows[j] - root) < 1e-15);
    }
    CHECK(std::abs(a2.centroid) < 1e-14);

    auto a3 = arrows(GridSize{1}, 0.37);
    REQUIRE(a3.arrows.size() == 1);
    CHECK(a3.arrows[0] == Complex(1.0, 0.0));
    CHECK(a3.centroid == Complex(1.0, 0.0));

    // type invariants: unit arrows, centroid == mean == χ̃
    std::mt19937 rng(811);
    std::uniform_real_distribution<double> uy(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        double y = uy(rng);
        GridSize P{1 + static_cast<std::int64_t>(rng() % 32)};
        auto d = arrows(P, y);
        Complex mean{0.0, 0.0};
        for (const auto& v : d.arrows) {
            CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
            mean += v;
        }
        mean /= static_cast<double>(d.arrows.size());
        CHECK(std::abs(d.centroid - mean) < 1e-12);
        CHECK(std::abs(d.centroid - chi_tilde_naive(P, y).value) < 1e-12);
    }
}

TEST_CASE("character orthogonality indicator") {
    CHECK(character_orthogonality_check(GridSize{20}, 40) == 1);
    CHECK(character_orthogonality_check(GridSize{20}, 7) == 0);
    CHECK(character_orthogonality_check(GridSize{4}, -4) == 1);
    CHECK(character_orthogonality_check(GridSize{5}, 0) == 1);
    CHECK(character_orthogonality_check(GridSize{5}, -3) == 0);
}

TEST_CASE("periodicity, conjugate symmetry, boundedness") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> uy(-3.0, 3.0);
    for (std::int64_t P = 1; P <= 64; ++P) {
        GridSize g{P};
        for (int i = 0; i < 100; ++i) {
            double y = uy(rng);
            Complex c = chi_tilde_closed(g, y).value;
            CHECK(std::abs(chi_tilde_closed(g, y + 1.0).value - c) < 1e-12);
            CHECK(std::abs(std::conj(c) - chi_tilde_closed(g, -y).value) < 1e-12);
            CHECK(std::abs(c) <= 1.0 + 1e-12);
            // χ̃_1 ≡ 1, so near-peak ⟹ near-integer only holds from P = 2 up
            if (P >= 2 && std::abs(c) > 1.0 - 1e-9) CHECK(dist_to_int(y) < 1e-4);
        }
    }
}

TEST_CASE("rational zeros") {
    for (std::int64_t P = 2; P <= 64; ++P) {
        GridSize g{P};
        for (std::int64_t n = 1; n < P; ++n) {
            double y = static_cast<double>(n) / static_cast<double>(P);
            CHECK(std::abs(chi_tilde_closed(g, y).value) < 1e-12);
        }
    }
    // same through the direct sum at one small P
    for (std::int64_t n = 1; n < 5; ++n)
        CHECK(std::abs(chi_tilde_naive(GridSize{5}, n / 5.0).value) < 1e-12);
}

TEST_CASE("closed form tracks the direct sum") {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> uy(-3.0, 3.0);
    for (std::int64_t P : {2, 3, 5, 20, 997}) {
        GridSize g{P};
        double worst = 0.0;
        int kept = 0;
        while (kept < 1000) {
            double y = uy(rng);
            if (dist_to_int(y) < 1e-6) continue;
            ++kept;
            worst = std::max(worst,
                             std::abs(chi_tilde_closed(g, y).value - chi_tilde_naive(g, y).value));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("equidistribution decay at an irrational frequency") {
    double y = std::sqrt(2.0) - 1.0;
    double at_1e2 = std::abs(chi_tilde_naive(GridSize{100}, y).value);
    double at_1e5 = std::abs(chi_tilde_naive(GridSize{100000}, y).value);
    CHECK(at_1e5 * 10.0 <= at_1e2);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(chi_tilde_naive(GridSize{5}, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(chi_tilde_closed(GridSize{5}, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(GridSize{0}, std::domain_error);
    CHECK_THROWS_AS(GridSize{-3}, std::domain_error);
}
