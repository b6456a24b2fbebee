#pragma once
//
// Dataset generators for the library's standard exports: the classified 1D
// resonance landscape, bias-vs-P validation sweeps, the filter view of a
// spectrum, and the 2D landscape grid.  CSV is the canonical format (exact
// headers below); JSON mirrors it field for field.  Generators return rows
// in ascending key order regardless of how they were computed, and sweep
// rows are bit-identical whether computed sequentially or row-parallel.
//
//   landscape:   y,chi,classification
//   sweep:       P,direct_error,rbf_prediction,classical_bound
//   filterview:  k,input_mag,filter_mag,filtered_mag
//   landscape2d: y1,y2,re_product,product_of_re
//
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbf/grid.hpp"
#include "rbf/spectrum.hpp"

namespace rbf {

enum class PointClass { Peak, Zero, Interior };
std::string to_string(PointClass c);

struct LandscapeSample {
    double y;
    double chi;
    PointClass classification;
};

// Uniform samples over [y_min, y_max] plus every exact rational n/P in range
// injected explicitly, so Zero/Peak rows sit on the true lattice instead of
// the nearest uniform point.  Classification needs both proximity (within
// half the uniform spacing of ℤ resp. n/P) and the matching χ value
// (|χ−1| < 1e−9 resp. |χ| < 1e−9).
std::vector<LandscapeSample> sample_landscape(GridSize P, double y_min, double y_max,
                                              std::int64_t n_points);

struct SweepRow {
    std::int64_t P;
    double direct_error;
    double rbf_prediction;
    double classical_bound;
};

// One row per P ∈ [P_min, P_max]: directly measured quadrature error, the
// closed-form/spectral prediction, and the relevant worst-case bound
// (curvature bound π²m²/(3P²) for the trigonometric entries, fitted
// exponential tail bound for expcos).  threads ≤ 1 runs sequentially.
std::vector<SweepRow> sweep_bias_sin2(double k, std::int64_t P_min, std::int64_t P_max,
                                      int threads = 1);
std::vector<SweepRow> sweep_bias_cos2pin(std::int64_t n, std::int64_t P_min, std::int64_t P_max,
                                         int threads = 1);
std::vector<SweepRow> sweep_bias_expcos(std::int64_t P_min, std::int64_t P_max, GridSize dft_n,
                                        int threads = 1);

struct FilterViewRow {
    std::int64_t k;
    double input_mag;     // |c_k|, 0 when the mode is absent
    double filter_mag;    // exact grid response at integer k: 1 if P | k else 0
    double filtered_mag;  // input_mag · filter_mag
};

// Rows for every nonzero k ∈ [−k_range, k_range].  k = 0 is the DC term and
// never part of the bias, so it is not exported.  The diagnostic χ̃ path
// agrees with filter_mag to ~1e−15 (asserted in tests).
std::vector<FilterViewRow> filter_view(const FourierSpectrum& spec, GridSize P,
                                       std::int64_t k_range);

struct Landscape2DRow {
    double y1;
    double y2;
    double re_product;     // Re[χ̃_P(y1)·χ̃_P(y2)]
    double product_of_re;  // χ_P(y1)·χ_P(y2)
};

// n×n uniform grid over [0, range]².  Both 2D landscape definitions are
// exported side by side; they agree on the axes and at lattice points but
// differ in general (the cross term Im·Im).
std::vector<Landscape2DRow> sample_landscape_2d(GridSize P, double range, std::int64_t n);

// CSV (canonical) and JSON mirrors; schemas above, shortest round-trip
// doubles, '\n' line endings.
void write_csv(const std::vector<LandscapeSample>& rows, std::ostream& out);
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_csv(const std::vector<FilterViewRow>& rows, std::ostream& out);
void write_csv(const std::vector<Landscape2DRow>& rows, std::ostream& out);
void write_json(const std::vector<LandscapeSample>& rows, std::ostream& out);
void write_json(const std::vector<SweepRow>& rows, std::ostream& out);
void write_json(const std::vector<FilterViewRow>& rows, std::ostream& out);
void write_json(const std::vector<Landscape2DRow>& rows, std::ostream& out);

}  // namespace rbf
