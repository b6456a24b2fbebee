#pragma once
//
// The 2D story is the 1D story, squared.  On the P×P tensor grid the
// resonance filter factorizes,
//
//     χ̃_P^{(2)}(y1, y2) = χ̃_P(y1) · χ̃_P(y2),
//
// so the 2D bias formula filters each mode pair (k₁, k₂) by the product of
// 1D filters, and the classical 2D aliasing sum picks out the lattice
// (l₁P, l₂P).  Only square grids are supported; rectangular P₁×P₂ would be a
// one-line change but is out of scope.
//
#include <complex>
#include <cstdint>
#include <map>
#include <utility>

#include "rbf/grid.hpp"
#include "rbf/resonance.hpp"
#include "rbf/spectrum.hpp"

namespace rbf {

// Finite sparse 2D spectrum {(k₁,k₂) → c_k}; the symmetric-real promise
// mirrors FourierSpectrum with c_{−k} = conj(c_k), k = (k₁,k₂).
class Spectrum2D {
  public:
    using Key = std::pair<std::int64_t, std::int64_t>;
    using Modes = std::map<Key, Complex>;

    void set_mode(std::int64_t k1, std::int64_t k2, Complex c) { modes_[{k1, k2}] = c; }
    Complex mode(std::int64_t k1, std::int64_t k2) const {
        auto it = modes_.find({k1, k2});
        return it == modes_.end() ? Complex{0.0, 0.0} : it->second;
    }
    const Modes& modes() const { return modes_; }

    bool declared_symmetric_real() const { return symmetric_real_; }
    void declare_symmetric_real(bool flag) { symmetric_real_ = flag; }

    std::int64_t max_abs_mode() const;       // max over both axes; 0 if empty
    double max_hermitian_violation() const;  // max |c_{−k} − conj(c_k)|
    void validate() const;

  private:
    Modes modes_;
    bool symmetric_real_ = false;
};

// χ̃_P(y1)·χ̃_P(y2)
Complex chi2d(GridSize P, double y1, double y2);

// Σ_{k≠(0,0)} c_k·χ̃_P(k₁/P)·χ̃_P(k₂/P).  P ≥ 2.
Complex bias_rbf_2d(const Spectrum2D& spec, GridSize P, FilterPath path = FilterPath::Indicator);

// Σ_{l≠(0,0), |l₁|,|l₂|≤l_max} c_{(l₁P, l₂P)}, with the same coverage
// bookkeeping as the 1D alias sum.
struct Alias2DResult {
    Complex value;
    bool covered;
};
Alias2DResult bias_classical_2d(const Spectrum2D& spec, GridSize P, std::int64_t l_max);

// Band-limited spectrum of cos(8πx₁)cos(8πx₂): c = 1/4 at (±4, ±4).
Spectrum2D prod_cos8pi_spectrum();

}  // namespace rbf
