#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rbf {

// Number of grid points per period.  P = 1 is legal (the one-point character
// average is identically 1); quadrature entry points that need a genuine
// grid additionally require P ≥ 2 and check it themselves.
class GridSize {
  public:
    explicit GridSize(std::int64_t n) : n_(n) {
        if (n < 1)
            throw std::domain_error("GridSize: need P >= 1, got " + std::to_string(n));
    }
    std::int64_t value() const { return n_; }

  private:
    std::int64_t n_;
};

}  // namespace rbf
