#pragma once
//
// JSON wire format for spectra.
//
//   1D: {"modes": [{"k": int, "re": float, "im": float}, ...],
//        "symmetric_real": bool, "source_N": int|null}
//   2D: {"modes": [{"k1": int, "k2": int, "re": float, "im": float}, ...]}
//
// Readers throw std::runtime_error on malformed files (the CLI maps that to
// its I/O exit code).  Writers emit modes in ascending key order with
// shortest round-trip doubles, so output is byte-stable.
//
#include <iosfwd>
#include <optional>

#include "rbf/spectrum.hpp"
#include "rbf/tensor2d.hpp"

namespace rbf {

void write_spectrum_json(const FourierSpectrum& spec, std::ostream& out);
FourierSpectrum read_spectrum_json(std::istream& in);

void write_spectrum2d_json(const Spectrum2D& spec, std::ostream& out);
Spectrum2D read_spectrum2d_json(std::istream& in);

// Auto-detecting reader: exactly one member is set, keyed on whether mode
// entries carry "k" or "k1"/"k2".  An empty mode list reads as 1D.
struct SpectrumFile {
    std::optional<FourierSpectrum> one_d;
    std::optional<Spectrum2D> two_d;
};
SpectrumFile read_spectrum_file(std::istream& in);

}  // namespace rbf
