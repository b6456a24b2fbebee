#include "rbf/spectrum_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rbf/format.hpp"

namespace rbf {
namespace {

using nlohmann::ordered_json;

ordered_json parse_object(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("spectrum file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("modes") || !j["modes"].is_array())
        throw std::runtime_error("spectrum file: expected an object with a \"modes\" array");
    return j;
}

}  // namespace

void write_spectrum_json(const FourierSpectrum& spec, std::ostream& out) {
    ordered_json j;
    j["modes"] = ordered_json::array();
    for (const auto& [k, c] : spec.modes())
        j["modes"].push_back(
            {{"k", k}, {"re", normalize_zero(c.real())}, {"im", normalize_zero(c.imag())}});
    j["symmetric_real"] = spec.declared_symmetric_real();
    if (spec.source_n())
        j["source_N"] = *spec.source_n();
    else
        j["source_N"] = nullptr;
    out << j.dump(2) << '\n';
}

FourierSpectrum read_spectrum_json(std::istream& in) {
    ordered_json j = parse_object(in);
    FourierSpectrum spec;
    try {
        for (const auto& item : j["modes"])
            spec.set_mode(item.at("k").get<std::int64_t>(),
                          {item.at("re").get<double>(), item.at("im").get<double>()});
        spec.declare_symmetric_real(j.value("symmetric_real", false));
        if (j.contains("source_N") && !j["source_N"].is_null())
            spec.set_source_n(j["source_N"].get<std::int64_t>());
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("spectrum file: bad mode entry: ") + e.what());
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("spectrum file: ") + e.what());
    }
    return spec;
}

void write_spectrum2d_json(const Spectrum2D& spec, std::ostream& out) {
    ordered_json j;
    j["modes"] = ordered_json::array();
    for (const auto& [k, c] : spec.modes())
        j["modes"].push_back({{"k1", k.first},
                              {"k2", k.second},
                              {"re", normalize_zero(c.real())},
                              {"im", normalize_zero(c.imag())}});
    out << j.dump(2) << '\n';
}

Spectrum2D read_spectrum2d_json(std::istream& in) {
    ordered_json j = parse_object(in);
    Spectrum2D spec;
    try {
        for (const auto& item : j["modes"])
            spec.set_mode(item.at("k1").get<std::int64_t>(), item.at("k2").get<std::int64_t>(),
                          {item.at("re").get<double>(), item.at("im").get<double>()});
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("spectrum file: bad 2D mode entry: ") + e.what());
    }
    return spec;
}

SpectrumFile read_spectrum_file(std::istream& in) {
    ordered_json j = parse_object(in);
    bool two_d = !j["modes"].empty() && j["modes"].front().is_object() &&
                 j["modes"].front().contains("k1");
    std::stringstream round_trip(j.dump());
    SpectrumFile out;
    if (two_d)
        out.two_d = read_spectrum2d_json(round_trip);
    else
        out.one_d = read_spectrum_json(round_trip);
    return out;
}

}  // namespace rbf
