// rbf tool: every library operation as a subcommand with deterministic
// CSV/JSON output (shortest round-trip decimals, '.' separator, no
// timestamps), so runs are byte-identical and diffable.  Exit codes:
// 0 ok, 1 validation failure, 2 usage, 3 I/O.
#include "rbf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbf/format.hpp"
#include "rbf/landscape.hpp"
#include "rbf/prototype.hpp"
#include "rbf/quadrature.hpp"
#include "rbf/resonance.hpp"
#include "rbf/spectrum.hpp"
#include "rbf/spectrum_io.hpp"
#include "rbf/tensor2d.hpp"

namespace rbf {
namespace {

using nlohmann::ordered_json;

constexpr double kValidateTol = 1e-9;  // cross-check table acceptance threshold

// --config FILE holds a flat JSON object whose keys mirror the long option
// names, e.g. {"P": 20, "y": 0.25, "format": "json"}.  It is applied before
// CLI11 parses: the object is flattened to flags injected right after the
// subcommand token, so explicit command-line flags (parsed later, TakeLast)
// override config values.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file path");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (path.empty()) return args;
    if (args.empty() || args[0].rfind("-", 0) == 0)
        throw std::invalid_argument("--config requires a subcommand");

    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string{"config is not valid JSON: "} + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("config must be a JSON object");

    std::vector<std::string> injected;
    for (const auto& [key, value] : doc.items()) {
        auto push = [&](const nlohmann::json& v) {
            if (v.is_structured()) throw std::runtime_error("config values must be scalars");
            injected.push_back("--" + key);
            injected.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        };
        if (value.is_null()) continue;
        if (value.is_array())
            for (const auto& v : value) push(v);
        else
            push(value);
    }
    args.insert(args.begin() + 1, injected.begin(), injected.end());
    return args;
}

int threads_from_env() {
    const char* s = std::getenv("RBF_THREADS");
    if (s == nullptr || *s == '\0') return 1;  // default: sequential
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0) return 1;  // 0 and garbage: sequential
    return static_cast<int>(std::min(v, 256L));
}

// routes a writer to stdout or to --output PATH
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    fn(file);
    file.flush();
    if (!file) throw std::runtime_error("write failed: " + path);
}

SpectrumFile load_spectrum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
    return read_spectrum_file(in);
}

PeriodicFunction lookup_fn_1d(const std::string& name, double k, std::int64_t n) {
    if (name == "sin2") return registry::sin2(k);
    if (name == "cos2pin") return registry::cos2pin(n);
    if (name == "expcos") return registry::expcos();
    throw std::invalid_argument("unknown function label: " + name);
}

// expcos is estimated rather than written down; the desk-scale window
// matches the sweep defaults
FourierSpectrum expcos_spectrum(std::int64_t dft_n) {
    std::int64_t kmax = std::min<std::int64_t>(64, (dft_n - 1) / 2);
    return estimate_spectrum_dft(registry::expcos(), GridSize{dft_n}, 0.0, kmax);
}

void write_complex_value(Complex v, const std::string& format, std::ostream& os) {
    if (format == "json") {
        ordered_json j{{"re", normalize_zero(v.real())}, {"im", normalize_zero(v.imag())}};
        os << j.dump(2) << '\n';
    } else {
        os << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

void write_arrows(const ArrowsDecomposition& d, const std::string& format, std::ostream& os) {
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (std::size_t i = 0; i < d.arrows.size(); ++i)
            j.push_back({{"item", std::to_string(i)},
                         {"re", normalize_zero(d.arrows[i].real())},
                         {"im", normalize_zero(d.arrows[i].imag())}});
        j.push_back({{"item", "centroid"},
                     {"re", normalize_zero(d.centroid.real())},
                     {"im", normalize_zero(d.centroid.imag())}});
        os << j.dump(2) << '\n';
    } else {
        os << "item,re,im\n";
        for (std::size_t i = 0; i < d.arrows.size(); ++i)
            os << i << ',' << format_double(d.arrows[i].real()) << ','
               << format_double(d.arrows[i].imag()) << '\n';
        os << "centroid," << format_double(d.centroid.real()) << ','
           << format_double(d.centroid.imag()) << '\n';
    }
}

void write_bias_report(const BiasReport& r, const std::string& format, std::ostream& os) {
    if (format == "json") {
        ordered_json j;
        j["rbf_re"] = normalize_zero(r.rbf_bias.real());
        j["rbf_im"] = normalize_zero(r.rbf_bias.imag());
        j["classical_re"] = r.classical_bias ? ordered_json(normalize_zero(r.classical_bias->real()))
                                             : ordered_json(nullptr);
        j["classical_im"] = r.classical_bias ? ordered_json(normalize_zero(r.classical_bias->imag()))
                                             : ordered_json(nullptr);
        j["direct"] = r.direct_bias ? ordered_json(normalize_zero(*r.direct_bias))
                                    : ordered_json(nullptr);
        j["max_discrepancy"] = normalize_zero(r.max_pairwise_discrepancy);
        os << j.dump(2) << '\n';
    } else {
        os << "rbf_re,rbf_im,classical_re,classical_im,direct,max_discrepancy\n";
        os << format_double(r.rbf_bias.real()) << ',' << format_double(r.rbf_bias.imag()) << ',';
        if (r.classical_bias)
            os << format_double(r.classical_bias->real()) << ','
               << format_double(r.classical_bias->imag()) << ',';
        else
            os << ",,";
        if (r.direct_bias) os << format_double(*r.direct_bias);
        os << ',' << format_double(r.max_pairwise_discrepancy) << '\n';
    }
}

struct ValidateRow {
    std::string name;
    double direct;
    double rbf;
    std::optional<double> classical;
    double max_diff;
};

std::vector<ValidateRow> run_validate_cases() {
    std::vector<ValidateRow> rows;
    {
        double direct = direct_bias(registry::sin2(2.3), GridSize{20});
        double rbf = bias_sin2(GridSize{20}, PrototypeParams::from_k(2.3));
        rows.push_back({"sin2_k2.3_P20", direct, rbf, std::nullopt, std::abs(direct - rbf)});
    }
    {
        auto spec = cosine_mode_spectrum(4);
        double direct = direct_bias(registry::cos2pin(4), GridSize{4});
        double rbf = bias_rbf_general(spec, GridSize{4}).real();
        double classical = bias_classical_alias(spec, GridSize{4}, 2).value.real();
        double md = std::max({std::abs(direct - rbf), std::abs(direct - classical),
                              std::abs(rbf - classical)});
        rows.push_back({"cos8pi_P4", direct, rbf, classical, md});
    }
    {
        auto spec = prod_cos8pi_spectrum();
        double direct = direct_bias_2d(registry::prod_cos8pi(), GridSize{4});
        double rbf = bias_rbf_2d(spec, GridSize{4}).real();
        double classical = bias_classical_2d(spec, GridSize{4}, 2).value.real();
        double md = std::max({std::abs(direct - rbf), std::abs(direct - classical),
                              std::abs(rbf - classical)});
        rows.push_back({"prod_cos8pi_P4", direct, rbf, classical, md});
    }
    return rows;
}

void write_validate_table(const std::vector<ValidateRow>& rows, const std::string& format,
                          std::ostream& os) {
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows)
            j.push_back({{"case", r.name},
                         {"direct", normalize_zero(r.direct)},
                         {"rbf", normalize_zero(r.rbf)},
                         {"classical", r.classical ? ordered_json(normalize_zero(*r.classical))
                                                   : ordered_json(nullptr)},
                         {"max_diff", normalize_zero(r.max_diff)}});
        os << j.dump(2) << '\n';
    } else {
        os << "case,direct,rbf,classical,max_diff\n";
        for (const auto& r : rows) {
            os << r.name << ',' << format_double(r.direct) << ',' << format_double(r.rbf) << ',';
            if (r.classical) os << format_double(*r.classical);
            os << ',' << format_double(r.max_diff) << '\n';
        }
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"resonance-bias toolkit: trapezoid quadrature bias via the grid filter", "rbf"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    // shared across subcommands; only the selected one parses them
    std::string output_path;
    std::string format = "csv";
    std::string config_path;  // consumed by apply_config; listed here for --help
    int exit_status = 0;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--output", output_path, "write to this file instead of stdout");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--config", config_path, "JSON file whose keys mirror the long options");
    };

    // ---- chi: one filter value
    auto* chi_cmd = app.add_subcommand("chi", "evaluate the resonance function chi_tilde_P(y)");
    std::int64_t chi_p = 0;
    double chi_y = 0.0;
    std::string chi_path = "closed";
    chi_cmd->add_option("--P", chi_p, "grid size")->required();
    chi_cmd->add_option("--y", chi_y, "relative frequency")->required();
    chi_cmd->add_option("--path", chi_path, "evaluation path")
        ->check(CLI::IsMember({"closed", "naive"}))
        ->capture_default_str();
    add_io(chi_cmd);
    chi_cmd->callback([&] {
        auto v = (chi_path == "naive") ? chi_tilde_naive(GridSize{chi_p}, chi_y)
                                       : chi_tilde_closed(GridSize{chi_p}, chi_y);
        with_output(output_path, out, [&](std::ostream& os) {
            write_complex_value(v.value, format, os);
        });
    });

    // ---- arrows: the unit phasors behind one chi value
    auto* arrows_cmd = app.add_subcommand("arrows", "list the P unit phasors and their centroid");
    std::int64_t ar_p = 0;
    double ar_y = 0.0;
    arrows_cmd->add_option("--P", ar_p, "grid size")->required();
    arrows_cmd->add_option("--y", ar_y, "relative frequency")->required();
    add_io(arrows_cmd);
    arrows_cmd->callback([&] {
        auto d = arrows(GridSize{ar_p}, ar_y);
        with_output(output_path, out, [&](std::ostream& os) { write_arrows(d, format, os); });
    });

    // ---- bias: every applicable bias path for one function or spectrum
    auto* bias_cmd = app.add_subcommand("bias", "compare filter, alias, and direct bias paths");
    std::string bias_spectrum, bias_fn;
    double bias_k = 2.3, bias_tol = 1e-9;
    std::int64_t bias_n = 1, bias_p = 0, bias_lmax = 8, bias_dftn = 4096;
    auto* bias_spec_opt =
        bias_cmd->add_option("--spectrum", bias_spectrum, "spectrum JSON file (1D or 2D)");
    auto* bias_fn_opt =
        bias_cmd->add_option("--fn", bias_fn, "registry function: sin2|cos2pin|expcos|prod_cos8pi");
    bias_spec_opt->excludes(bias_fn_opt);
    bias_cmd->add_option("--k", bias_k, "sin2 frequency parameter")->capture_default_str();
    bias_cmd->add_option("--n", bias_n, "cos2pin mode number")->capture_default_str();
    bias_cmd->add_option("--P", bias_p, "grid size")->required();
    bias_cmd->add_option("--lmax", bias_lmax, "alias window half-width")->capture_default_str();
    bias_cmd->add_option("--N", bias_dftn, "DFT size for estimated spectra")->capture_default_str();
    bias_cmd->add_option("--tolerance", bias_tol, "max allowed pairwise discrepancy")
        ->capture_default_str();
    add_io(bias_cmd);
    bias_cmd->callback([&] {
        GridSize P{bias_p};
        BiasReport report;
        if (!bias_spectrum.empty()) {
            auto file = load_spectrum(bias_spectrum);
            if (file.one_d) {
                report = make_bias_report(bias_rbf_general(*file.one_d, P),
                                          bias_classical_alias(*file.one_d, P, bias_lmax).value,
                                          std::nullopt);
            } else {
                report = make_bias_report(bias_rbf_2d(*file.two_d, P),
                                          bias_classical_2d(*file.two_d, P, bias_lmax).value,
                                          std::nullopt);
            }
        } else if (bias_fn == "sin2") {
            auto params = PrototypeParams::from_k(bias_k);
            std::optional<Complex> classical;  // only band-limited at integer m
            if (params.m == std::floor(params.m))
                classical = bias_classical_alias(
                                sin2_integer_spectrum(static_cast<std::int64_t>(params.m)), P,
                                bias_lmax)
                                .value;
            report = make_bias_report({bias_sin2(P, params), 0.0}, classical,
                                      direct_bias(registry::sin2(bias_k), P));
        } else if (bias_fn == "cos2pin") {
            auto spec = cosine_mode_spectrum(bias_n);
            report = make_bias_report(bias_rbf_general(spec, P),
                                      bias_classical_alias(spec, P, bias_lmax).value,
                                      direct_bias(registry::cos2pin(bias_n), P));
        } else if (bias_fn == "expcos") {
            auto spec = expcos_spectrum(bias_dftn);
            report = make_bias_report(bias_rbf_general(spec, P),
                                      bias_classical_alias(spec, P, bias_lmax).value,
                                      direct_bias(registry::expcos(), P));
        } else if (bias_fn == "prod_cos8pi") {
            auto spec = prod_cos8pi_spectrum();
            report = make_bias_report(bias_rbf_2d(spec, P),
                                      bias_classical_2d(spec, P, bias_lmax).value,
                                      direct_bias_2d(registry::prod_cos8pi(), P));
        } else {
            throw std::invalid_argument(bias_fn.empty() ? "bias: need --spectrum or --fn"
                                                        : "unknown function label: " + bias_fn);
        }
        with_output(output_path, out, [&](std::ostream& os) {
            write_bias_report(report, format, os);
        });
        if (report.max_pairwise_discrepancy > bias_tol) exit_status = 1;
    });

    // ---- sweep: bias vs P table
    auto* sweep_cmd = app.add_subcommand("sweep", "direct error vs prediction over a P range");
    std::string sweep_fn;
    double sweep_k = 2.3;
    std::int64_t sweep_n = 1, sweep_pmin = 2, sweep_pmax = 200, sweep_dftn = 4096;
    sweep_cmd->add_option("--fn", sweep_fn, "registry function: sin2|cos2pin|expcos")->required();
    sweep_cmd->add_option("--k", sweep_k, "sin2 frequency parameter")->capture_default_str();
    sweep_cmd->add_option("--n", sweep_n, "cos2pin mode number")->capture_default_str();
    sweep_cmd->add_option("--pmin", sweep_pmin, "first grid size")->capture_default_str();
    sweep_cmd->add_option("--pmax", sweep_pmax, "last grid size")->capture_default_str();
    sweep_cmd->add_option("--N", sweep_dftn, "DFT size for the expcos spectrum")
        ->capture_default_str();
    add_io(sweep_cmd);
    sweep_cmd->callback([&] {
        int threads = threads_from_env();
        std::vector<SweepRow> rows;
        if (sweep_fn == "sin2")
            rows = sweep_bias_sin2(sweep_k, sweep_pmin, sweep_pmax, threads);
        else if (sweep_fn == "cos2pin")
            rows = sweep_bias_cos2pin(sweep_n, sweep_pmin, sweep_pmax, threads);
        else if (sweep_fn == "expcos")
            rows = sweep_bias_expcos(sweep_pmin, sweep_pmax, GridSize{sweep_dftn}, threads);
        else
            throw std::invalid_argument("unknown function label: " + sweep_fn);
        with_output(output_path, out, [&](std::ostream& os) {
            format == "json" ? write_json(rows, os) : write_csv(rows, os);
        });
    });

    // ---- landscape: chi_P over a y interval
    auto* land_cmd = app.add_subcommand("landscape", "sample the resonance landscape chi_P(y)");
    std::int64_t land_p = 0, land_n = 2001;
    double land_ymin = 0.0, land_ymax = 1.0;
    land_cmd->add_option("--P", land_p, "grid size")->required();
    land_cmd->add_option("--ymin", land_ymin, "left endpoint")->capture_default_str();
    land_cmd->add_option("--ymax", land_ymax, "right endpoint")->capture_default_str();
    land_cmd->add_option("--n", land_n, "uniform sample count")->capture_default_str();
    add_io(land_cmd);
    land_cmd->callback([&] {
        auto rows = sample_landscape(GridSize{land_p}, land_ymin, land_ymax, land_n);
        with_output(output_path, out, [&](std::ostream& os) {
            format == "json" ? write_json(rows, os) : write_csv(rows, os);
        });
    });

    // ---- landscape2d: both real surfaces on the tensor grid
    auto* land2_cmd = app.add_subcommand("landscape2d", "sample the 2D resonance landscape");
    std::int64_t land2_p = 0, land2_n = 101;
    double land2_range = 1.0;
    land2_cmd->add_option("--P", land2_p, "grid size")->required();
    land2_cmd->add_option("--range", land2_range, "square side [0, range]")->capture_default_str();
    land2_cmd->add_option("--n", land2_n, "samples per axis")->capture_default_str();
    add_io(land2_cmd);
    land2_cmd->callback([&] {
        auto rows = sample_landscape_2d(GridSize{land2_p}, land2_range, land2_n);
        with_output(output_path, out, [&](std::ostream& os) {
            format == "json" ? write_json(rows, os) : write_csv(rows, os);
        });
    });

    // ---- filter: the comb picking modes k ≡ 0 (mod P)
    auto* filter_cmd = app.add_subcommand("filter", "per-mode filter view of one spectrum");
    std::string filter_spectrum, filter_fn;
    double filter_k = 2.0;
    std::int64_t filter_n = 1, filter_p = 0, filter_krange = 0, filter_dftn = 4096;
    auto* filter_spec_opt =
        filter_cmd->add_option("--spectrum", filter_spectrum, "spectrum JSON file (1D)");
    auto* filter_fn_opt =
        filter_cmd->add_option("--fn", filter_fn, "registry function: sin2|cos2pin|expcos");
    filter_spec_opt->excludes(filter_fn_opt);
    filter_cmd->add_option("--k", filter_k, "sin2 frequency parameter (m = 2k must be integer)")
        ->capture_default_str();
    filter_cmd->add_option("--n", filter_n, "cos2pin mode number")->capture_default_str();
    filter_cmd->add_option("--P", filter_p, "grid size")->required();
    auto* krange_opt =
        filter_cmd->add_option("--krange", filter_krange, "mode window |k| <= krange (default 3P)");
    filter_cmd->add_option("--N", filter_dftn, "DFT size for the expcos spectrum")
        ->capture_default_str();
    add_io(filter_cmd);
    filter_cmd->callback([&] {
        FourierSpectrum spec;
        if (!filter_spectrum.empty()) {
            auto file = load_spectrum(filter_spectrum);
            if (!file.one_d) throw std::invalid_argument("filter: need a 1D spectrum");
            spec = *file.one_d;
        } else if (filter_fn == "sin2") {
            double m = PrototypeParams::from_k(filter_k).m;
            if (m != std::floor(m))
                throw std::invalid_argument("filter --fn sin2: m = 2k must be an integer");
            spec = sin2_integer_spectrum(static_cast<std::int64_t>(m));
        } else if (filter_fn == "cos2pin") {
            spec = cosine_mode_spectrum(filter_n);
        } else if (filter_fn == "expcos") {
            spec = expcos_spectrum(filter_dftn);
        } else {
            throw std::invalid_argument(filter_fn.empty() ? "filter: need --spectrum or --fn"
                                                          : "unknown function label: " + filter_fn);
        }
        std::int64_t krange = (krange_opt->count() > 0) ? filter_krange : 3 * filter_p;
        auto rows = filter_view(spec, GridSize{filter_p}, krange);
        with_output(output_path, out, [&](std::ostream& os) {
            format == "json" ? write_json(rows, os) : write_csv(rows, os);
        });
    });

    // ---- spectrum-estimate: DFT a registry function into the wire format
    auto* est_cmd = app.add_subcommand(
        "spectrum-estimate", "estimate Fourier modes by direct DFT; always writes spectrum JSON");
    std::string est_fn;
    double est_k = 2.0, est_drop = 1e-14;
    std::int64_t est_n = 1, est_dftn = 4096;
    std::optional<std::int64_t> est_kmax;
    est_cmd->add_option("--fn", est_fn, "registry function: sin2|cos2pin|expcos")->required();
    est_cmd->add_option("--k", est_k, "sin2 frequency parameter")->capture_default_str();
    est_cmd->add_option("--n", est_n, "cos2pin mode number")->capture_default_str();
    est_cmd->add_option("--N", est_dftn, "DFT size")->capture_default_str();
    est_cmd->add_option("--drop-tol", est_drop, "discard modes with |c| <= drop-tol")
        ->capture_default_str();
    est_cmd->add_option("--kmax", est_kmax, "largest |k| to keep (default (N-1)/2)");
    add_io(est_cmd);
    est_cmd->callback([&] {
        auto f = lookup_fn_1d(est_fn, est_k, est_n);
        auto spec = estimate_spectrum_dft(f, GridSize{est_dftn}, est_drop, est_kmax);
        with_output(output_path, out, [&](std::ostream& os) { write_spectrum_json(spec, os); });
    });

    // ---- validate: the three built-in cross-check cases
    auto* val_cmd = app.add_subcommand("validate", "run the fixed cross-check comparison table");
    add_io(val_cmd);
    val_cmd->callback([&] {
        auto rows = run_validate_cases();
        with_output(output_path, out, [&](std::ostream& os) {
            write_validate_table(rows, format, os);
        });
        for (const auto& r : rows)
            if (!(r.max_diff < kValidateTol)) exit_status = 1;
    });

    try {
        args = apply_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* active = &app;
        while (!active->get_subcommands().empty()) active = active->get_subcommands().front();
        out << active->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::FileError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return exit_status;
}

}  // namespace rbf
