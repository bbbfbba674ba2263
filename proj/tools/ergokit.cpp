// ergokit — command-line front end: load states, run the gap/bound/verdict
// pipeline, emit machine-readable reports and sweep tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ergo/ergo.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 2 parse error, 3 validation error, 4 the state's
// ladders do not meet the equal-linear-spacing hypothesis.
enum ExitCode : int { kOk = 0, kFailure = 1, kParseError = 2, kValidationError = 3, kHamiltonianError = 4 };

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_string(std::string_view bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

struct LoadedState {
    ergo::BipartiteSystem sys;
    std::string digest;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw json::parse_error::create(101, 0, "cannot open state file: " + path, nullptr);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ergo::Matrix matrix_from_parts(const json& re, const json& im, int n) {
    if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != n ||
        static_cast<int>(im.size()) != n) {
        throw ergo::ValidationError("state file: matrix arrays must be d1*d2 rows");
    }
    ergo::Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row_re = re.at(r);
        const json& row_im = im.at(r);
        if (static_cast<int>(row_re.size()) != n || static_cast<int>(row_im.size()) != n) {
            throw ergo::ValidationError("state file: matrix rows must have d1*d2 entries");
        }
        for (int c = 0; c < n; ++c) {
            m(r, c) = ergo::Complex(row_re.at(c).get<double>(), row_im.at(c).get<double>());
        }
    }
    return m;
}

LoadedState load_state(const std::string& path, const ergo::ToleranceSet& tol) {
    const std::string bytes = read_file(path);
    const json j = json::parse(bytes);

    const int d1 = j.at("d1").get<int>();
    const int d2 = j.at("d2").get<int>();
    if (d1 < 1 || d2 < 1) {
        throw ergo::ValidationError("state file: dimensions must be >= 1");
    }
    const double spacing_a = j.value("spacing_a", 1.0);
    const double spacing_b = j.value("spacing_b", 1.0);

    const ergo::Matrix m = matrix_from_parts(j.at("matrix_re"), j.at("matrix_im"), d1 * d2);
    ergo::BipartiteSystem sys =
        ergo::make_bipartite(ergo::DensityMatrix(m, tol), d1, d2,
                             ergo::linear_hamiltonian(d1, spacing_a),
                             ergo::linear_hamiltonian(d2, spacing_b), tol);
    return {std::move(sys), digest_string(bytes)};
}

json tolerances_json(const ergo::ToleranceSet& tol) {
    return {{"herm", tol.herm}, {"trace", tol.trace}, {"psd", tol.psd}, {"eig", tol.eig}};
}

json report_header(const std::string& digest, const ergo::ToleranceSet& tol) {
    return {{"tool", "ergokit"},
            {"version", ergo::version},
            {"input_digest", digest},
            {"tolerances", tolerances_json(tol)}};
}

json gap_json(const ergo::GapReport& gap) {
    return {{"energy_initial", gap.energy_initial},
            {"global_ergotropy", gap.global_ergotropy},
            {"local_ergotropy_a", gap.local_ergotropy_a},
            {"local_ergotropy_b", gap.local_ergotropy_b},
            {"gap", gap.gap}};
}

json bound_json(const ergo::BoundReport& report) {
    json out = {{"y", report.y},
                {"z", report.z},
                {"spectral_bound", report.spectral_bound},
                {"case", ergo::to_string(report.bound_case)},
                {"m_value", report.m_value},
                {"dimension_bound", report.dimension_bound},
                {"bound", report.bound},
                {"gap", report.gap},
                {"verdict", ergo::to_string(report.verdict)}};
    out["lm"] = report.lm ? json{report.lm->first, report.lm->second} : json(nullptr);
    out["kj"] = report.kj ? json{report.kj->first, report.kj->second} : json(nullptr);
    return out;
}

void emit(const json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw ergo::ValidationError("cannot open output file: " + out_path);
    }
    out << payload.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw ergo::ValidationError("cannot open output file: " + out_path);
    }
    out << text;
}

std::string sweep_csv(const std::vector<ergo::oracle::SweepRecord>& records) {
    std::string text =
        "seed,d1,d2,param,gap,bound_spectral,bound_dimensional,bound,nk_holds,ppt_separable,"
        "verdict\n";
    for (const auto& rec : records) {
        text += std::to_string(rec.seed) + ',';
        text += std::to_string(rec.d1) + ',';
        text += std::to_string(rec.d2) + ',';
        text += format_double(rec.param) + ',';
        text += format_double(rec.gap) + ',';
        text += format_double(rec.bound_spectral) + ',';
        text += format_double(rec.bound_dimensional) + ',';
        text += format_double(rec.bound) + ',';
        text += rec.nk_holds ? "true," : "false,";
        if (rec.ppt_separable) text += *rec.ppt_separable ? "true" : "false";
        text += ',';
        text += ergo::to_string(rec.verdict);
        text += '\n';
    }
    return text;
}

json sweep_json(const std::vector<ergo::oracle::SweepRecord>& records,
                const ergo::ToleranceSet& tol) {
    json rows = json::array();
    for (const auto& rec : records) {
        json row = {{"seed", rec.seed},
                    {"d1", rec.d1},
                    {"d2", rec.d2},
                    {"param", rec.param},
                    {"spectrum", rec.spectrum},
                    {"gap", rec.gap},
                    {"bound_spectral", rec.bound_spectral},
                    {"bound_dimensional", rec.bound_dimensional},
                    {"bound", rec.bound},
                    {"nk_holds", rec.nk_holds},
                    {"verdict", ergo::to_string(rec.verdict)}};
        row["ppt_separable"] = rec.ppt_separable ? json(*rec.ppt_separable) : json(nullptr);
        rows.push_back(std::move(row));
    }
    const ergo::oracle::SweepSummary summary = ergo::oracle::summarize(records, tol);
    return {{"tool", "ergokit"},
            {"version", ergo::version},
            {"tolerances", tolerances_json(tol)},
            {"records", rows},
            {"summary",
             {{"n_samples", summary.n_samples},
              {"n_entangled", summary.n_entangled},
              {"n_separable", summary.n_separable},
              {"n_inconclusive", summary.n_inconclusive},
              {"n_bound_violations", summary.n_bound_violations},
              {"n_nk_failures", summary.n_nk_failures}}}};
}

std::vector<double> parse_spectrum_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw json::parse_error::create(102, 0, "bad spectrum entry: " + item, nullptr);
        }
        if (used != item.size()) {
            throw json::parse_error::create(102, 0, "bad spectrum entry: " + item, nullptr);
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw json::parse_error::create(102, 0, "empty spectrum list", nullptr);
    }
    return values;
}

std::pair<int, int> parse_dims(const std::string& text) {
    const std::size_t cut = text.find('x');
    if (cut == std::string::npos) {
        throw json::parse_error::create(103, 0, "dims must look like 2x3: " + text, nullptr);
    }
    try {
        return {std::stoi(text.substr(0, cut)), std::stoi(text.substr(cut + 1))};
    } catch (const std::exception&) {
        throw json::parse_error::create(103, 0, "dims must look like 2x3: " + text, nullptr);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ergotropy, ergotropic gap and separability bounds for bipartite states"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", ergo::version);

    double tol_eig = 1e-9;
    app.add_option("--tol-eig", tol_eig, "spectral/verdict tolerance")
        ->envname("ERGOKIT_TOL_EIG");

    std::string state_path;
    std::string out_path;

    CLI::App* cmd_gap = app.add_subcommand("gap", "ergotropies and ergotropic gap of a state file");
    cmd_gap->add_option("state", state_path, "StateFile JSON path")->required();
    cmd_gap->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* cmd_certify =
        app.add_subcommand("certify", "separability bound, gap and entanglement verdict");
    cmd_certify->add_option("state", state_path, "StateFile JSON path")->required();
    cmd_certify->add_option("--out", out_path, "write the report here instead of stdout");

    int opt_d1 = 0;
    int opt_d2 = 0;
    double opt_spacing = 1.0;
    std::string spectrum_text;
    CLI::App* cmd_bound =
        app.add_subcommand("bound", "closed-form separability bounds for given dimensions");
    cmd_bound->add_option("--d1", opt_d1, "smaller local dimension")->required();
    cmd_bound->add_option("--d2", opt_d2, "larger local dimension")->required();
    cmd_bound->add_option("--spectrum", spectrum_text, "comma-separated global spectrum");
    cmd_bound->add_option("--spacing", opt_spacing, "common ladder spacing E");
    cmd_bound->add_option("--out", out_path, "write the report here instead of stdout");

    double opt_gap = 0.0;
    CLI::App* cmd_witness =
        app.add_subcommand("witness-dim", "smallest local dimension compatible with a gap");
    cmd_witness->add_option("--gap", opt_gap, "measured ergotropic gap")->required();
    cmd_witness->add_option("--spacing", opt_spacing, "ladder spacing E");

    std::string family_text;
    std::string dims_text = "2x2";
    int opt_n = 0;
    std::uint64_t opt_seed = 0;
    std::string format_text = "csv";
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "deterministic family sweep table");
    cmd_sweep->add_option("--family", family_text, "werner | separable | haar")
        ->required()
        ->check(CLI::IsMember({"werner", "separable", "haar"}));
    cmd_sweep->add_option("--dims", dims_text, "local dimensions, e.g. 2x3");
    cmd_sweep->add_option("--n", opt_n, "number of samples / grid points")->required();
    cmd_sweep->add_option("--seed", opt_seed, "root seed");
    cmd_sweep->add_option("--format", format_text, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--out", out_path, "write the table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ergokit: " << e.what() << "\n";
        return kParseError;
    }

    ergo::ToleranceSet tol;
    tol.eig = tol_eig;

    try {
        if (cmd_gap->parsed()) {
            const LoadedState loaded = load_state(state_path, tol);
            json payload = report_header(loaded.digest, tol);
            payload["d1"] = loaded.sys.d1;
            payload["d2"] = loaded.sys.d2;
            payload["swapped"] = loaded.sys.swapped;
            payload["report"] = gap_json(ergo::ergotropic_gap(loaded.sys, tol));
            emit(payload, out_path);
        } else if (cmd_certify->parsed()) {
            const LoadedState loaded = load_state(state_path, tol);
            const ergo::BoundReport report = ergo::certify_entanglement(loaded.sys, tol);
            json payload = report_header(loaded.digest, tol);
            payload["d1"] = loaded.sys.d1;
            payload["d2"] = loaded.sys.d2;
            payload["swapped"] = loaded.sys.swapped;
            payload["report"] = bound_json(report);
            payload["report"].update(gap_json(ergo::ergotropic_gap(loaded.sys, tol)));
            emit(payload, out_path);
        } else if (cmd_bound->parsed()) {
            std::string params = "d1=" + std::to_string(opt_d1) + ";d2=" + std::to_string(opt_d2) +
                                 ";spacing=" + format_double(opt_spacing) +
                                 ";spectrum=" + spectrum_text;
            json payload = report_header(digest_string(params), tol);
            payload["d1"] = opt_d1;
            payload["d2"] = opt_d2;
            if (spectrum_text.empty()) {
                const ergo::DimensionBound dim = ergo::dimension_bound_m(opt_d1, opt_d2);
                json report = {{"case", ergo::to_string(dim.bound_case)},
                               {"m_value", dim.m_value},
                               {"dimension_bound", dim.m_value * opt_spacing}};
                report["lm"] = dim.bound_case == ergo::BoundCase::CaseI
                                   ? json{dim.solver.first, dim.solver.second}
                                   : json(nullptr);
                report["kj"] = dim.bound_case == ergo::BoundCase::CaseII
                                   ? json{dim.solver.first, dim.solver.second}
                                   : json(nullptr);
                payload["report"] = report;
            } else {
                const ergo::Spectrum x(parse_spectrum_list(spectrum_text), tol);
                json report = bound_json(ergo::separable_gap_bound(x, opt_d1, opt_d2, opt_spacing));
                report.erase("gap");  // no state, only its spectrum
                report.erase("verdict");
                payload["report"] = report;
            }
            emit(payload, out_path);
        } else if (cmd_witness->parsed()) {
            std::cout << ergo::dimension_witness(opt_gap, opt_spacing, tol.eig) << "\n";
        } else if (cmd_sweep->parsed()) {
            const auto [d1, d2] = parse_dims(dims_text);
            ergo::oracle::SweepFamily family = ergo::oracle::SweepFamily::WernerGrid;
            if (family_text == "separable") family = ergo::oracle::SweepFamily::Separable;
            if (family_text == "haar") family = ergo::oracle::SweepFamily::HaarPure;
            const auto records =
                ergo::oracle::violation_sweep(d1, d2, opt_n, opt_seed, family, tol);
            if (format_text == "csv") {
                emit_text(sweep_csv(records), out_path);
            } else {
                emit(sweep_json(records, tol), out_path);
            }
        }
    } catch (const json::exception& e) {
        std::cerr << "ergokit: parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ergo::HamiltonianError& e) {
        std::cerr << "ergokit: " << e.what() << "\n";
        return kHamiltonianError;
    } catch (const ergo::ValidationError& e) {
        std::cerr << "ergokit: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "ergokit: " << e.what() << "\n";
        return kFailure;
    }
    return kOk;
}
