#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstirling/cli.hpp"
#include "qstirling/emit.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/levels.hpp"
#include "qstirling/oracles.hpp"
#include "qstirling/sweep.hpp"

namespace qstirling::cli {

namespace {

enum class LevelMedium { Well, DoubleWell, Oscillator };

struct Options {
    SweepSpec sweep;  // sweep.cycle doubles as the configuration of every subcommand
    OutputFormat output = OutputFormat::Csv;
    double alpha = 0.0;
    LevelMedium level_medium = LevelMedium::Oscillator;
    std::int64_t n_max = 10;
    double temperature = 2.0;
    bool printed_sign = false;
    std::vector<double> temperatures{1.0, 2.0, 5.0, 10.0, 20.0};
};

const std::map<std::string, MediumKind> medium_names{{"well", MediumKind::Well},
                                                     {"oscillator", MediumKind::Oscillator}};
const std::map<std::string, LevelMedium> level_medium_names{
    {"well", LevelMedium::Well}, {"double-well", LevelMedium::DoubleWell}, {"oscillator", LevelMedium::Oscillator}};
const std::map<std::string, Preset> preset_names{
    {"textbook", Preset::Textbook}, {"relativistic", Preset::Relativistic}, {"ncgup-full", Preset::NcgupFull}};
const std::map<std::string, UnitSystem> unit_names{{"si", UnitSystem::SI}, {"natural", UnitSystem::Natural}};
const std::map<std::string, Scale> scale_names{{"linear", Scale::Linear}, {"log", Scale::Log}};
const std::map<std::string, OutputFormat> output_names{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void add_physics(CLI::App* sub, Options& o) {
    CycleConfig& c = o.sweep.cycle;
    sub->add_option("--preset", c.preset, "Correction preset")
        ->transform(CLI::CheckedTransformer(preset_names, CLI::ignore_case));
    sub->add_option_function<std::string>(
           "--units", [&c](const std::string& s) { c.units = unit_names.at(s); },
           "Unit system (default: si for the well, natural for the oscillator)")
        ->check(CLI::IsMember({"si", "natural"}));
    sub->add_option("--t-hot", c.t_hot, "Hot bath temperature [K]")->capture_default_str();
    sub->add_option("--t-cold", c.t_cold, "Cold bath temperature [K]")->capture_default_str();
    sub->add_option_function<double>("--length", [&c](const double& v) { c.length = v; },
                                     "Well half-width L; the unsplit well is 2L wide (default 5 nm)");
    sub->add_option_function<double>("--omega", [&c](const double& v) { c.omega = v; },
                                     "Oscillator frequency in states A/D (default hbar*omega = 4 k_B K)");
    sub->add_option_function<double>("--omega-prime", [&c](const double& v) { c.omega_prime = v; },
                                     "Oscillator frequency in states B/C (default hbar*omega' = 3 k_B K)");
    sub->add_option_function<double>("--mass", [&c](const double& v) { c.mass = v; },
                                     "Particle mass (default: electron)");
    sub->add_option_function<double>("--planck-mass", [&c](const double& v) { c.planck_mass = v; }, "Planck mass");
    sub->add_option_function<double>("--zeta", [&c](const double& v) { c.zeta = v; },
                                     "Override zeta = 1/(c M_pl)");
    sub->add_flag("--coordinate-length", c.coordinate_length, "Use the coordinate well width, not the NC-rescaled one");
    sub->add_option("--weight-epsilon", c.policy.weight_epsilon, "Relative weight at which sums stop")
        ->capture_default_str();
    sub->add_option("--hard-cap", c.policy.hard_cap, "Maximum number of levels per sum")->capture_default_str();
    sub->add_option_function<bool>(
        "--respect-turnover", [&c](const bool& v) { c.policy.respect_turnover = v; },
        "Stop sums at the spectrum turnover (default true)");
    sub->add_option("--violation-threshold", c.policy.violation_threshold,
                    "Weight at the turnover that counts as a perturbative-regime violation")
        ->capture_default_str();
    sub->add_option("--output", o.output, "Output format")
        ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case));
    sub->add_option("--config", "Flat key = value file; command-line flags override it");
}

std::vector<double> parse_temperatures(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, end - start);
        std::size_t used = 0;
        double t = 0;
        try {
            t = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ValidationError("malformed temperature '" + item + "'");
        out.push_back(t);
        start = end + 1;
    }
    return out;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) throw ValidationError("--config needs a file name");
            const auto f = read_config_file(args[++i]);
            from_file.insert(from_file.end(), f.begin(), f.end());
        } else if (a.rfind("--config=", 0) == 0) {
            const auto f = read_config_file(a.substr(9));
            from_file.insert(from_file.end(), f.begin(), f.end());
        } else {
            rest.push_back(a);
        }
    }
    if (from_file.empty()) return rest;
    if (rest.empty() || rest.front().starts_with("-")) throw ValidationError("--config must follow a subcommand");
    // File values go right after the subcommand so that later flags win.
    std::vector<std::string> out{rest.front()};
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

void report_warnings(const std::vector<SweepRow>& rows, std::ostream& err) {
    for (const auto& r : rows)
        if (!r.warnings.empty()) err << "warning: alpha=" << format_number(r.alpha) << ": " << r.warnings << '\n';
}

int emit_rows(const std::vector<SweepRow>& rows, const Options& o, std::ostream& out, std::ostream& err) {
    out << (o.output == OutputFormat::Csv ? emit_csv(rows) : emit_json(rows));
    report_warnings(rows, err);
    const bool all_failed = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.failed; });
    if (!rows.empty() && all_failed) {
        err << "error: every point failed\n";
        return exit_all_failed;
    }
    return exit_ok;
}

int do_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    o.sweep.validate();
    return emit_rows(run_sweep(o.sweep), o, out, err);
}

int do_cycle(const Options& o, std::ostream& out, std::ostream& err) {
    const auto spec = build_cycle(o.sweep.cycle, o.alpha);
    const auto warnings = spec.hot_start.params.validate();
    spec.validate();
    SweepRow row;
    try {
        row = make_row(o.alpha, run_stirling(spec), warnings);
    } catch (const std::exception& e) {
        row = failed_row(o.alpha, e.what());
    }
    return emit_rows({row}, o, out, err);
}

SpectrumModel level_model(const Options& o) {
    CycleConfig c = o.sweep.cycle;  // unit defaults follow the listed medium
    c.medium = o.level_medium == LevelMedium::Oscillator ? MediumKind::Oscillator : MediumKind::Well;
    const PhysicalParams p = c.params(o.alpha);
    Corrections flags = corrections_for(c.preset);
    switch (o.level_medium) {
        case LevelMedium::Well:
        case LevelMedium::DoubleWell: {
            flags.printed_well_sign = o.printed_sign;
            const WellGeometry full{2.0 * c.resolved_length(), !c.coordinate_length};
            return o.level_medium == LevelMedium::Well ? SpectrumModel::well(full, p, flags)
                                                       : SpectrumModel::double_well(full, p, flags);
        }
        case LevelMedium::Oscillator:
            if (o.printed_sign) throw ValidationError("--printed-sign applies to wells only");
            return SpectrumModel::oscillator({c.resolved_omega()}, p, flags);
    }
    throw ValidationError("unknown medium");
}

int do_levels(const Options& o, std::ostream& out, std::ostream& err) {
    const auto model = level_model(o);
    for (const auto& w : model.params.validate()) err << "warning: " << w << '\n';
    const auto table = cmd_levels(model, o.n_max, o.temperature, o.sweep.cycle.policy);
    out << (o.output == OutputFormat::Csv ? emit_levels_csv(table) : emit_levels_json(table));
    for (const auto& w : table.warnings) err << "warning: " << w << '\n';
    return exit_ok;
}

int do_oracle(const Options& o, std::ostream& out, std::ostream& err) {
    const CycleConfig& c = o.sweep.cycle;
    const auto spec = build_cycle(c, o.alpha);
    const bool well = c.medium == MediumKind::Well;
    const char* medium = well ? "well" : "oscillator";

    struct Row {
        double temperature;
        OracleReport report;
    };
    std::vector<Row> rows;
    bool any_ok = false;
    for (double t : o.temperatures) {
        Row row{t, {}};
        try {
            row.report = well ? audit_well(spec.hot_start, t, c.policy) : audit_oscillator(spec.hot_start, t, c.policy);
            any_ok = true;
        } catch (const std::exception& e) {
            constexpr double nan = std::numeric_limits<double>::quiet_NaN();
            row.report = {nan, nan, nan, false, std::string("error: ") + e.what()};
            err << "warning: T=" << format_number(t) << ": " << e.what() << '\n';
        }
        rows.push_back(std::move(row));
    }

    if (o.output == OutputFormat::Csv) {
        out << "medium,temperature,alpha,closed_form,direct_sum,relative_gap,regime_valid,notes\n";
        for (const auto& r : rows)
            out << medium << ',' << format_number(r.temperature) << ',' << format_number(o.alpha) << ','
                << format_number(r.report.closed_form_value) << ',' << format_number(r.report.direct_sum_value) << ','
                << format_number(r.report.relative_gap) << ',' << (r.report.regime_valid ? 1 : 0) << ','
                << csv_field(r.report.regime_notes) << '\n';
    } else {
        auto num = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json obj;
            obj["medium"] = medium;
            obj["temperature"] = r.temperature;
            obj["alpha"] = o.alpha;
            obj["closed_form"] = num(r.report.closed_form_value);
            obj["direct_sum"] = num(r.report.direct_sum_value);
            obj["relative_gap"] = num(r.report.relative_gap);
            obj["regime_valid"] = r.report.regime_valid;
            obj["notes"] = r.report.regime_notes;
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
    }
    if (!rows.empty() && !any_ok) return exit_all_failed;
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quantum Stirling cycles with relativistic and NC/GUP-corrected working media", "qstirling"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto* sweep = app.add_subcommand("sweep", "Efficiency versus the NC parameter alpha");
    sweep->add_option("--medium", o.sweep.cycle.medium, "Working medium")
        ->transform(CLI::CheckedTransformer(medium_names, CLI::ignore_case));
    add_physics(sweep, o);
    sweep->add_option("--alpha-min", o.sweep.alpha_min, "Smallest alpha")->capture_default_str();
    sweep->add_option("--alpha-max", o.sweep.alpha_max, "Largest alpha")->capture_default_str();
    sweep->add_option("--steps", o.sweep.steps, "Number of swept points")->capture_default_str();
    sweep->add_option("--scale", o.sweep.scale, "Spacing of the alpha grid")
        ->transform(CLI::CheckedTransformer(scale_names, CLI::ignore_case));
    sweep->add_option_function<bool>(
        "--anchor", [&o](const bool& v) { o.sweep.zero_anchor = v; },
        "Prepend an alpha = 0 row when alpha-min > 0 (default true)");
    sweep->add_option("--threads", o.sweep.threads, "Worker threads, 0 = all cores");

    auto* cycle = app.add_subcommand("cycle", "One Stirling cycle at a fixed alpha");
    cycle->add_option("--medium", o.sweep.cycle.medium, "Working medium")
        ->transform(CLI::CheckedTransformer(medium_names, CLI::ignore_case));
    add_physics(cycle, o);
    cycle->add_option("--alpha", o.alpha, "NC parameter")->capture_default_str();

    auto* levels = app.add_subcommand("levels", "Level table with cumulative Boltzmann weights");
    levels->add_option("--medium", o.level_medium, "Spectrum")
        ->transform(CLI::CheckedTransformer(level_medium_names, CLI::ignore_case));
    add_physics(levels, o);
    levels->add_option("--alpha", o.alpha, "NC parameter")->capture_default_str();
    levels->add_option("--n-max", o.n_max, "Highest quantum number listed")->capture_default_str();
    levels->add_option("--temperature", o.temperature, "Temperature for the weights")->capture_default_str();
    levels->add_flag("--printed-sign", o.printed_sign, "Negative leading well term (level table only)");

    auto* oracle = app.add_subcommand("oracle", "Closed-form partition functions against direct sums");
    oracle->add_option("--medium", o.sweep.cycle.medium, "Working medium")
        ->transform(CLI::CheckedTransformer(medium_names, CLI::ignore_case));
    add_physics(oracle, o);
    oracle->add_option("--alpha", o.alpha, "NC parameter")->capture_default_str();
    // A plain string keeps the last-one-wins rule that a delimited vector option would break.
    oracle->add_option_function<std::string>(
        "--temperatures", [&o](const std::string& s) { o.temperatures = parse_temperatures(s); },
        "Comma-separated temperatures to audit (default 1,2,5,10,20)");

    try {
        std::vector<std::string> expanded = expand_config(args);
        std::reverse(expanded.begin(), expanded.end());
        app.parse(expanded);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_config_error;
    }

    try {
        if (sweep->parsed()) return do_sweep(o, out, err);
        if (cycle->parsed()) return do_cycle(o, out, err);
        if (levels->parsed()) return do_levels(o, out, err);
        if (oracle->parsed()) return do_oracle(o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_config_error;
    }
    return exit_config_error;
}

}  // namespace qstirling::cli
