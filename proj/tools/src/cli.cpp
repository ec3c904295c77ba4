#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "qchan/cli.hpp"
#include "qchan/json_io.hpp"
#include "qchan/verify.hpp"

namespace qchan::cli {

namespace {

Measure parse_measure(const std::string& name) {
    if (name == "rel") return Measure::RelativeEntropy;
    if (name == "l1") return Measure::L1Norm;
    throw DomainError("measure must be 'rel' or 'l1', got '" + name + "'");
}

Target parse_target(const std::string& name) {
    if (name == "theorem1") return Target::Theorem1;
    if (name == "theorem2") return Target::Theorem2;
    if (name == "lemma1") return Target::Lemma1;
    if (name == "lemma2") return Target::Lemma2;
    if (name == "gmin") return Target::GMinimum;
    throw DomainError("unknown verify target '" + name + "'");
}

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw DomainError("expected a number for " + what + ", got '" + text + "'");
    }
}

KrausChannel channel_from_compact(const std::string& spec) {
    // preset=name[,key=value]...
    std::vector<std::pair<std::string, std::string>> fields;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw DomainError("channel spec token '" + token + "' is not key=value");
        }
        fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
    }
    if (fields.empty() || fields.front().first != "preset") {
        throw DomainError("compact channel spec must start with preset=<name>");
    }
    const std::string name = fields.front().second;
    std::optional<double> param;
    std::string param_name;
    for (std::size_t i = 1; i < fields.size(); ++i) {
        if (param) throw DomainError("channel presets take at most one parameter");
        param_name = fields[i].first;
        param = parse_number(fields[i].second, "parameter " + param_name);
    }
    if (name == "pauli_x" || name == "identity") {
        if (param) throw DomainError("preset '" + name + "' takes no parameters");
        return name == "pauli_x" ? KrausChannel::pauli_x() : KrausChannel::identity();
    }
    if (!param) throw DomainError("preset '" + name + "' needs a parameter");
    return instantiate_preset(name, param_name, *param);
}

void write_text_file(const std::filesystem::path& path, const std::string& text, bool force) {
    if (std::filesystem::exists(path) && !force) {
        throw DomainError("refusing to overwrite " + path.string() + " without --force");
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open " + path.string() + " for writing");
    file << text;
}

std::string gnuplot_script(const std::string& csv_path) {
    std::string script;
    script += "set datafile separator ','\n";
    script += "set key autotitle columnhead\n";
    script += "plot '" + csv_path + "' using 1:2 with lines title 'sum', \\\n";
    script += "     '" + csv_path + "' using 1:3 with lines title 'lower bound'\n";
    return script;
}

int cmd_verify(const std::string& target_text, std::uint64_t trials, std::uint64_t seed,
               unsigned jobs, std::ostream& out) {
    const Target target = parse_target(target_text);
    const auto started = std::chrono::steady_clock::now();
    const VerificationReport report = run_falsification(target, trials, seed, jobs);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    log_debug("verify: " + target_name(target) + " x" + std::to_string(trials) + " in " +
              std::to_string(elapsed.count()) + " s");
    out << verification_to_json(report) << "\n";
    return report.violations.empty() ? exit_ok : exit_violation;
}

int cmd_presets(std::ostream& out) {
    nlohmann::json j;
    j["channels"] = nlohmann::json::array({
        nlohmann::json{{"name", "bit_flip"}, {"parameter", "p"}, {"range", "[0,1]"}},
        nlohmann::json{{"name", "phase_damping"}, {"parameter", "lambda"}, {"range", "[0,1]"}},
        nlohmann::json{{"name", "rotation"}, {"parameter", "alpha"}, {"range", "any real"}},
        nlohmann::json{{"name", "pauli_x"}},
        nlohmann::json{{"name", "identity"}},
    });
    nlohmann::json bases = nlohmann::json::array();
    for (const auto& [name, basis] : named_bases()) bases.push_back(name);
    j["bases"] = bases;
    out << j.dump() << "\n";
    return exit_ok;
}

}  // namespace

KrausChannel parse_channel_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return parse_channel_json(spec);
    return channel_from_compact(spec);
}

QubitBasis parse_basis_spec(const std::string& spec) {
    if (const auto named = find_named_basis(spec)) return *named;
    if (!spec.empty() && spec.front() == '{') return parse_basis_json(spec);
    throw DomainError("unknown basis '" + spec + "' (expected a named basis or JSON)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coherence of qubit channels: measures, uncertainty bounds, falsification"};
    app.require_subcommand(1);

    std::string channel_spec, basis1_spec, basis2_spec, measure_text;
    std::optional<double> c_max_override;

    auto* coherence = app.add_subcommand("coherence", "coherence of a channel in one basis");
    coherence->add_option("--channel", channel_spec, "channel spec (JSON or preset=name,k=v)")
        ->required();
    coherence->add_option("--basis1", basis1_spec, "measurement basis (name or JSON)")->required();
    coherence->add_option("--measure", measure_text, "rel | l1")->required();

    auto* bound = app.add_subcommand("bound", "sum of coherences against the lower bound");
    bound->add_option("--channel", channel_spec, "channel spec")->required();
    bound->add_option("--basis1", basis1_spec, "first basis")->required();
    bound->add_option("--basis2", basis2_spec, "second basis")->required();
    bound->add_option("--measure", measure_text, "rel | l1")->required();
    bound->add_option("--c-max", c_max_override, "override the measured overlap c_max");

    std::string param_name, out_path, gnuplot_path;
    double start = 0.0, stop = 0.0, step = 0.0;
    bool force = false;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep of a preset channel, CSV output");
    sweep->add_option("--channel", channel_spec, "preset template (e.g. preset=bit_flip)")
        ->required();
    sweep->add_option("--param", param_name, "swept parameter (p | lambda | alpha)")->required();
    sweep->add_option("--start", start, "first parameter value")->required();
    sweep->add_option("--stop", stop, "last parameter value")->required();
    sweep->add_option("--step", step, "grid step (> 0)")->required();
    sweep->add_option("--basis1", basis1_spec, "first basis")->required();
    sweep->add_option("--basis2", basis2_spec, "second basis")->required();
    sweep->add_option("--measure", measure_text, "rel | l1")->required();
    sweep->add_option("--out", out_path, "CSV output path")->required();
    sweep->add_option("--c-max", c_max_override, "override the measured overlap c_max");
    sweep->add_option("--gnuplot", gnuplot_path, "also write a gnuplot script");
    sweep->add_flag("--force", force, "overwrite existing output files");

    std::string target_text;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    auto* verify = app.add_subcommand("verify", "randomized falsification run");
    verify->add_option("--target", target_text, "theorem1 | theorem2 | lemma1 | lemma2 | gmin")
        ->required();
    verify->add_option("--trials", trials, "number of trials (default 10000)");
    verify->add_option("--seed", seed, "master seed (default 0)");
    verify->add_option("--jobs", jobs, "worker threads (default 1)");

    auto* presets = app.add_subcommand("presets", "list built-in channels and bases");

    std::vector<const char*> argv;
    argv.push_back("qchan");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    try {
        if (coherence->parsed()) {
            const KrausChannel channel = parse_channel_spec(channel_spec);
            const QubitBasis basis = parse_basis_spec(basis1_spec);
            const Measure measure = parse_measure(measure_text);
            const CoherenceValue value = measure == Measure::RelativeEntropy
                                             ? rel_entropy_coherence(channel, basis)
                                             : l1_coherence(channel, basis);
            out << coherence_to_json(value) << "\n";
            return exit_ok;
        }
        if (bound->parsed()) {
            const KrausChannel channel = parse_channel_spec(channel_spec);
            const QubitBasis b1 = parse_basis_spec(basis1_spec);
            const QubitBasis b2 = parse_basis_spec(basis2_spec);
            const UncertaintyReport report =
                check_relation(channel, b1, b2, parse_measure(measure_text), c_max_override);
            out << report_to_json(report) << "\n";
            return exit_ok;
        }
        if (sweep->parsed()) {
            std::string preset = channel_spec;
            if (preset.rfind("preset=", 0) == 0) preset = preset.substr(7);
            if (preset.find(',') != std::string::npos || preset.find('{') != std::string::npos) {
                throw DomainError("sweep expects a preset template, e.g. --channel preset=bit_flip");
            }
            SweepSpec spec{preset,
                           param_name,
                           start,
                           stop,
                           step,
                           parse_basis_spec(basis1_spec),
                           parse_basis_spec(basis2_spec),
                           parse_measure(measure_text),
                           c_max_override};
            std::ostringstream csv;
            run_sweep(spec, csv);
            write_text_file(out_path, csv.str(), force);
            if (!gnuplot_path.empty()) {
                write_text_file(gnuplot_path, gnuplot_script(out_path), force);
            }
            return exit_ok;
        }
        if (verify->parsed()) {
            return cmd_verify(target_text, trials, seed, jobs, out);
        }
        if (presets->parsed()) {
            return cmd_presets(out);
        }
    } catch (const TheoremScopeError& e) {
        err << "error: " << e.what() << "\n";
        return exit_scope;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
    err << "error: no command given\n";
    return exit_parse;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace qchan::cli
