#include <charconv>
#include <cstdlib>
#include <iostream>
#include <system_error>

#include "qchan/cli.hpp"

namespace qchan::cli {

namespace {

std::string format_double(double value) {
    char buffer[40];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 12);
    return std::string(buffer, result.ptr);
}

}  // namespace

bool debug_logging() {
    const char* level = std::getenv("QCHAN_LOG");
    return level != nullptr && std::string_view(level) == "debug";
}

void log_debug(const std::string& message) {
    if (debug_logging()) std::cerr << "[qchan] " << message << "\n";
}

std::vector<double> sweep_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw DomainError("sweep: step must be positive");
    if (!(start <= stop)) throw DomainError("sweep: start must not exceed stop");
    std::vector<double> grid;
    const double slack = step * 1e-6;
    for (std::size_t i = 0;; ++i) {
        const double value = start + static_cast<double>(i) * step;
        if (value > stop + slack) break;
        grid.push_back(std::min(value, stop));
    }
    return grid;
}

KrausChannel instantiate_preset(const std::string& preset, const std::string& parameter,
                                double value) {
    if (preset == "bit_flip" && parameter == "p") return KrausChannel::bit_flip(value);
    if (preset == "phase_damping" && parameter == "lambda") return KrausChannel::phase_damping(value);
    if (preset == "rotation" && parameter == "alpha") return KrausChannel::rotation(value);
    throw DomainError("sweep: preset '" + preset + "' has no parameter '" + parameter + "'");
}

void run_sweep(const SweepSpec& spec, std::ostream& csv_out) {
    const std::vector<double> grid = sweep_grid(spec.start, spec.stop, spec.step);
    // Scope rule surfaces before any output is produced.
    const KrausChannel probe = instantiate_preset(spec.preset, spec.parameter, grid.front());
    if (spec.measure == Measure::L1Norm && !probe.unitary()) {
        throw TheoremScopeError("sweep: the l1 lower bound holds for unitary channels only");
    }

    csv_out << "param,sum_coherence,lower_bound,slack,saturated\n";
    for (double value : grid) {
        const KrausChannel channel = instantiate_preset(spec.preset, spec.parameter, value);
        const UncertaintyReport report =
            check_relation(channel, spec.basis1, spec.basis2, spec.measure, spec.c_override);
        csv_out << format_double(value) << ',' << format_double(report.sum_coherence) << ','
                << format_double(report.lower_bound) << ',' << format_double(report.slack) << ','
                << (report.saturated ? "true" : "false") << '\n';
    }
    log_debug("sweep: " + std::to_string(grid.size()) + " rows (" + spec.preset + "/" +
              spec.parameter + ")");
}

}  // namespace qchan::cli
