#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qchan/bounds.hpp"

namespace qchan::cli {

// Exit-code contract shared with CI: 0 ok, 2 parse/validation failure,
// 3 theorem-scope error, 4 falsification violations.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;
inline constexpr int exit_scope = 3;
inline constexpr int exit_violation = 4;

// Bundled reference bases, addressable by name from the command line:
// computational, plus-minus, example2-golden, example3-yprime.
const std::vector<std::pair<std::string, QubitBasis>>& named_bases();
std::optional<QubitBasis> find_named_basis(std::string_view name);

// Channel spec: JSON (see json_io) or compact "preset=name,k=v" form.
KrausChannel parse_channel_spec(const std::string& spec);
// Basis spec: a named basis or JSON.
QubitBasis parse_basis_spec(const std::string& spec);

// A parameter sweep of a preset channel template against a fixed basis pair.
struct SweepSpec {
    std::string preset;     // bit_flip | phase_damping | rotation
    std::string parameter;  // p | lambda | alpha, must match the preset
    double start;
    double stop;
    double step;  // > 0, start <= stop
    QubitBasis basis1;
    QubitBasis basis2;
    Measure measure;
    std::optional<double> c_override;
};

// Parameter grid start + k*step, k >= 0, up to stop (inclusive when stop
// lies on the lattice; values are clamped to stop against round-off).
std::vector<double> sweep_grid(double start, double stop, double step);

// Instantiate a preset template at a parameter value.
KrausChannel instantiate_preset(const std::string& preset, const std::string& parameter,
                                double value);

// Emit the sweep as CSV: `param,sum_coherence,lower_bound,slack,saturated`,
// one row per grid point, 12 significant digits, dot decimal.
void run_sweep(const SweepSpec& spec, std::ostream& csv_out);

// Entry point used by both the executable and the tests. `args` excludes the
// program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

// True when QCHAN_LOG=debug; log_debug writes a stderr line when enabled.
bool debug_logging();
void log_debug(const std::string& message);

}  // namespace qchan::cli
