#pragma once

// Command-line pipeline. `run` executes one job and returns the process exit
// code: 0 on success or PASS, 2 when a certificate reports FAIL, 1 on input error.

#include <maxsurf/complex_core.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace maxsurf
{

enum class Command
{
    Generate,
    Conjugate,
    DualizeCurve,
    DualizeGraph,
    VerifyKrust,
    Identities,
    Export
};

const char *to_string(Command c) noexcept;
std::optional<Command> parse_command(const std::string &name);

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

struct JobConfig
{
    Command command = Command::VerifyKrust;
    /// Catalog name; ignored when `datum_file` is set.
    std::string datum = "plane-r0.9";
    std::filesystem::path datum_file;
    std::filesystem::path input;
    std::filesystem::path out_dir = ".";
    std::string direction = "minimal-to-maximal";
    double tol = kDefaultTol;
    int mesh_n = 64;
    double grid_h = 0.02;
    double curl_tol = 0.05;
    std::uint64_t seed = 0;
    int samples = 50;
    int pairs = 20;
    bool json_errors = false;
};

/// Throws InputError on a non-positive knob.
void validate(const JobConfig &config);

/// Overlays the keys of a JSON config file onto `config`.
void apply_config_file(const std::filesystem::path &path, JobConfig &config);

/// Executes the job. The JSON report goes to `out` (and to
/// `<out_dir>/report.json`); diagnostics go to `err`.
int run(const JobConfig &config, std::ostream &out, std::ostream &err);

/// Argument parsing followed by `run`.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace maxsurf
