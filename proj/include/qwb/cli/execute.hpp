#pragma once

#include "qwb/cli/config.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qwb::cli {

// `# qwb <version>` followed by one `# key=value` line per resolved setting.
std::string header_comment(const RunConfig& config);

// Writes `contents` to a sibling temporary file and renames it over `path`.
// Throws IoError.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

// Loads the phase column of a spectrum CSV (`index,re,im,phase`), skipping
// `#` comment lines and the column header. Returned phases are sorted.
std::vector<double> read_spectrum_csv(const std::filesystem::path& path);

// Runs the configured subcommand and returns the paths it wrote. Status
// lines go to `out`. Throws ConfigError, IoError, NumericalError and the
// standard argument errors of the library.
std::vector<std::filesystem::path> execute(const RunConfig& config, std::ostream& out);

// Full tool entry point: parse, execute and map failures to exit codes
// (0 ok, 2 configuration, 3 numerical, 4 I/O).
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwb::cli
