#pragma once

#include <string>

namespace qplab::cli {

// Defaults for the command-line tools; overridable by flags. When the
// QPLAB_CONFIG environment variable names a JSON file, its values replace
// these defaults.
struct Config {
    int height_iters = 12;
    double height_tol = 1e-6;
    long scan_cap = 1'000'000;
};

// Reads QPLAB_CONFIG if set; throws ParseError on unreadable or malformed
// files.
Config load_config();

Config load_config_file(const std::string& path);

}  // namespace qplab::cli
