#include "qplab/config.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "qplab/errors.hpp"

namespace qplab::cli {

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    Config cfg;
    try {
        const nlohmann::json j = nlohmann::json::parse(in);
        cfg.height_iters = j.value("height_iters", cfg.height_iters);
        cfg.height_tol = j.value("height_tol", cfg.height_tol);
        cfg.scan_cap = j.value("scan_cap", cfg.scan_cap);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed config file '" + path + "': " + e.what());
    }
    return cfg;
}

Config load_config() {
    const char* path = std::getenv("QPLAB_CONFIG");
    if (path == nullptr || *path == '\0') return {};
    return load_config_file(path);
}

}  // namespace qplab::cli
