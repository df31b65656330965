#ifndef HITCHINLAB_CONFIG_HPP
#define HITCHINLAB_CONFIG_HPP

#include <string>

namespace hitchinlab::cli {

struct RunConfig {
    bool exact_mode = true;
    double identity_tol = 1e-10; // exact-identity style float checks
    double drift_tol = 1e-6;     // integrator conservation checks
    int series_order = 16;
    double integrator_step = 1e-3;
    std::string output_csv; // empty = per-command default
    int parallelism = 0;    // 0 keeps the OpenMP default

    void validate() const; // throws std::invalid_argument
};

// JSON or TOML decided by the file extension. The TOML reader covers the flat
// `key = value` subset used for run configuration.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

// HITCHINLAB_PRECISION overrides identity_tol
void apply_environment(RunConfig& config);

} // namespace hitchinlab::cli

#endif
