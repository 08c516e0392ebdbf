#pragma once

#include <string>
#include <vector>

#include "fstirling/fspec.hpp"
#include "fstirling/parallel.hpp"
#include "fstirling/report.hpp"

namespace fstirling {

struct VerifyConfig
{
    FtSetting setting;
    long max_n = 10;
    Exec exec = Exec::parallel;
    /// Lifts the per-suite cost caps so every sweep runs to max_n.
    bool soak = false;
};

/// Suite names in execution order; `all` runs every one of them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one named suite and returns its merged report (identity = suite name).
/// Throws std::invalid_argument for an unknown name and std::length_error
/// when max_n exceeds the subset-oracle cap for s1-oracle.
Report run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace fstirling
