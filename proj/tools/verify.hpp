#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/oracle/cutoff.hpp"

namespace nm::cli {

struct SuiteOptions {
    /// Overrides the suite's default tolerance when set.
    std::optional<double> tol;
    double sigma = 200.0;
    oracle::Cutoff cutoff;
    std::uint64_t seed = 20240601;
};

struct CaseResult {
    std::string name;
    Complex numeric;
    Complex predicted;
    double error = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    double tolerance = 0.0;
    std::vector<CaseResult> cases;

    bool pass() const;
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace nm::cli
