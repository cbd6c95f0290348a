#pragma once

// Batch job runner behind the `schurforge` executable and the Python module.

#include <cstdint>
#include <string>
#include <vector>

#include "schurforge/brauer.hpp"

namespace schurforge {

inline constexpr const char* kSchemaTag = "schur-forge/1";

enum ExitCode : int {
    kExitComputed = 0,
    kExitInternal = 1,
    kExitInvalidInput = 2,
    kExitBudgetExhausted = 3,
};

struct JobOptions {
    std::uint64_t seed = 0;
    SearchBounds bounds;
    /// `schur` reads a quiver representation instead of a matrix one.
    bool quiver = false;
};

struct JobResult {
    int exit_code = kExitComputed;
    std::string output;       ///< report for stdout, empty on failure
    std::string diagnostics;  ///< JSON error document for stderr, empty on success
};

const std::vector<std::string>& commands();

std::string version();

/// Never throws: every failure is encoded in the result.
JobResult run_job(const std::string& command, const std::string& input, const JobOptions& options = {});

/// Structured error document, as written to the diagnostic stream.
std::string error_document(const std::string& name, const std::string& message, const std::string& pointer = "");

}  // namespace schurforge
