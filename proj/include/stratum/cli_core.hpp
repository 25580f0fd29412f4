#pragma once

#include <optional>
#include <string>

#include "stratum/json_io.hpp"

namespace stratum {

inline constexpr const char* kVersion = "1.0.0";

// Raised for malformed requests (unknown command, missing/ill-typed fields);
// library std::invalid_argument means a domain precondition failed.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliOptions {
    std::optional<std::string> alpha_parity;  // "even" | "odd"
};

// Dispatches one request {command, params} (or bare params with the command
// given separately) and returns {command, params, version, result}.  Throws
// SchemaError / std::invalid_argument; run_batch converts those to error
// records instead.
json run(const std::string& command, const json& params, const CliOptions& opts = {});

// Entries may be {command, params} records or bare params interpreted under
// default_command.  Failures become {command, error:{type, message}} records.
json run_batch(const json& requests, const std::string& default_command,
               const CliOptions& opts = {});

}  // namespace stratum
