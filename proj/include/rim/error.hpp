#pragma once
#include <stdexcept>
#include <string>

namespace rim {

// Error taxonomy shared by the whole library.  `kind` is a stable short tag
// used by the CLI to pick exit codes:
//   "usage"/"domain"/"alphabet"/"invalid-table"/"invalid-circuit" -> exit 2
//   "resource" -> exit 3
struct rim_error : std::runtime_error {
    std::string kind;
    rim_error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

inline rim_error usage_error(const std::string& m) { return rim_error("usage", m); }
inline rim_error domain_error(const std::string& m) { return rim_error("domain", m); }
inline rim_error alphabet_error(const std::string& m) { return rim_error("alphabet", m); }
inline rim_error table_error(const std::string& m) { return rim_error("invalid-table", m); }
inline rim_error circuit_error(const std::string& m) { return rim_error("invalid-circuit", m); }
inline rim_error resource_error(const std::string& m) { return rim_error("resource", m); }

} // namespace rim
