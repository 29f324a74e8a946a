#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclotype::cli {

enum ExitCode : int { ok = 0, domain_error = 1, verification_failure = 2, usage_error = 3 };

/// Runs one command; args exclude the program name. JSON/TSV/DOT goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text printed by --print-numbering.
std::string numbering_text();

}  // namespace cyclotype::cli
