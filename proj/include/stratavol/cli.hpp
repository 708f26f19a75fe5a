#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stratavol::cli {

// Comma-separated positive integers; the empty string is the empty profile.
// DomainError on anything else.
std::vector<int> parse_parts(const std::string& text);

// Full command dispatch. Exit status 0 on success, 1 for domain or usage
// errors (including failing check suites), 2 for invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

} // namespace stratavol::cli
