#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zerosync {

/// Runs one toolkit command (gen, rt, check, tail, verify, search, dot).
/// `in` backs the "-" input file, `out` receives results, `err` receives
/// diagnostics. Returns the process exit code: 0 on success, 1 on analysis
/// outcomes (not synchronizing, limit exceeded, failed verification), 2 on
/// usage or input-format errors.
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace zerosync
