#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ballq::cli {

/// Runs one command line (the arguments after the program name), writing
/// results to `out` and diagnostics to `err`.
///
/// Verbs: list-groups, build, combinatorics, admissible, check, chi,
/// presentation, report, validate.  Exit status: 0 on success, 1 when a
/// validation finds mismatches or an assignment fails the stratum
/// conditions, 2 on usage errors (including unknown groups and malformed
/// weight vectors).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ballq::cli
