#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmd {

// Dispatch one command line (argv without the program name). Reports go to
// out, diagnostics to err. Returns the process exit code: 0 on success, 1 on
// input or usage errors, 2 when a mathematical cross-check found a
// counterexample (always an implementation bug, never bad data).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exit code for a caught exception: 2 for Counterexample and subclasses,
// 1 for everything else.
int exit_code_for(const std::exception& e);

} // namespace pmd
