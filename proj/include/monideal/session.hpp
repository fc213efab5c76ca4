#pragma once

#include <iosfwd>
#include <string>

namespace monideal {

/// Line-oriented script runner: one `ring` declaration, `let` bindings of
/// ideals to names, and the ideal commands of the CLI in positional form.
/// Lines starting with '#' and blank lines are skipped.  Text mode prints
/// one result line per command; JSON mode emits a single array.
///
/// Returns 0, or 2 when some `check` command came back not-applicable.
/// Malformed scripts throw (ParseError / InvalidArgument).
int run_session_script(std::istream& in, std::ostream& out, bool json_mode);

}  // namespace monideal
