#pragma once

#include <iosfwd>

namespace strangeroots {

// Cross-check suites: every law the operations promise, checked against
// independent recomputation. quick keeps each suite in a few seconds; full
// runs the documented bounds (seeds to 1e6, boards to 1e5, and the complete
// unique-root scan to 40000).
enum class VerifyLevel { quick, full };

// Streams one [PASS]/[FAIL] line per suite plus explanatory notes; returns
// true when every suite passed.
bool run_verify(VerifyLevel level, std::ostream& report);

}  // namespace strangeroots
