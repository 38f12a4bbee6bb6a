#pragma once

#include <cstdint>
#include <iosfwd>

namespace gdeutsch::cli {

enum class CheckLevel { Fast, Full };

/// Runs every invariant suite at the given level, printing one verdict line
/// per suite. Returns true iff all pass.
bool run_selfcheck(CheckLevel level, std::uint64_t cap, std::ostream& out);

}  // namespace gdeutsch::cli
