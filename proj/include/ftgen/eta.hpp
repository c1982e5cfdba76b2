#pragma once

#include "ftgen/term.hpp"

namespace ftgen {

// Removes eta redexes bottom-up: \v -> u v becomes u whenever v is not free
// in u. The result has no redex left, so the pass is idempotent.
TermPtr eta_reduce(const TermPtr& t);

}  // namespace ftgen
