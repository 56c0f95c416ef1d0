#pragma once

#include <iosfwd>

#include "mstsens/splitfindmin.hpp"

namespace mstsens {

// Drives one split-findmin instance from a text script.  Commands, one per
// line (1-indexed elements, `c ...` comments allowed):
//   init <n>          create the structure with n elements, all keys +inf
//   dk <e> <w>        decreasekey
//   split <e>         split so that e starts a new sequence
//   fm <e>            print the minimum key of e's sequence, or `inf`
// With print_comparisons, a final `comparisons <total>` line is emitted.
// Returns 0, or 1 after printing a message to err for malformed scripts.
int run_replay(std::istream& in, std::ostream& out, std::ostream& err,
               const sf_options& opt, bool print_comparisons = false);

}  // namespace mstsens
