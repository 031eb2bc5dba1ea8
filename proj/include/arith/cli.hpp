#pragma once

#include <iosfwd>

namespace arith::cli {

// Exit statuses shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kPrecondition = 2,
  kResourceOrInconclusive = 3,
  kDisagreement = 4,
};

/// Entry point behind the `arithstruct` binary; results go to `out`,
/// warnings and errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arith::cli
