#pragma once

#include <iosfwd>
#include <string>

namespace typeec::cli {

struct Options {
  std::string lambda = "0";
  int n = 2;
  int i = 0;
  std::string point;
  bool json = false;
  bool strict = false;
};

enum ExitCode { kOk = 0, kFailure = 1, kInputError = 2 };

/// Runs one of curve, torsion, loci, pair, potential, classify,
/// verify-tables. Input errors are reported on `err` with exit code 2.
int run(const std::string& subcommand, const Options& options, std::ostream& out, std::ostream& err);

}  // namespace typeec::cli
