#pragma once

#include <string>
#include <vector>

namespace unruh {

struct VerifyReport {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one entry per failed check

  void expect(bool ok, const std::string& what);
};

// Runs every invariant suite (basis plumbing, state constructors, oracle vs
// closed-form reduction, eigensolver/negativity contracts, curve analysis)
// with a fixed RNG seed.  Intended for the CLI `verify` command; a correct
// build reports zero failures.
VerifyReport run_verification();

}  // namespace unruh
