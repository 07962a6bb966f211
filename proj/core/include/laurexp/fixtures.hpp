#pragma once

#include <string>
#include <vector>

#include "laurexp/report.hpp"

namespace laurexp {

struct Fixture {
  std::string name;
  std::string text;  // spec file contents
};

/// Bundled problems: ex1, ex2, ex3, ex4, thue-morse, mahler.
const std::vector<Fixture>& fixtures();
/// Throws SpecError for an unknown name.
const Fixture& fixture(const std::string& name);

struct ReproductionCheck {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct Reproduction {
  Report report;
  std::vector<ReproductionCheck> checks;
  std::vector<std::string> notes;

  bool ok() const;
};

/// Runs a bundled fixture and compares against the expected values.
Reproduction reproduce(const std::string& name);
std::string to_text(const Reproduction& r);

}  // namespace laurexp
