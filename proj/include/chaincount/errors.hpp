#pragma once

#include <stdexcept>
#include <string>

namespace chaincount {

// Invalid user-facing input: malformed cycle strings, bad group specs,
// out-of-range family parameters. CLI exit code 2.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeded a configured cap or budget (closure cap, lattice
// cap, oracle visit budget, inclusion-exclusion subset bound). CLI exit
// code 4. Caps fail loudly; nothing is ever truncated.
struct cap_error : std::runtime_error {
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Two counting methods that must agree did not. Always a bug, never a
// data condition. CLI exit code 3.
struct disagreement_error : std::runtime_error {
  explicit disagreement_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace chaincount
