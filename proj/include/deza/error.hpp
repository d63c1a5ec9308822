#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace deza {

/// A mathematical precondition on an operation's input does not hold
/// (wrong parameter family, missing certificate, out-of-range size, ...).
/// The CLI maps this to exit code 2.
struct gate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A structural property that the decomposition theory guarantees failed to
/// hold on the given input.  Carries the names of all failed checks so a
/// caller sees every violation, not just the first.
struct lemma_error : gate_error {
  std::vector<std::string> failed;

  explicit lemma_error(std::vector<std::string> names)
      : gate_error("lemma checks failed: " + join(names)), failed(std::move(names)) {}

 private:
  static std::string join(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) {
      if (!s.empty()) s += ", ";
      s += n;
    }
    return s;
  }
};

/// An internal consistency assertion failed; indicates a bug, not bad input.
struct check_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace deza
