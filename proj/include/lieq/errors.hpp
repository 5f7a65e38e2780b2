#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lieq {

// Bad input: invalid type/rank, unsupported representation, violated precondition.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A verified identity failed; carries a description of the counterexample.
struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

// Accumulates pass/fail results of a verification suite.
struct CheckReport {
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  bool check(bool pass, const std::string& what) {
    ++checks;
    if (!pass) failures.push_back(what);
    return pass;
  }
};

}  // namespace lieq
