#pragma once

#include <string>
#include <vector>

namespace gt {

struct Violation {
  std::string context;   // vertex / edge / pair identification
  std::string expected;  // exact value, serialized
  std::string actual;
};

struct ConditionReport {
  std::string condition;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void add(std::string context, std::string expected, std::string actual) {
    violations.push_back({std::move(context), std::move(expected), std::move(actual)});
  }
};

}  // namespace gt
