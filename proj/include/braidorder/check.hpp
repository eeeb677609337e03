// Property-check reports shared by the order harness and the braid module.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidorder {

struct Violation {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::int64_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void note(std::string inputs, std::string expected, std::string got) {
    violations.push_back({std::move(inputs), std::move(expected), std::move(got)});
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

// {"checked":N,"violations":[{"inputs":...,"expected":...,"got":...}]}
std::string to_json_text(const CheckReport& r, int indent = -1);

}  // namespace braidorder
