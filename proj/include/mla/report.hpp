#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mla {

using Elem = std::int32_t;

struct Violation {
  std::string rule;
  std::vector<Elem> witness;
};

// Collects rule violations. Every violation is counted, but only the first
// kMaxWitnesses witnesses of each rule are retained.
class ValidityReport {
 public:
  static constexpr std::size_t kMaxWitnesses = 16;

  void add(std::string_view rule, std::vector<Elem> witness);

  // Appends `other` as if its violations had been added after ours, in order.
  void merge(const ValidityReport& other);

  bool ok() const { return rules_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  // Violated rule names, in first-seen order.
  std::vector<std::string> rules() const;
  std::size_t count(std::string_view rule) const;
  std::size_t total() const;

  std::string summary() const;

 private:
  struct RuleCount {
    std::string rule;
    std::size_t total = 0;
    std::size_t kept = 0;
  };
  RuleCount& slot(std::string_view rule);

  std::vector<RuleCount> rules_;
  std::vector<Violation> violations_;
};

}  // namespace mla
