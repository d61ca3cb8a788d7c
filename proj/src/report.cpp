#include "mla/report.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace mla {

ValidityReport::RuleCount& ValidityReport::slot(std::string_view rule) {
  auto it = std::find_if(rules_.begin(), rules_.end(),
                         [&](const RuleCount& r) { return r.rule == rule; });
  if (it != rules_.end()) return *it;
  rules_.push_back(RuleCount{std::string(rule)});
  return rules_.back();
}

void ValidityReport::add(std::string_view rule, std::vector<Elem> witness) {
  RuleCount& r = slot(rule);
  ++r.total;
  if (r.kept < kMaxWitnesses) {
    ++r.kept;
    violations_.push_back(Violation{std::string(rule), std::move(witness)});
  }
}

void ValidityReport::merge(const ValidityReport& other) {
  // Replay retained witnesses first so the kept set matches a serial run,
  // then account for the ones `other` already dropped.
  for (const auto& v : other.violations_) add(v.rule, v.witness);
  for (const auto& r : other.rules_) {
    slot(r.rule).total += r.total - r.kept;
  }
}

std::vector<std::string> ValidityReport::rules() const {
  std::vector<std::string> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(r.rule);
  return out;
}

std::size_t ValidityReport::count(std::string_view rule) const {
  for (const auto& r : rules_)
    if (r.rule == rule) return r.total;
  return 0;
}

std::size_t ValidityReport::total() const {
  std::size_t n = 0;
  for (const auto& r : rules_) n += r.total;
  return n;
}

std::string ValidityReport::summary() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& r : rules_) {
    auto it = std::find_if(violations_.begin(), violations_.end(),
                           [&](const Violation& v) { return v.rule == r.rule; });
    if (!out.empty()) out += "; ";
    out += fmt::format("{} x{} (first witness {})", r.rule, r.total,
                       it == violations_.end() ? std::string("-")
                                               : fmt::format("{}", it->witness));
  }
  return out;
}

}  // namespace mla
