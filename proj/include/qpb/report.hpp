#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qpb {

using ReportValue = std::variant<long long, bool, std::string>;

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // empty on pass
  std::vector<std::pair<std::string, ReportValue>> data;

  Check& with(std::string key, ReportValue value) {
    data.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const ReportValue* value(const std::string& key) const;
};

/// Ordered list of named pass/fail checks. Deterministic for identical inputs.
class Report {
 public:
  Check& add(std::string name, bool passed, std::string witness = {});
  void append(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const Check* find(const std::string& name) const;
  const Check& at(const std::string& name) const;
  const Check* first_failure() const;

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }

 private:
  std::vector<Check> checks_;
};

}  // namespace qpb
