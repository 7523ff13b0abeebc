#include "qpb/report.hpp"

#include <algorithm>

#include "qpb/error.hpp"

namespace qpb {

const ReportValue* Check::value(const std::string& key) const {
  for (const auto& [k, v] : data)
    if (k == key) return &v;
  return nullptr;
}

Check& Report::add(std::string name, bool passed, std::string witness) {
  checks_.push_back(Check{std::move(name), passed, passed ? std::string() : std::move(witness), {}});
  return checks_.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check& Report::at(const std::string& name) const {
  if (const Check* c = find(name)) return *c;
  throw StructuralError("report has no check named " + name);
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

}  // namespace qpb
