#pragma once

#include <string>
#include <vector>

namespace curtains {

struct ValidationIssue {
  std::string subject;  // offending id or location, may be empty
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

// Report-style result: empty iff the checked value is valid.
class ValidationReport {
 public:
  void add(std::string subject, std::string message) {
    issues_.push_back({std::move(subject), std::move(message)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& issue : other.issues_) {
      issues_.push_back({prefix + issue.subject, issue.message});
    }
  }

  bool ok() const { return issues_.empty(); }
  const std::vector<ValidationIssue>& issues() const { return issues_; }

  std::string to_string() const {
    std::string out;
    for (const auto& issue : issues_) {
      if (!issue.subject.empty()) {
        out += issue.subject + ": ";
      }
      out += issue.message + "\n";
    }
    return out;
  }

 private:
  std::vector<ValidationIssue> issues_;
};

}  // namespace curtains
