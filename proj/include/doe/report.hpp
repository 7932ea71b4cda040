#pragma once

#include <string>
#include <vector>

namespace doe {

/// One nonzero residual found by a check.
struct ReportEntry {
  std::string check;      // "hom", "derivation", "R3.1".."R3.6", "overlap"
  std::string generator;  // "x", or "x,z" for pair checks
  std::string residual;   // canonical rendering

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ValidationReport {
  enum class Status { Valid, Invalid, Malformed };

  Status status = Status::Valid;
  std::size_t checks = 0;
  std::vector<ReportEntry> failures;
  std::string message;  // diagnostics for Malformed

  void record(std::string check, std::string generator, bool zero, std::string residual) {
    ++checks;
    if (zero) return;
    failures.push_back({std::move(check), std::move(generator), std::move(residual)});
    if (status == Status::Valid) status = Status::Invalid;
  }

  void merge(const ValidationReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    if (other.status == Status::Malformed) {
      status = Status::Malformed;
      message = other.message;
    } else if (other.status == Status::Invalid && status == Status::Valid) {
      status = Status::Invalid;
    }
  }

  bool valid() const { return status == Status::Valid; }

  static ValidationReport malformed(std::string msg) {
    ValidationReport r;
    r.status = Status::Malformed;
    r.message = std::move(msg);
    return r;
  }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

}  // namespace doe
