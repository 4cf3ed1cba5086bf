#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace cyclo {

enum class Status { pass, flagged, fail };

std::string to_string(Status s);

struct Mismatch {
  std::string where;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity check, possibly composed of named sub-checks.
/// The status of a report is the worst of its own status and its children's.
class IdentityReport {
 public:
  IdentityReport() = default;
  explicit IdentityReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  Status status() const;
  bool passed() const { return status() != Status::fail; }

  void record_mismatch(std::string where, std::string lhs, std::string rhs);
  /// A known discrepancy that does not count as a failure.
  void add_flag(std::string text);
  void add_note(std::string text);
  void add_child(IdentityReport child);
  /// Stored payload shown in JSON output (both sides of an identity, etc.).
  void set_detail(const std::string& key, nlohmann::json value) { details_[key] = std::move(value); }

  const std::vector<Mismatch>& mismatches() const { return mismatches_; }
  std::size_t mismatch_count() const { return mismatch_count_; }
  const std::vector<std::string>& flags() const { return flags_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<IdentityReport>& children() const { return children_; }
  const nlohmann::json& details() const { return details_; }

  /// Flags of this report and all descendants, prefixed with the report path.
  std::vector<std::string> all_flags() const;
  /// First mismatch in depth-first order, if any.
  const Mismatch* first_mismatch() const;

  nlohmann::json to_json() const;
  /// Indented plain-text rendering.
  std::string describe(int indent = 0) const;

  /// Compares two values with operator== and records a mismatch rendered through to_text.
  template <class T, class Render>
  bool expect_equal(const std::string& where, const T& lhs, const T& rhs, Render&& to_text) {
    if (lhs == rhs) return true;
    record_mismatch(where, to_text(lhs), to_text(rhs));
    return false;
  }

 private:
  static constexpr std::size_t kKeptMismatches = 5;

  std::string name_;
  bool failed_ = false;
  std::size_t mismatch_count_ = 0;
  std::vector<Mismatch> mismatches_;
  std::vector<std::string> flags_;
  std::vector<std::string> notes_;
  std::vector<IdentityReport> children_;
  nlohmann::json details_ = nlohmann::json::object();
};

}  // namespace cyclo
