#include "cyclo/report.hpp"

#include <sstream>

namespace cyclo {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::flagged:
      return "flagged";
    case Status::fail:
      return "fail";
  }
  return "fail";
}

Status IdentityReport::status() const {
  Status s = failed_ ? Status::fail : (flags_.empty() ? Status::pass : Status::flagged);
  for (const auto& child : children_) {
    const Status c = child.status();
    if (static_cast<int>(c) > static_cast<int>(s)) s = c;
  }
  return s;
}

void IdentityReport::record_mismatch(std::string where, std::string lhs, std::string rhs) {
  failed_ = true;
  ++mismatch_count_;
  if (mismatches_.size() < kKeptMismatches) {
    mismatches_.push_back({std::move(where), std::move(lhs), std::move(rhs)});
  }
}

void IdentityReport::add_flag(std::string text) { flags_.push_back(std::move(text)); }

void IdentityReport::add_note(std::string text) { notes_.push_back(std::move(text)); }

void IdentityReport::add_child(IdentityReport child) { children_.push_back(std::move(child)); }

std::vector<std::string> IdentityReport::all_flags() const {
  std::vector<std::string> out;
  for (const auto& f : flags_) out.push_back(name_ + ": " + f);
  for (const auto& child : children_) {
    for (auto& f : child.all_flags()) out.push_back(name_.empty() ? f : name_ + "/" + f);
  }
  return out;
}

const Mismatch* IdentityReport::first_mismatch() const {
  if (!mismatches_.empty()) return &mismatches_.front();
  for (const auto& child : children_) {
    if (const Mismatch* m = child.first_mismatch()) return m;
  }
  return nullptr;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json out;
  out["name"] = name_;
  out["status"] = to_string(status());
  if (mismatch_count_ != 0) {
    out["mismatch_count"] = mismatch_count_;
    auto& list = out["mismatches"] = nlohmann::json::array();
    for (const auto& m : mismatches_) list.push_back({{"where", m.where}, {"lhs", m.lhs}, {"rhs", m.rhs}});
  }
  if (!flags_.empty()) out["flags"] = flags_;
  if (!notes_.empty()) out["notes"] = notes_;
  if (!details_.empty()) out["details"] = details_;
  if (!children_.empty()) {
    auto& list = out["checks"] = nlohmann::json::array();
    for (const auto& child : children_) list.push_back(child.to_json());
  }
  return out;
}

std::string IdentityReport::describe(int indent) const {
  std::ostringstream out;
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << '[' << to_string(status()) << "] " << name_ << '\n';
  for (const auto& m : mismatches_) {
    out << pad << "    mismatch at " << m.where << ": " << m.lhs << " != " << m.rhs << '\n';
  }
  if (mismatch_count_ > mismatches_.size()) {
    out << pad << "    (" << mismatch_count_ - mismatches_.size() << " more mismatches)\n";
  }
  for (const auto& f : flags_) out << pad << "    flag: " << f << '\n';
  for (const auto& n : notes_) out << pad << "    note: " << n << '\n';
  for (const auto& child : children_) out << child.describe(indent + 1);
  return out.str();
}

}  // namespace cyclo
