#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace monogenic {

// Pass/fail record per checked identity, in insertion order.
class VerificationReport {
 public:
  struct Entry {
    std::string identity;
    unsigned m = 0;
    std::optional<unsigned> k;
    std::optional<unsigned> n;
    bool pass = false;
    std::string witness;  // first differing term when the check fails
    std::string detail;   // computed constants and other notes
  };

  void add(Entry e) { entries_.push_back(std::move(e)); }

  void append(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool all_pass() const {
    for (const auto& e : entries_)
      if (!e.pass) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.pass ? 0 : 1;
    return n;
  }

  // First entry with the given identity name (and n, when given).
  const Entry* find(const std::string& identity, std::optional<unsigned> n = std::nullopt) const {
    for (const auto& e : entries_)
      if (e.identity == identity && (!n || e.n == n)) return &e;
    return nullptr;
  }

 private:
  std::vector<Entry> entries_;
};

inline std::string format_entry(const VerificationReport::Entry& e) {
  std::ostringstream os;
  os << (e.pass ? "PASS " : "FAIL ") << e.identity << " m=" << e.m;
  if (e.k) os << " k=" << *e.k;
  if (e.n) os << " n=" << *e.n;
  if (!e.detail.empty()) os << " [" << e.detail << "]";
  if (!e.witness.empty()) os << " witness: " << e.witness;
  return os.str();
}

}  // namespace monogenic
