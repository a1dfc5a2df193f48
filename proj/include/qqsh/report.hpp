#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qqsh {

struct Violation {
  std::string check;
  std::string witness;
};

/// Outcome of a verification suite: how many instances were checked and
/// which ones failed, with a human-readable witness for each failure.
class Report {
 public:
  explicit Report(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  void pass(std::size_t n = 1) { checked_ += n; }
  void fail(std::string check, std::string witness) {
    ++checked_;
    violations_.push_back({std::move(check), std::move(witness)});
  }
  /// Counts one check; records a violation when `ok` is false.
  template <typename WitnessFn>
  bool expect(bool ok, const std::string& check, WitnessFn&& witness) {
    if (ok) {
      pass();
    } else {
      fail(check, witness());
    }
    return ok;
  }
  void skip(std::size_t n = 1) { skipped_ += n; }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  void merge(const Report& other) {
    checked_ += other.checked_;
    skipped_ += other.skipped_;
    for (const auto& v : other.violations_)
      violations_.push_back({other.name_.empty() ? v.check : other.name_ + ": " + v.check, v.witness});
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  bool ok() const noexcept { return violations_.empty(); }
  std::size_t checked() const noexcept { return checked_; }
  std::size_t skipped() const noexcept { return skipped_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  std::string summary(std::size_t max_witnesses = 5) const {
    std::ostringstream os;
    os << (name_.empty() ? "report" : name_) << ": " << (ok() ? "ok" : "FAILED") << " ("
       << checked_ << " checks, " << violations_.size() << " violations";
    if (skipped_) os << ", " << skipped_ << " skipped";
    os << ")";
    for (std::size_t k = 0; k < violations_.size() && k < max_witnesses; ++k)
      os << "\n  " << violations_[k].check << ": " << violations_[k].witness;
    if (violations_.size() > max_witnesses)
      os << "\n  ... " << violations_.size() - max_witnesses << " more";
    return os.str();
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t skipped_ = 0;
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

}  // namespace qqsh
