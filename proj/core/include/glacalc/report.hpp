#ifndef GLACALC_REPORT_HPP
#define GLACALC_REPORT_HPP

#include <string>
#include <vector>

namespace glacalc {

/// One named pass/fail check with an optional printable witness
/// (offending indices, a leftover value, a counterexample element).
struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<CheckRecord> checks;

  [[nodiscard]] bool overall() const {
    for (const CheckRecord& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace glacalc

#endif
