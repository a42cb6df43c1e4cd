#ifndef PYBX_REPORT_HPP
#define PYBX_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pybx/matrix.hpp"

namespace pybx {

/// One failed identity instance: which identity, at which basis indices, and
/// the exact residual (vectors and flattened matrices/tensors alike).
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vec residual;
};

/// Outcome of a checking operation.  At most `kMaxStored` violations are kept
/// verbatim; `total_violations` always counts every failure.  `facts` carries
/// named evidence lines (flags, ranks, agreement bits) in insertion order so
/// report rendering is deterministic.
struct Report {
  static constexpr std::size_t kMaxStored = 32;

  std::string title;
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  std::vector<std::pair<std::string, std::string>> facts;

  explicit Report(std::string t = "") : title(std::move(t)) {}

  bool passed() const { return total_violations == 0; }

  void add_violation(std::string identity, std::vector<std::size_t> indices,
                     Vec residual) {
    ++total_violations;
    if (violations.size() < kMaxStored)
      violations.push_back({std::move(identity), std::move(indices), std::move(residual)});
  }

  void fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
  }
  // Without this overload a literal value would take the bool path.
  void fact(std::string key, const char* value) {
    facts.emplace_back(std::move(key), std::string(value));
  }
  void fact(std::string key, bool value) {
    facts.emplace_back(std::move(key), value ? "true" : "false");
  }

  /// Folds a sub-check into this report, prefixing its identities and facts.
  void absorb(const Report& sub, const std::string& prefix) {
    for (const auto& v : sub.violations) {
      if (violations.size() < kMaxStored)
        violations.push_back({prefix + "." + v.identity, v.indices, v.residual});
    }
    total_violations += sub.total_violations;
    for (const auto& f : sub.facts) facts.emplace_back(prefix + "." + f.first, f.second);
  }
};

inline Vec flatten(const Matrix& m) {
  Vec r;
  r.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
  return r;
}

}  // namespace pybx

#endif
