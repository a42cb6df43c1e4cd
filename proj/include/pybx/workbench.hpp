#ifndef PYBX_WORKBENCH_HPP
#define PYBX_WORKBENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "pybx/diff_asi.hpp"

namespace pybx {

/// In-memory form of a workbench problem file.  Which sections are present
/// decides what the commands can do with it; absent tensors stay zero.
/// A spec is in differential mode as soon as it carries a phi or psi family,
/// otherwise commands read it as a Poisson-side problem.
struct WorkbenchSpec {
  std::string field = "rational";
  std::size_t dim = 0;
  std::vector<std::string> basis;
  bool commutative = false;
  bool cocommutative = false;
  std::optional<Scalar> weight;

  bool has_bracket = false;
  bool has_product = false;
  bool has_delta = false;
  bool has_Delta = false;
  bool has_r = false;
  bool has_p = false;
  bool has_b = false;
  Tensor3 bracket, product, delta, Delta;
  Matrix r, p, b;
  std::vector<Matrix> phi, psi;

  /// Notes collected while parsing (duplicate entries that were summed).
  std::vector<std::string> warnings;

  bool differential_mode() const { return !phi.empty() || !psi.empty(); }
};

/// Parses the line-oriented text format.  Throws Error with a located
/// message (line number plus reason) on malformed input; duplicate entries
/// are summed and recorded in warnings rather than rejected.
WorkbenchSpec load_spec_text(const std::string& text);

/// Canonical emission: fixed section order, ascending indices, nonzero
/// entries only.  serialize -> parse -> serialize is a fixed point.
std::string serialize_spec(const WorkbenchSpec& s);

/// One node of the report tree.  Keys are fixed identifiers; values never
/// contain newlines, so the machine rendering is a stable indented list.
struct ReportNode {
  std::string key;
  std::string value;
  std::vector<ReportNode> children;

  ReportNode& add(std::string k, std::string v = std::string()) {
    children.push_back(ReportNode{std::move(k), std::move(v), {}});
    return children.back();
  }
};

struct ReportDocument {
  ReportNode root{"report", std::string(), {}};
  bool pass = true;
  /// Canonical spec text produced by the emitting commands, empty otherwise.
  std::string emitted;
  /// Wall time, shown by the human rendering only.
  double elapsed_ms = 0.0;
};

struct CommandOptions {
  std::string direction;         // convert: rb2fact, fact2rb, tilde, tau
  std::optional<Scalar> weight;  // overrides the weight stored in the spec
  std::string input_digest;      // hex digest of the raw input text
};

/// Dispatches one of: check, classify, double, convert, induce, report.
/// Throws Error for missing sections or module-level failures; the caller
/// turns exceptions into failing report documents.
ReportDocument run_command(const std::string& cmd, const WorkbenchSpec& spec,
                           const CommandOptions& opt);

/// Stable key-value tree, two-space indentation, no timing data.
std::string render_machine(const ReportDocument& doc);

/// Readable summary with the same verdicts plus timing.
std::string render_human(const ReportDocument& doc);

/// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace pybx

#endif
