#include "pybx/workbench.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>
#include <utility>

#include "pybx/bialgebra.hpp"
#include "pybx/rota_baxter.hpp"

namespace pybx {
namespace {

constexpr std::size_t kMaxFamily = 64;

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_unsigned(const Line& l, const std::string& tok,
                           const char* what) {
  const bool digits =
      !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      });
  if (!digits)
    fail(l.number,
         std::string(what) + " must be a nonnegative integer, got '" + tok +
             "'");
  std::size_t v = 0;
  for (char c : tok) {
    if (v > 1000000) fail(l.number, std::string(what) + " is too large");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

std::size_t parse_index(const Line& l, const std::string& tok,
                        std::size_t bound, const char* what) {
  const std::size_t v = parse_unsigned(l, tok, what);
  if (v >= bound)
    throw Error(Errc::IndexOutOfRange,
                "line " + std::to_string(l.number) + ": " + what + " index " +
                    tok + " out of range (limit " + std::to_string(bound) +
                    ")");
  return v;
}

Scalar parse_value(const Line& l, const std::string& tok) {
  try {
    return Scalar::parse(tok);
  } catch (const Error& e) {
    fail(l.number, "bad rational '" + tok + "': " + e.what());
  }
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t) out << ' ';
    out << idx[t];
  }
  return out.str();
}

std::string join_vec(const Vec& v) {
  std::ostringstream out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) out << ' ';
    out << v[t].str();
  }
  return out.str();
}

ReportNode report_node(const std::string& name, const Report& rep) {
  ReportNode nd{"check", name, {}};
  nd.add("verdict", rep.passed() ? "pass" : "fail");
  if (!rep.title.empty()) nd.add("title", rep.title);
  nd.add("violations", std::to_string(rep.total_violations));
  for (const auto& f : rep.facts) nd.add("fact", f.first + " " + f.second);
  for (const Violation& v : rep.violations) {
    ReportNode& vn = nd.add("violation", v.identity);
    if (!v.indices.empty()) vn.add("indices", join_indices(v.indices));
    if (!v.residual.empty()) vn.add("residual", join_vec(v.residual));
  }
  return nd;
}

ReportNode classification_node(const Classification& cls, bool differential) {
  ReportNode nd{"classification", std::string(), {}};
  nd.add("label", rlabel_name(cls.label));
  nd.add("antisymmetric", bool_text(cls.antisymmetric));
  nd.add("rank_sym", std::to_string(cls.rank_s));
  if (differential) {
    nd.add("yang_baxter", bool_text(cls.pybe_a));
    nd.add("derivations_compatible", bool_text(cls.pybe_c));
    nd.add("sym_mult_invariant", bool_text(cls.s_l_invariant));
  } else {
    nd.add("coboundary_sym_ad", bool_text(cls.cbd_sym_ad));
    nd.add("coboundary_sym_mult", bool_text(cls.cbd_sym_l));
    nd.add("coboundary_bracket_inv", bool_text(cls.cbd_c_inv));
    nd.add("coboundary_product_inv", bool_text(cls.cbd_a_inv));
    nd.add("coboundary_mixed", bool_text(cls.cbd_mixed));
    nd.add("ybe_bracket", bool_text(cls.pybe_c));
    nd.add("ybe_product", bool_text(cls.pybe_a));
    nd.add("sym_ad_invariant", bool_text(cls.s_ad_invariant));
    nd.add("sym_mult_invariant", bool_text(cls.s_l_invariant));
  }
  nd.add("tau_quasi_agrees", bool_text(cls.tau_quasi_agrees));
  nd.add("tau_factorizable_agrees", bool_text(cls.tau_factorizable_agrees));
  return nd;
}

AlgebraSpec make_algebra(const WorkbenchSpec& s) {
  return AlgebraSpec(s.dim, s.bracket, s.product, s.basis);
}

DiffAlgebra make_diff_algebra(const WorkbenchSpec& s) {
  return DiffAlgebra{AlgebraSpec(s.dim, Tensor3(s.dim), s.product, s.basis),
                     s.phi, s.commutative};
}

DiffCoalgebra make_diff_coalgebra(const WorkbenchSpec& s) {
  return DiffCoalgebra{s.dim, s.Delta, s.psi, s.cocommutative};
}

bool tensor_cocommutative(const Tensor3& t) {
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(t.at(a, i, j) == t.at(a, j, i))) return false;
  return true;
}

void render_tree(std::ostringstream& out, const ReportNode& nd,
                 std::size_t depth) {
  out << std::string(2 * depth, ' ') << nd.key;
  if (!nd.value.empty()) out << ' ' << nd.value;
  out << '\n';
  for (const ReportNode& c : nd.children) render_tree(out, c, depth + 1);
}

}  // namespace

WorkbenchSpec load_spec_text(const std::string& text) {
  WorkbenchSpec s;
  bool saw_field = false, saw_dim = false, saw_basis = false;
  bool saw_flags = false, saw_weight = false;
  std::set<std::string> seen;

  for (const Line& l : tokenize(text)) {
    const std::string& key = l.tokens[0];
    const std::size_t args = l.tokens.size() - 1;
    auto need_dim = [&] {
      if (!saw_dim) fail(l.number, "'" + key + "' must come after 'dim'");
    };
    auto dup_note = [&](const std::string& id, const std::string& where) {
      if (!seen.insert(id).second)
        s.warnings.push_back("line " + std::to_string(l.number) +
                             ": duplicate " + where + ", values summed");
    };

    if (key == "field") {
      if (saw_field) fail(l.number, "repeated 'field'");
      if (args != 1) fail(l.number, "'field' takes one token");
      if (l.tokens[1] != "rational")
        fail(l.number,
             "unsupported field '" + l.tokens[1] + "' (only 'rational')");
      saw_field = true;
    } else if (key == "dim") {
      if (saw_dim) fail(l.number, "repeated 'dim'");
      if (args != 1) fail(l.number, "'dim' takes one token");
      s.dim = parse_unsigned(l, l.tokens[1], "dim");
      if (s.dim == 0) fail(l.number, "dim must be positive");
      if (s.dim > 64) fail(l.number, "dim larger than 64 is not supported");
      s.bracket = Tensor3(s.dim);
      s.product = Tensor3(s.dim);
      s.delta = Tensor3(s.dim);
      s.Delta = Tensor3(s.dim);
      s.r = Matrix(s.dim, s.dim);
      s.p = Matrix(s.dim, s.dim);
      s.b = Matrix(s.dim, s.dim);
      saw_dim = true;
    } else if (key == "basis") {
      if (saw_basis) fail(l.number, "repeated 'basis'");
      need_dim();
      if (args != s.dim)
        fail(l.number, "'basis' needs exactly " + std::to_string(s.dim) +
                           " names, got " + std::to_string(args));
      s.basis.assign(l.tokens.begin() + 1, l.tokens.end());
      saw_basis = true;
    } else if (key == "flags") {
      if (saw_flags) fail(l.number, "repeated 'flags'");
      for (std::size_t t = 1; t < l.tokens.size(); ++t) {
        if (l.tokens[t] == "commutative")
          s.commutative = true;
        else if (l.tokens[t] == "cocommutative")
          s.cocommutative = true;
        else
          fail(l.number, "unknown flag '" + l.tokens[t] + "'");
      }
      saw_flags = true;
    } else if (key == "weight") {
      if (saw_weight) fail(l.number, "repeated 'weight'");
      if (args != 1) fail(l.number, "'weight' takes one token");
      s.weight = parse_value(l, l.tokens[1]);
      saw_weight = true;
    } else if (key == "bracket" || key == "product" || key == "delta" ||
               key == "Delta") {
      need_dim();
      if (args != 4) fail(l.number, "'" + key + "' takes i j k value");
      const std::size_t i = parse_index(l, l.tokens[1], s.dim, "first");
      const std::size_t j = parse_index(l, l.tokens[2], s.dim, "second");
      const std::size_t k = parse_index(l, l.tokens[3], s.dim, "third");
      const Scalar v = parse_value(l, l.tokens[4]);
      dup_note(key + ":" + std::to_string(i) + ":" + std::to_string(j) + ":" +
                   std::to_string(k),
               key + " entry (" + std::to_string(i) + " " + std::to_string(j) +
                   " " + std::to_string(k) + ")");
      if (key == "bracket") {
        s.bracket.at(i, j, k) += v;
        s.has_bracket = true;
      } else if (key == "product") {
        s.product.at(i, j, k) += v;
        s.has_product = true;
      } else if (key == "delta") {
        s.delta.at(i, j, k) += v;
        s.has_delta = true;
      } else {
        s.Delta.at(i, j, k) += v;
        s.has_Delta = true;
      }
    } else if (key == "r" || key == "P" || key == "B") {
      need_dim();
      if (args != 3) fail(l.number, "'" + key + "' takes i j value");
      const std::size_t i = parse_index(l, l.tokens[1], s.dim, "row");
      const std::size_t j = parse_index(l, l.tokens[2], s.dim, "column");
      const Scalar v = parse_value(l, l.tokens[3]);
      dup_note(key + ":" + std::to_string(i) + ":" + std::to_string(j),
               key + " entry (" + std::to_string(i) + " " + std::to_string(j) +
                   ")");
      if (key == "r") {
        s.r.at(i, j) += v;
        s.has_r = true;
      } else if (key == "P") {
        s.p.at(i, j) += v;
        s.has_p = true;
      } else {
        s.b.at(i, j) += v;
        s.has_b = true;
      }
    } else if (key == "phi" || key == "psi") {
      need_dim();
      if (args != 4) fail(l.number, "'" + key + "' takes k i j value");
      const std::size_t fam = parse_index(l, l.tokens[1], kMaxFamily, "family");
      const std::size_t i = parse_index(l, l.tokens[2], s.dim, "row");
      const std::size_t j = parse_index(l, l.tokens[3], s.dim, "column");
      const Scalar v = parse_value(l, l.tokens[4]);
      std::vector<Matrix>& famv = key == "phi" ? s.phi : s.psi;
      while (famv.size() <= fam) famv.emplace_back(s.dim, s.dim);
      dup_note(key + ":" + std::to_string(fam) + ":" + std::to_string(i) + ":" +
                   std::to_string(j),
               key + " entry (" + std::to_string(fam) + " " +
                   std::to_string(i) + " " + std::to_string(j) + ")");
      famv[fam].at(i, j) += v;
    } else {
      fail(l.number, "unknown directive '" + key + "'");
    }
  }

  if (!saw_field) throw Error(Errc::ParseError, "missing 'field rational' line");
  if (!saw_dim) throw Error(Errc::ParseError, "missing 'dim' line");
  if (s.basis.empty()) s.basis = default_basis_names(s.dim);
  return s;
}

std::string serialize_spec(const WorkbenchSpec& s) {
  std::ostringstream out;
  out << "field " << s.field << "\n";
  out << "dim " << s.dim << "\n";
  out << "basis";
  for (const std::string& nm : s.basis) out << ' ' << nm;
  out << "\n";
  if (s.commutative || s.cocommutative) {
    out << "flags";
    if (s.commutative) out << " commutative";
    if (s.cocommutative) out << " cocommutative";
    out << "\n";
  }
  if (s.weight) out << "weight " << s.weight->str() << "\n";

  auto tensor = [&](const char* name, const Tensor3& t, bool has) {
    if (!has) return;
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j)
        for (std::size_t k = 0; k < s.dim; ++k)
          if (!t.at(i, j, k).is_zero())
            out << name << ' ' << i << ' ' << j << ' ' << k << ' '
                << t.at(i, j, k).str() << "\n";
  };
  auto matrix = [&](const char* name, const Matrix& m, bool has) {
    if (!has) return;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero())
          out << name << ' ' << i << ' ' << j << ' ' << m.at(i, j).str()
              << "\n";
  };
  tensor("bracket", s.bracket, s.has_bracket);
  tensor("product", s.product, s.has_product);
  tensor("delta", s.delta, s.has_delta);
  tensor("Delta", s.Delta, s.has_Delta);
  matrix("r", s.r, s.has_r);
  matrix("P", s.p, s.has_p);
  matrix("B", s.b, s.has_b);
  for (std::size_t k = 0; k < s.phi.size(); ++k)
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j)
        if (!s.phi[k].at(i, j).is_zero())
          out << "phi " << k << ' ' << i << ' ' << j << ' '
              << s.phi[k].at(i, j).str() << "\n";
  for (std::size_t k = 0; k < s.psi.size(); ++k)
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j)
        if (!s.psi[k].at(i, j).is_zero())
          out << "psi " << k << ' ' << i << ' ' << j << ' '
              << s.psi[k].at(i, j).str() << "\n";
  return out.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << h;
  return out.str();
}

ReportDocument run_command(const std::string& cmd, const WorkbenchSpec& spec,
                           const CommandOptions& opt) {
  ReportDocument doc;
  doc.root.add("command", cmd);
  if (!opt.input_digest.empty()) doc.root.add("input_digest", opt.input_digest);
  const std::size_t verdict_slot = doc.root.children.size();
  doc.root.add("verdict", "pass");
  for (const std::string& w : spec.warnings) doc.root.add("warning", w);

  bool pass = true;
  auto push_check = [&](const std::string& name, const Report& rep) {
    doc.root.children.push_back(report_node(name, rep));
    pass = pass && rep.passed();
  };
  auto attach_spec = [&doc](const WorkbenchSpec& out_spec) {
    doc.emitted = serialize_spec(out_spec);
    ReportNode lines{"emitted_spec", std::string(), {}};
    std::istringstream in(doc.emitted);
    std::string line;
    while (std::getline(in, line)) lines.add("line", line);
    doc.root.children.push_back(std::move(lines));
  };
  auto require = [&](bool present, const char* what) {
    if (!present)
      throw Error(Errc::MissingInput,
                  "'" + cmd + "' needs a " + std::string(what) + " section");
  };

  const Scalar lambda = opt.weight ? *opt.weight : spec.weight.value_or(Scalar(0));
  const bool diff = spec.differential_mode();

  if (cmd == "check") {
    if (diff) {
      if (spec.has_bracket)
        doc.root.add("note", "bracket section ignored in differential mode");
      if (spec.has_delta)
        doc.root.add("note", "delta section ignored in differential mode");
      push_check("differential_algebra", check_diff_algebra(make_diff_algebra(spec)));
      if (!spec.psi.empty() || spec.has_Delta)
        push_check("differential_coalgebra",
                   check_diff_coalgebra(make_diff_coalgebra(spec)));
      if (spec.phi.size() == spec.psi.size())
        push_check("differential_bialgebra",
                   check_diff_asi_bialgebra(DiffASIBialgebra{
                       make_diff_algebra(spec), make_diff_coalgebra(spec)}));
      else
        doc.root.add("note",
                     "phi and psi families differ in size; paired "
                     "admissibility skipped");
      if (spec.has_p && spec.has_b)
        push_check("differential_rota_baxter",
                   diff_rb_verify(make_diff_algebra(spec),
                                  BilinearFormData{spec.b}, spec.p, lambda));
    } else {
      const AlgebraSpec a = make_algebra(spec);
      push_check("poisson_algebra", check_poisson(a));
      if (spec.has_delta || spec.has_Delta)
        push_check("poisson_bialgebra",
                   check_poisson_bialgebra(BialgebraSpec(a, spec.delta, spec.Delta)));
      if (spec.has_b)
        push_check("quadratic_form", check_quadratic(a, BilinearFormData{spec.b}));
      if (spec.has_p && spec.has_b)
        push_check("quadratic_rota_baxter",
                   check_quadratic_rb(
                       a, RotaBaxterData(spec.p, lambda, BilinearFormData{spec.b})));
      else if (spec.has_p)
        push_check("rota_baxter_operator",
                   check_rb_operator(a, RotaBaxterData(spec.p, lambda)));
    }
  } else if (cmd == "classify") {
    require(spec.has_r, "r");
    if (diff) {
      const Classification cls = classify_diff_r(
          make_diff_algebra(spec), spec.psi, RMatrixData(TwoTensor(spec.r)));
      doc.root.children.push_back(classification_node(cls, true));
    } else {
      const Classification cls = classify_r(make_algebra(spec), TwoTensor(spec.r));
      doc.root.children.push_back(classification_node(cls, false));
    }
  } else if (cmd == "double") {
    if (diff) {
      const DiffASIBialgebra b{make_diff_algebra(spec), make_diff_coalgebra(spec)};
      const DiffDouble dd = diff_drinfeld_double(b);
      const Classification cls =
          classify_diff_r(dd.dbl.diff_alg, dd.dbl.diff_coalg.psi, dd.r_canon);
      doc.root.children.push_back(classification_node(cls, true));
      WorkbenchSpec out;
      out.dim = dd.dbl.diff_alg.alg.dim;
      out.basis = dd.dbl.diff_alg.alg.basis_names;
      out.commutative = dd.dbl.diff_alg.commutative;
      out.cocommutative = dd.dbl.diff_coalg.cocommutative;
      out.product = dd.dbl.diff_alg.alg.product;
      out.has_product = true;
      out.Delta = dd.dbl.diff_coalg.Delta;
      out.has_Delta = true;
      out.phi = dd.dbl.diff_alg.phi;
      out.psi = dd.dbl.diff_coalg.psi;
      out.r = dd.r_canon.r.coeffs;
      out.has_r = true;
      attach_spec(out);
    } else {
      const BialgebraSpec b(make_algebra(spec), spec.delta, spec.Delta);
      const DrinfeldDouble dd = drinfeld_double(b);
      doc.root.children.push_back(classification_node(dd.cls, false));
      const CoboundaryMaps cm = coboundary_maps(dd.dbl, dd.r_canon);
      WorkbenchSpec out;
      out.dim = dd.dbl.dim;
      out.basis = dd.dbl.basis_names;
      out.bracket = dd.dbl.bracket;
      out.has_bracket = true;
      out.product = dd.dbl.product;
      out.has_product = true;
      out.delta = cm.delta;
      out.has_delta = true;
      out.Delta = cm.Delta;
      out.has_Delta = true;
      out.r = dd.r_canon.coeffs;
      out.has_r = true;
      attach_spec(out);
    }
  } else if (cmd == "convert") {
    const std::string& dir = opt.direction;
    doc.root.add("direction", dir.empty() ? "(none)" : dir);
    if (dir == "tau") {
      require(spec.has_r, "r");
      WorkbenchSpec out = spec;
      out.warnings.clear();
      out.r = spec.r.transpose();
      attach_spec(out);
    } else if (dir == "tilde") {
      require(spec.has_p, "P");
      const RotaBaxterData rb(
          spec.p, lambda,
          spec.has_b ? std::optional<BilinearFormData>(BilinearFormData{spec.b})
                     : std::nullopt);
      const RotaBaxterData tl = tilde_operator(rb);
      WorkbenchSpec out = spec;
      out.warnings.clear();
      out.p = tl.p;
      out.weight = lambda;
      attach_spec(out);
    } else if (dir == "fact2rb") {
      require(spec.has_r, "r");
      if (diff) {
        const DiffRBRecovered rec = diff_r_to_rb(
            make_diff_algebra(spec), spec.psi, RMatrixData(TwoTensor(spec.r)),
            lambda);
        push_check("recovered_structure", rec.confirmation);
        WorkbenchSpec out;
        out.dim = spec.dim;
        out.basis = spec.basis;
        out.commutative = spec.commutative;
        out.product = spec.product;
        out.has_product = spec.has_product;
        out.phi = spec.phi;
        out.p = rec.p;
        out.has_p = true;
        out.b = rec.form.b;
        out.has_b = true;
        out.weight = lambda;
        attach_spec(out);
      } else {
        const RotaBaxterData rb = factorizable_to_qrb(
            make_algebra(spec), RMatrixData(TwoTensor(spec.r)), lambda);
        WorkbenchSpec out;
        out.dim = spec.dim;
        out.basis = spec.basis;
        out.bracket = spec.bracket;
        out.has_bracket = spec.has_bracket;
        out.product = spec.product;
        out.has_product = spec.has_product;
        out.p = rb.p;
        out.has_p = true;
        out.b = rb.form->b;
        out.has_b = true;
        out.weight = lambda;
        attach_spec(out);
      }
    } else if (dir == "rb2fact") {
      require(spec.has_p, "P");
      require(spec.has_b, "B");
      if (diff) {
        const DiffAlgebra d = make_diff_algebra(spec);
        const DiffRBInduced res =
            diff_rb_to_r(d, BilinearFormData{spec.b}, spec.p, lambda);
        const Classification cls = classify_diff_r(d, res.psi, res.r);
        doc.root.children.push_back(classification_node(cls, true));
        WorkbenchSpec out;
        out.dim = spec.dim;
        out.basis = spec.basis;
        out.commutative = spec.commutative;
        out.product = spec.product;
        out.has_product = spec.has_product;
        out.phi = spec.phi;
        out.psi = res.psi;
        out.Delta = diff_coboundary_coproduct(d.alg, res.r.r, true);
        out.has_Delta = true;
        out.cocommutative = tensor_cocommutative(out.Delta);
        out.r = res.r.r.coeffs;
        out.has_r = true;
        attach_spec(out);
      } else {
        const AlgebraSpec a = make_algebra(spec);
        const RMatrixData rm = qrb_to_factorizable(
            a, RotaBaxterData(spec.p, lambda, BilinearFormData{spec.b}));
        const Classification cls = classify_r(a, rm.r);
        doc.root.children.push_back(classification_node(cls, false));
        const CoboundaryMaps cm = coboundary_maps(a, rm.r);
        WorkbenchSpec out;
        out.dim = spec.dim;
        out.basis = spec.basis;
        out.bracket = spec.bracket;
        out.has_bracket = spec.has_bracket;
        out.product = spec.product;
        out.has_product = spec.has_product;
        out.delta = cm.delta;
        out.has_delta = true;
        out.Delta = cm.Delta;
        out.has_Delta = true;
        out.r = rm.r.coeffs;
        out.has_r = true;
        attach_spec(out);
      }
    } else {
      throw Error(Errc::MissingInput,
                  "convert needs --direction rb2fact, fact2rb, tilde, or tau");
    }
  } else if (cmd == "induce") {
    if (!diff)
      throw Error(Errc::MissingInput, "induce needs derivation data (phi, psi)");
    require(spec.has_r, "r");
    const DiffASIBialgebra b{make_diff_algebra(spec), make_diff_coalgebra(spec)};
    const InducedPoisson ip =
        induce_poisson_bialgebra(b, RMatrixData(TwoTensor(spec.r)));
    doc.root.children.push_back(classification_node(ip.cls, false));
    push_check("induction_diagrams", ip.diagrams);
    WorkbenchSpec out;
    out.dim = spec.dim;
    out.basis = spec.basis;
    out.bracket = ip.pb.alg.bracket;
    out.has_bracket = true;
    out.product = ip.pb.alg.product;
    out.has_product = true;
    out.delta = ip.pb.delta;
    out.has_delta = true;
    out.Delta = ip.pb.Delta;
    out.has_Delta = true;
    out.r = spec.r;
    out.has_r = true;
    attach_spec(out);
  } else if (cmd == "report") {
    doc.root.add("field", spec.field);
    doc.root.add("dim", std::to_string(spec.dim));
    doc.root.add("mode", diff ? "differential" : "poisson");
    std::string sections;
    auto mark = [&sections](bool on, const char* name) {
      if (!on) return;
      if (!sections.empty()) sections += ' ';
      sections += name;
    };
    mark(spec.has_bracket, "bracket");
    mark(spec.has_product, "product");
    mark(spec.has_delta, "delta");
    mark(spec.has_Delta, "Delta");
    mark(spec.has_r, "r");
    mark(spec.has_p, "P");
    mark(spec.has_b, "B");
    mark(!spec.phi.empty(), "phi");
    mark(!spec.psi.empty(), "psi");
    mark(spec.weight.has_value(), "weight");
    doc.root.add("sections", sections.empty() ? "(none)" : sections);
    doc.root.add("phi_family", std::to_string(spec.phi.size()));
    doc.root.add("psi_family", std::to_string(spec.psi.size()));
    attach_spec(spec);
  } else {
    throw Error(Errc::MissingInput, "unknown command '" + cmd + "'");
  }

  doc.pass = pass;
  doc.root.children[verdict_slot].value = pass ? "pass" : "fail";
  return doc;
}

std::string render_machine(const ReportDocument& doc) {
  std::ostringstream out;
  render_tree(out, doc.root, 0);
  return out.str();
}

std::string render_human(const ReportDocument& doc) {
  std::ostringstream out;
  std::string command, digest, verdict;
  for (const ReportNode& c : doc.root.children) {
    if (c.key == "command")
      command = c.value;
    else if (c.key == "input_digest")
      digest = c.value;
    else if (c.key == "verdict")
      verdict = c.value;
  }
  out << "pybx " << command << "\n";
  out << std::string(5 + command.size(), '=') << "\n";
  if (!digest.empty()) out << "input digest  " << digest << "\n";
  out << "verdict       " << (verdict == "pass" ? "PASS" : "FAIL") << "\n";
  {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(2);
    ms << doc.elapsed_ms;
    out << "elapsed       " << ms.str() << " ms\n";
  }
  for (const ReportNode& c : doc.root.children) {
    if (c.key == "command" || c.key == "input_digest" || c.key == "verdict")
      continue;
    if (c.key == "warning") {
      out << "warning: " << c.value << "\n";
    } else if (c.key == "note") {
      out << "note: " << c.value << "\n";
    } else if (c.key == "check") {
      std::string v, count, title;
      for (const ReportNode& gc : c.children) {
        if (gc.key == "verdict") v = gc.value;
        if (gc.key == "violations") count = gc.value;
        if (gc.key == "title") title = gc.value;
      }
      out << "\n[" << c.value << "] " << (v == "pass" ? "pass" : "FAIL")
          << ", " << count << " violation(s)";
      if (!title.empty()) out << "  (" << title << ")";
      out << "\n";
      for (const ReportNode& gc : c.children) {
        if (gc.key == "fact") {
          out << "  . " << gc.value << "\n";
        } else if (gc.key == "violation") {
          out << "  ! " << gc.value;
          for (const ReportNode& ggc : gc.children)
            out << "  [" << ggc.key << ' ' << ggc.value << "]";
          out << "\n";
        }
      }
    } else if (c.key == "classification") {
      std::string label;
      for (const ReportNode& gc : c.children)
        if (gc.key == "label") label = gc.value;
      out << "\nclassification: " << label << "\n";
      for (const ReportNode& gc : c.children)
        if (gc.key != "label") out << "  . " << gc.key << " = " << gc.value << "\n";
    } else if (c.key == "emitted_spec") {
      out << "\nemitted spec:\n";
      for (const ReportNode& gc : c.children) out << "  | " << gc.value << "\n";
    } else if (c.key == "error") {
      out << "error " << c.value << "\n";
      for (const ReportNode& gc : c.children)
        out << "  " << gc.key << ": " << gc.value << "\n";
    } else {
      out << c.key << ": " << c.value << "\n";
    }
  }
  return out.str();
}

}  // namespace pybx
