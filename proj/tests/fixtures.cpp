#include "fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fx {

// ---------- small builders ----------

Matrix mat_l(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

TwoTensor tt_l(std::initializer_list<std::initializer_list<long>> rows) {
  return TwoTensor(mat_l(rows));
}

// ---------- algebras ----------

AlgebraSpec abelian(std::size_t n) {
  return AlgebraSpec(n, Tensor3(n), Tensor3(n));
}

AlgebraSpec aff2() {
  Tensor3 br(2);
  br.at(0, 1, 1) = Scalar(1);
  br.at(1, 0, 1) = Scalar(-1);
  return AlgebraSpec(2, br, Tensor3(2), {"a", "b"});
}

AlgebraSpec idem1() {
  Tensor3 pr(1);
  pr.at(0, 0, 0) = Scalar(1);
  return AlgebraSpec(1, Tensor3(1), pr, {"p"});
}

AlgebraSpec trunc_poly(std::size_t n) {
  Tensor3 pr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) pr.at(i, j, i + j) = Scalar(1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "one" : (i == 1 ? "t" : "t" + std::to_string(i)));
  return AlgebraSpec(n, Tensor3(n), pr, names);
}

AlgebraSpec mixed3() {
  Tensor3 br(3), pr(3);
  br.at(0, 1, 1) = Scalar(1);
  br.at(1, 0, 1) = Scalar(-1);
  pr.at(2, 2, 2) = Scalar(1);
  return AlgebraSpec(3, br, pr, {"a", "b", "p"});
}

AlgebraSpec mixed4() {
  Tensor3 br(4), pr(4);
  br.at(0, 1, 1) = Scalar(1);
  br.at(1, 0, 1) = Scalar(-1);
  pr.at(2, 2, 2) = Scalar(1);
  pr.at(2, 3, 3) = Scalar(1);
  pr.at(3, 2, 3) = Scalar(1);
  return AlgebraSpec(4, br, pr, {"a", "b", "u", "v"});
}

AlgebraSpec sl2() {
  Tensor3 br(3);
  br.at(0, 1, 1) = Scalar(2);
  br.at(1, 0, 1) = Scalar(-2);
  br.at(0, 2, 2) = Scalar(-2);
  br.at(2, 0, 2) = Scalar(2);
  br.at(1, 2, 0) = Scalar(1);
  br.at(2, 1, 0) = Scalar(-1);
  return AlgebraSpec(3, br, Tensor3(3), {"h", "e", "f"});
}

namespace {
// Monomial exponents for the degree <= 2 jet basis 1, x, y, x2, xy, y2.
constexpr int kJetExp[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};

std::size_t jet_index(int a, int b) {
  for (std::size_t k = 0; k < 6; ++k)
    if (kJetExp[k][0] == a && kJetExp[k][1] == b) return k;
  return 6;  // unreachable for a + b <= 2
}
}  // namespace

AlgebraSpec plane_jet() {
  Tensor3 pr(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const int a = kJetExp[i][0] + kJetExp[j][0];
      const int b = kJetExp[i][1] + kJetExp[j][1];
      if (a + b <= 2) pr.at(i, j, jet_index(a, b)) = Scalar(1);
    }
  return AlgebraSpec(6, Tensor3(6), pr, {"one", "x", "y", "x2", "xy", "y2"});
}

AlgebraSpec plane_jet_poisson() {
  AlgebraSpec base = plane_jet();
  Tensor3 br(6);
  br.at(1, 2, 4) = Scalar(1);   // [x, y] = xy
  br.at(2, 1, 4) = Scalar(-1);
  return AlgebraSpec(6, br, base.product, base.basis_names);
}

// ---------- r tensors ----------

TwoTensor r_zero(std::size_t n) { return TwoTensor(n); }

TwoTensor r_aff() {
  TwoTensor t(2);
  t.at(0, 1) = Scalar(1);
  t.at(1, 0) = Scalar(-1);
  return t;
}

TwoTensor r_sl2() {
  TwoTensor t(3);
  t.at(1, 2) = Scalar(1);      // e (x) f
  t.at(0, 0) = Scalar(1, 4);   // 1/4 h (x) h
  return t;
}

// ---------- bilinear forms ----------

BilinearFormData form_identity(std::size_t n) {
  return BilinearFormData{Matrix::identity(n)};
}

BilinearFormData form_diag(const std::vector<long>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = Scalar(d[i]);
  return BilinearFormData{m};
}

BilinearFormData form_antidiag(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = Scalar(1);
  return BilinearFormData{m};
}

BilinearFormData form_sl2_trace() {
  return BilinearFormData{mat_l({{2, 0, 0}, {0, 0, 1}, {0, 1, 0}})};
}

// ---------- curated corpora ----------

std::vector<NamedAlgebra> algebra_corpus() {
  return {{"aff2", aff2()},       {"abelian2", abelian(2)},
          {"abelian3", abelian(3)}, {"mixed3", mixed3()},
          {"trunc3", trunc_poly(3)}, {"sl2", sl2()}};
}

std::vector<CbdCase> cbd_cases() {
  std::vector<CbdCase> out;
  Rng rng(20260822);
  auto add = [&](std::string name, AlgebraSpec a, TwoTensor r, int expect) {
    out.push_back(CbdCase{std::move(name), std::move(a), std::move(r), expect});
  };
  auto unit = [](std::size_t n, std::size_t i, std::size_t j) {
    TwoTensor t(n);
    t.at(i, j) = Scalar(1);
    return t;
  };

  add("aff2_zero", aff2(), r_zero(2), 1);
  add("aff2_triangular", aff2(), r_aff(), 1);
  add("aff2_e00", aff2(), unit(2, 0, 0), 0);
  add("aff2_e11", aff2(), unit(2, 1, 1), 0);
  add("aff2_identity", aff2(), TwoTensor(Matrix::identity(2)), 0);
  add("aff2_random", aff2(), rng.two_tensor(2), -1);
  add("sl2_standard", sl2(), r_sl2(), 1);
  add("sl2_standard_tau", sl2(), r_sl2().tau(), 1);
  add("sl2_zero", sl2(), r_zero(3), 1);
  add("sl2_ee", sl2(), unit(3, 1, 1), 0);
  {
    // e ^ f: the bracket residual is the invariant Cartan tensor, nonzero,
    // so the coboundary conditions hold while the Yang-Baxter ones fail.
    TwoTensor t(3);
    t.at(1, 2) = Scalar(1);
    t.at(2, 1) = Scalar(-1);
    add("sl2_ef_wedge", sl2(), t, 1);
  }
  add("sl2_random", sl2(), rng.two_tensor(3), -1);
  {
    TwoTensor t = r_sl2();
    t.at(1, 1) += Scalar(1);
    add("sl2_perturbed", sl2(), t, -1);
  }
  add("abelian2_identity", abelian(2), TwoTensor(Matrix::identity(2)), 1);
  add("abelian2_random", abelian(2), rng.two_tensor(2), 1);
  add("abelian3_random", abelian(3), rng.two_tensor(3), 1);
  add("abelian4_random", abelian(4), rng.two_tensor(4), 1);
  add("trunc3_tt", trunc_poly(3), unit(3, 1, 1), 0);
  add("trunc3_zero", trunc_poly(3), r_zero(3), 1);
  add("trunc3_random", trunc_poly(3), rng.two_tensor(3), -1);
  add("mixed3_pp", mixed3(), unit(3, 2, 2), -1);
  add("mixed3_zero", mixed3(), r_zero(3), 1);
  add("mixed3_random", mixed3(), rng.two_tensor(3), -1);
  add("mixed4_random", mixed4(), rng.two_tensor(4), -1);
  add("mixed4_zero", mixed4(), r_zero(4), 1);
  return out;
}

namespace {
// delta of the triangular aff2 structure: delta(a) = a ^ b, delta(b) = 0.
Tensor3 aff2_cob_delta() {
  Tensor3 d(2);
  d.at(0, 0, 1) = Scalar(1);
  d.at(0, 1, 0) = Scalar(-1);
  return d;
}

// Lie cobracket dual to aff2, carried by the abelian algebra.
Tensor3 dual_aff_delta() {
  Tensor3 d(2);
  d.at(1, 0, 1) = Scalar(1);
  d.at(1, 1, 0) = Scalar(-1);
  return d;
}
}  // namespace

std::vector<NamedBialgebra> bialgebra_corpus() {
  std::vector<NamedBialgebra> out;
  auto zero = [&](std::string name, AlgebraSpec a) {
    const std::size_t n = a.dim;
    out.push_back(
        NamedBialgebra{std::move(name),
                       BialgebraSpec(std::move(a), Tensor3(n), Tensor3(n))});
  };
  zero("zero1", abelian(1));
  zero("zero2", abelian(2));
  zero("zero3", abelian(3));
  zero("zero4", abelian(4));
  zero("aff2_zero", aff2());
  zero("idem1_zero", idem1());
  zero("mixed3_zero", mixed3());
  zero("mixed4_zero", mixed4());
  zero("sl2_zero", sl2());
  zero("trunc3_zero", trunc_poly(3));
  zero("trunc4_zero", trunc_poly(4));
  out.push_back(NamedBialgebra{
      "aff2_coboundary", BialgebraSpec(aff2(), aff2_cob_delta(), Tensor3(2))});
  {
    CoboundaryMaps cm = coboundary_maps(sl2(), r_sl2());
    out.push_back(NamedBialgebra{"sl2_coboundary",
                                 BialgebraSpec(sl2(), cm.delta, cm.Delta)});
  }
  out.push_back(NamedBialgebra{
      "abelian2_dual_aff",
      BialgebraSpec(abelian(2), dual_aff_delta(), Tensor3(2))});
  return out;
}

std::vector<FactCase> factorizable_cases() {
  std::vector<FactCase> out;
  out.push_back({"abelian2_identity", abelian(2),
                 TwoTensor(Matrix::identity(2))});
  out.push_back({"abelian2_upper", abelian(2), tt_l({{1, 2}, {0, 3}})});
  out.push_back({"abelian3_diag", abelian(3),
                 tt_l({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})});
  out.push_back({"sl2_standard", sl2(), r_sl2()});
  const std::vector<NamedBialgebra> corpus = bialgebra_corpus();
  for (const char* want : {"aff2_zero", "aff2_coboundary", "trunc3_zero"})
    for (const NamedBialgebra& nb : corpus)
      if (nb.name == want) {
        DrinfeldDouble dd = drinfeld_double(nb.b);
        out.push_back({"double_" + nb.name, dd.dbl, dd.r_canon});
      }
  return out;
}

std::vector<QuadCase> quadratic_cases() {
  return {{"abelian2_identity", abelian(2), form_identity(2)},
          {"abelian3_diag", abelian(3), form_diag({1, 1, 2})},
          {"sl2_trace", sl2(), form_sl2_trace()},
          {"trunc3_pair", trunc_poly(3), form_antidiag(3)},
          {"trunc4_pair", trunc_poly(4), form_antidiag(4)}};
}

// ---------- differential fixtures ----------

DiffAlgebra diff_trunc(std::size_t n) {
  Matrix euler(n, n);
  for (std::size_t i = 1; i < n; ++i)
    euler.at(i, i) = Scalar(static_cast<long>(i));
  return DiffAlgebra{trunc_poly(n), {euler}, true};
}

DiffAlgebra diff_plane_jet() {
  Matrix dx(6, 6), dy(6, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    dx.at(k, k) = Scalar(kJetExp[k][0]);  // x d/dx, diagonal in x-degree
    dy.at(k, k) = Scalar(kJetExp[k][1]);  // y d/dy, diagonal in y-degree
  }
  return DiffAlgebra{plane_jet(), {dx, dy}, true};
}

DiffAlgebra diff_abelian(std::size_t n, std::vector<Matrix> phi) {
  return DiffAlgebra{abelian(n), std::move(phi), true};
}

namespace {
DiffASIBialgebra pair_minus(DiffAlgebra d) {
  DiffCoalgebra c;
  c.dim = d.alg.dim;
  c.Delta = Tensor3(d.alg.dim);
  for (const Matrix& m : d.phi) c.psi.push_back(-m);
  c.cocommutative = true;
  return DiffASIBialgebra{std::move(d), std::move(c)};
}
}  // namespace

DiffASIBialgebra diff_bialg_zero1() {
  return pair_minus(diff_abelian(1, {}));
}

DiffASIBialgebra diff_bialg_abelian2() {
  Matrix nil(2, 2);
  nil.at(0, 1) = Scalar(1);
  return pair_minus(diff_abelian(2, {nil}));
}

DiffASIBialgebra diff_bialg_trunc3() { return pair_minus(diff_trunc(3)); }

DiffASIBialgebra diff_bialg_plane_jet() { return pair_minus(diff_plane_jet()); }

std::vector<std::pair<std::string, DiffASIBialgebra>> diff_double_inputs() {
  return {{"zero1", diff_bialg_zero1()},
          {"abelian2", diff_bialg_abelian2()},
          {"trunc3", diff_bialg_trunc3()}};
}

// ---------- seeded randomness ----------

long Rng::integer(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(eng_);
}

Scalar Rng::scalar() {
  return Scalar(integer(-3, 3), integer(1, 3));
}

Vec Rng::vector(std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar();
  return v;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar();
  return m;
}

Matrix Rng::symmetric(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = scalar();
  return m;
}

TwoTensor Rng::two_tensor(std::size_t n) { return TwoTensor(matrix(n, n)); }

// ---------- report helpers ----------

std::string fact_of(const Report& rep, const std::string& key) {
  for (const auto& [k, v] : rep.facts)
    if (k == key) return v;
  return std::string();
}

bool fact_true(const Report& rep, const std::string& key) {
  return fact_of(rep, key) == "true";
}

// ---------- workbench helpers ----------

WorkbenchSpec wb_of_algebra(const AlgebraSpec& a) {
  WorkbenchSpec s;
  s.dim = a.dim;
  s.basis = a.basis_names.empty() ? default_basis_names(a.dim) : a.basis_names;
  s.bracket = a.bracket;
  s.product = a.product;
  s.has_bracket = !a.bracket.is_zero();
  s.has_product = !a.product.is_zero();
  return s;
}

WorkbenchSpec wb_of_bialgebra(const BialgebraSpec& b) {
  WorkbenchSpec s = wb_of_algebra(b.alg);
  s.delta = b.delta;
  s.Delta = b.Delta;
  s.has_delta = !b.delta.is_zero();
  s.has_Delta = !b.Delta.is_zero();
  return s;
}

WorkbenchSpec wb_of_diff(const DiffASIBialgebra& b) {
  WorkbenchSpec s;
  s.dim = b.diff_alg.alg.dim;
  s.basis = b.diff_alg.alg.basis_names.empty()
                ? default_basis_names(s.dim)
                : b.diff_alg.alg.basis_names;
  s.product = b.diff_alg.alg.product;
  s.has_product = !s.product.is_zero();
  s.Delta = b.diff_coalg.Delta;
  s.has_Delta = !s.Delta.is_zero();
  s.phi = b.diff_alg.phi;
  s.psi = b.diff_coalg.psi;
  s.commutative = b.diff_alg.commutative;
  s.cocommutative = b.diff_coalg.cocommutative;
  return s;
}

std::vector<CliCase> cli_corpus() {
  std::vector<CliCase> out;
  auto add = [&](std::string name, std::string text, std::string cmd,
                 std::string extra, bool pass) {
    out.push_back(CliCase{std::move(name), std::move(text), std::move(cmd),
                          std::move(extra), pass});
  };

  add("aff2_check", serialize_spec(wb_of_algebra(aff2())), "check", "", true);
  add("jet_poisson_check", serialize_spec(wb_of_algebra(plane_jet_poisson())),
      "check", "", true);
  {
    WorkbenchSpec s = wb_of_algebra(sl2());
    s.r = r_sl2().coeffs;
    s.has_r = true;
    const std::string text = serialize_spec(s);
    add("sl2_classify", text, "classify", "", true);
    add("sl2_fact2rb", text, "convert", "--direction fact2rb --weight -1",
        true);
    add("sl2_tau", text, "convert", "--direction tau", true);
  }
  {
    const BialgebraSpec b = BialgebraSpec(aff2(), aff2_cob_delta(), Tensor3(2));
    const std::string text = serialize_spec(wb_of_bialgebra(b));
    add("aff2_bialg_check", text, "check", "", true);
    add("aff2_bialg_double", text, "double", "", true);
    add("aff2_bialg_report", text, "report", "", true);
  }
  {
    WorkbenchSpec s = wb_of_algebra(sl2());
    s.b = form_sl2_trace().b;
    s.has_b = true;
    add("sl2_quad_check", serialize_spec(s), "check", "", true);
  }
  {
    RotaBaxterData rb =
        factorizable_to_qrb(abelian(2),
                            RMatrixData(TwoTensor(Matrix::identity(2))),
                            Scalar(1));
    WorkbenchSpec s = wb_of_algebra(abelian(2));
    s.p = rb.p;
    s.has_p = true;
    s.b = rb.form->b;
    s.has_b = true;
    s.weight = Scalar(1);
    const std::string text = serialize_spec(s);
    add("abelian2_rb_check", text, "check", "", true);
    add("abelian2_rb2fact", text, "convert", "--direction rb2fact", true);
    add("abelian2_tilde", text, "convert", "--direction tilde", true);
  }
  {
    const std::string text = serialize_spec(wb_of_diff(diff_bialg_trunc3()));
    add("trunc3_diff_check", text, "check", "", true);
    add("trunc3_diff_double", text, "double", "", true);
  }
  {
    // Proportional derivation family; r = unit (x) unit is invariant.
    Matrix nil(2, 2);
    nil.at(0, 1) = Scalar(1);
    WorkbenchSpec s = wb_of_diff(pair_minus(diff_abelian(2, {nil, nil})));
    Matrix r(2, 2);
    r.at(0, 0) = Scalar(1);
    s.r = r;
    s.has_r = true;
    add("abelian2_induce", serialize_spec(s), "induce", "", true);
  }
  add("bad_index", "field rational\ndim 2\nbracket 0 0 5 1\n", "check", "",
      false);
  add("bad_value", "field rational\ndim 2\nproduct 0 0 1 x\n", "check", "",
      false);
  add("nonanti_check",
      "field rational\ndim 2\nbracket 0 0 1 1\n", "check", "", false);
  return out;
}

std::string pybx_bin() {
  const char* p = std::getenv("PYBX_BIN");
  return p ? std::string(p) : std::string();
}

std::string write_spec_file(const std::string& stem, const std::string& text) {
  std::filesystem::create_directories("pybx_specs");
  const std::string path = "pybx_specs/" + stem + ".pybx";
  std::ofstream out(path);
  out << text;
  return path;
}

int run_pybx(const std::string& args, const std::string& out_path) {
  const std::string cmd =
      pybx_bin() + " " + args + " > " + out_path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fx
