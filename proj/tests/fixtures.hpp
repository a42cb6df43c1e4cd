#ifndef PYBX_TESTS_FIXTURES_HPP
#define PYBX_TESTS_FIXTURES_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pybx/bialgebra.hpp"
#include "pybx/diff_asi.hpp"
#include "pybx/rota_baxter.hpp"
#include "pybx/workbench.hpp"

namespace fx {

using namespace pybx;

// ---------- small builders ----------

inline Scalar q(long num, long den = 1) { return Scalar(num, den); }

Matrix mat_l(std::initializer_list<std::initializer_list<long>> rows);
TwoTensor tt_l(std::initializer_list<std::initializer_list<long>> rows);

// ---------- algebras ----------

AlgebraSpec abelian(std::size_t n);
// [e0,e1] = e1, zero product.
AlgebraSpec aff2();
// One idempotent: e0.e0 = e0, zero bracket.
AlgebraSpec idem1();
// K[t] mod t^n, basis 1, t, ..., t^(n-1); unital commutative, zero bracket.
AlgebraSpec trunc_poly(std::size_t n);
// aff2 (+) idem1.
AlgebraSpec mixed3();
// aff2 (+) K[u] mod u^2 (e2 the unit of the second factor, e3 = u).
AlgebraSpec mixed4();
// Basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h; zero product.
AlgebraSpec sl2();
// K[x,y] mod degree 3, basis 1, x, y, x2, xy, y2; zero bracket.
AlgebraSpec plane_jet();
// plane_jet with the canonical bracket df/dx dg/dy - df/dy dg/dx
// (structure constants written out by hand, used as an oracle).
AlgebraSpec plane_jet_poisson();

// ---------- r tensors ----------

TwoTensor r_zero(std::size_t n);
// e0 (x) e1 - e1 (x) e0 on aff2; antisymmetric, expected Triangular.
TwoTensor r_aff();
// e (x) f + 1/4 h (x) h on sl2; expected Factorizable.
TwoTensor r_sl2();

// ---------- bilinear forms ----------

BilinearFormData form_identity(std::size_t n);
BilinearFormData form_diag(const std::vector<long>& d);
// b(i, n-1-i) = 1, the pairing of a truncated polynomial algebra.
BilinearFormData form_antidiag(std::size_t n);
// Trace form of the defining representation: [[2,0,0],[0,0,1],[0,1,0]].
BilinearFormData form_sl2_trace();

// ---------- curated corpora ----------

struct NamedAlgebra {
  std::string name;
  AlgebraSpec alg;
};
// Six algebras of dims 2..4 used for seeded random sweeps.
std::vector<NamedAlgebra> algebra_corpus();

struct CbdCase {
  std::string name;
  AlgebraSpec alg;
  TwoTensor r;
  int expect;  // 1 = coboundary, 0 = not, -1 = agreement asserted only
};
// At least 20 (algebra, r) pairs over dims 2..4, passing and failing mixed.
std::vector<CbdCase> cbd_cases();

struct NamedBialgebra {
  std::string name;
  BialgebraSpec b;
};
// At least 10 valid Poisson bialgebras of dim <= 4.
std::vector<NamedBialgebra> bialgebra_corpus();

struct FactCase {
  std::string name;
  AlgebraSpec alg;
  TwoTensor r;
};
// Every case classifies Factorizable.
std::vector<FactCase> factorizable_cases();

struct QuadCase {
  std::string name;
  AlgebraSpec alg;
  BilinearFormData form;
};
// Every case passes the quadratic Poisson algebra check.
std::vector<QuadCase> quadratic_cases();

// ---------- differential fixtures ----------

// K[t] mod t^n with the grading derivation t d/dt.
DiffAlgebra diff_trunc(std::size_t n);
// plane_jet with the two grading derivations x d/dx and y d/dy.
DiffAlgebra diff_plane_jet();
// Zero product, caller-chosen derivation family.
DiffAlgebra diff_abelian(std::size_t n, std::vector<Matrix> phi);

// psi = -phi, zero coproduct throughout.
DiffASIBialgebra diff_bialg_zero1();
DiffASIBialgebra diff_bialg_abelian2();
DiffASIBialgebra diff_bialg_trunc3();
DiffASIBialgebra diff_bialg_plane_jet();

// Inputs for double constructions, dims 1..3.
std::vector<std::pair<std::string, DiffASIBialgebra>> diff_double_inputs();

// ---------- seeded randomness ----------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi);
  // Numerator in [-3,3], denominator in {1,2,3}.
  Scalar scalar();
  Vec vector(std::size_t n);
  Matrix matrix(std::size_t rows, std::size_t cols);
  Matrix symmetric(std::size_t n);
  TwoTensor two_tensor(std::size_t n);

 private:
  std::mt19937_64 eng_;
};

// ---------- report helpers ----------

// Value of a stored fact, or the empty string when the key is absent.
std::string fact_of(const Report& rep, const std::string& key);
bool fact_true(const Report& rep, const std::string& key);

// ---------- workbench helpers ----------

WorkbenchSpec wb_of_algebra(const AlgebraSpec& a);
WorkbenchSpec wb_of_bialgebra(const BialgebraSpec& b);
WorkbenchSpec wb_of_diff(const DiffASIBialgebra& b);

struct CliCase {
  std::string name;       // file stem
  std::string text;       // input file content
  std::string command;    // subcommand
  std::string extra;      // extra CLI arguments, may be empty
  bool expect_pass;       // expected exit status 0
};
// Spec files plus the command to run on each; covers every subcommand.
std::vector<CliCase> cli_corpus();

// Path of the pybx binary from the PYBX_BIN environment variable ("" if unset).
std::string pybx_bin();
// Creates the scratch directory on first use; returns full path of the file.
std::string write_spec_file(const std::string& stem, const std::string& text);
// Runs "pybx <args> > out_path 2>&1"; returns the exit status (-1 on failure
// to launch).
int run_pybx(const std::string& args, const std::string& out_path);
std::string slurp(const std::string& path);

}  // namespace fx

#endif
