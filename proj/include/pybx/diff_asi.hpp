#ifndef PYBX_DIFF_ASI_HPP
#define PYBX_DIFF_ASI_HPP

#include <vector>

#include "pybx/bialgebra.hpp"
#include "pybx/rota_baxter.hpp"

namespace pybx {

/// Associative algebra with a finite family of commuting derivations.  Only
/// the product tensor of alg is consulted; the bracket slot is ignored.
struct DiffAlgebra {
  AlgebraSpec alg;
  std::vector<Matrix> phi;
  bool commutative = false;
};

/// Coalgebra with a finite family of commuting coderivations.  Delta is
/// stored input-first: Delta(a,i,j) is the coefficient of e_i (x) e_j in
/// the image of e_a.
struct DiffCoalgebra {
  std::size_t dim = 0;
  Tensor3 Delta;
  std::vector<Matrix> psi;
  bool cocommutative = false;
};

struct DiffASIBialgebra {
  DiffAlgebra diff_alg;
  DiffCoalgebra diff_coalg;
};

/// A form together with the adjoint family of the derivations under it.
struct FrobeniusData {
  BilinearFormData form;
  std::vector<Matrix> phi_hat;
};

/// Associativity (commutativity when flagged), the Leibniz rule for every
/// derivation, and pairwise commutation.
Report check_diff_algebra(const DiffAlgebra& d);

/// Coassociativity (cocommutativity when flagged), the coderivation
/// identity for every member, and pairwise commutation.
Report check_diff_coalgebra(const DiffCoalgebra& c);

/// The four admissibility families tying derivations to coderivations on
/// both the product and the coproduct side.
Report admissibility_audit(const DiffASIBialgebra& b);

/// Component validity, the two ASI compatibility identities, and the
/// admissibility audit, aggregated.
Report check_diff_asi_bialgebra(const DiffASIBialgebra& b);

/// Associative Yang-Baxter residual plus the two derivation compatibility
/// conditions on r, and the equivalent operator formulation (evaluated
/// independently, reported as a biconditional).
Report psi_admissible_aybe(const DiffAlgebra& d, const std::vector<Matrix>& psi,
                           const RMatrixData& r);

/// r_plus and r_minus as differential-algebra maps onto the image
/// subalgebra of the direct sum, and the unique decomposition through the
/// inverse of i_r.  Requires an invertible symmetric part.
Report fdt_factorization(const DiffAlgebra& d, const std::vector<Matrix>& psi,
                         const RMatrixData& r);

/// Differential classifier.  Field reuse: pybe_c carries the verdict of the
/// two derivation compatibility conditions, pybe_a the Yang-Baxter
/// residual, and s_ad_invariant mirrors s_l_invariant (only left-invariance
/// of the symmetric part enters here).  The five coboundary flags stay
/// false.  A factorizable result has the factorization report verified.
Classification classify_diff_r(const DiffAlgebra& d,
                               const std::vector<Matrix>& psi,
                               const RMatrixData& r);

/// The coproduct induced by r: with left_right_form true this applies
/// (id (x) L(u) - R(u) (x) id), otherwise (id (x) L(u) - L(u) (x) id).
/// The two agree on commutative algebras.
Tensor3 diff_coboundary_coproduct(const AlgebraSpec& alg, const TwoTensor& r,
                                  bool left_right_form);

struct DiffDouble {
  DiffASIBialgebra dbl;
  RMatrixData r_canon;
};
/// A (+) A^* with the mutual dual actions, derivations d_k (+) dual(cod_k),
/// coderivations cod_k (+) dual(d_k), and the coproduct induced by the
/// canonical tensor.  The output classifies factorizable.
DiffDouble diff_drinfeld_double(const DiffASIBialgebra& b);

/// Adjoint family under a symmetric invariant nondegenerate form, with the
/// intertwining identity through the form iso verified.
FrobeniusData frobenius_tools(const DiffAlgebra& d, const BilinearFormData& f);

/// Biconditional: P commutes with every derivation exactly when the induced
/// r_plus intertwines the derivations with the adjoint family.  Both sides
/// evaluated independently.
Report dfof_check(const DiffAlgebra& d, const BilinearFormData& f,
                  const Matrix& p);

/// Weighted operator identity (product only), the form compatibility, the
/// derivation commutation, and the Frobenius axioms for the form.
Report diff_rb_verify(const DiffAlgebra& d, const BilinearFormData& f,
                      const Matrix& p, const Scalar& lambda);

struct DiffRBInduced {
  RMatrixData r;
  std::vector<Matrix> psi;  // the adjoint family, acting as coderivation data
};
/// The 2-tensor of P composed with the form iso; weight zero lands
/// triangular, nonzero weight factorizable, with the adjoint family as psi.
DiffRBInduced diff_rb_to_r(const DiffAlgebra& d, const BilinearFormData& f,
                           const Matrix& p, const Scalar& lambda);

struct DiffRBRecovered {
  BilinearFormData form;
  Matrix p;
  std::vector<Matrix> psi_hat;  // adjoint family of the recovered form
  Report confirmation;
};
/// P = -w r_plus i_r^{-1}, form = -w i_r^{-1}; confirms that the adjoint
/// family of the recovered form equals the supplied psi bitwise.
DiffRBRecovered diff_r_to_rb(const DiffAlgebra& d,
                             const std::vector<Matrix>& psi,
                             const RMatrixData& r, const Scalar& lambda);

/// Bracket d1(a).d2(b) - d2(a).d1(b) over the original product; requires a
/// commutative algebra with exactly two derivations.  The result is
/// verified to be a Poisson algebra.
AlgebraSpec induce_poisson_core(const DiffAlgebra& d);

struct InducedPoisson {
  BialgebraSpec pb;
  Classification cls;
  Report diagrams;
};
/// Full induction: bracket as above, cobracket (cod1 (x) cod2 -
/// cod2 (x) cod1) Delta, coproduct carried over; classifies r on the
/// induced Poisson algebra, asserts label inheritance, and verifies both
/// closing diagrams (image subalgebra and double-then-induce).
InducedPoisson induce_poisson_bialgebra(const DiffASIBialgebra& b,
                                        const RMatrixData& r);

}  // namespace pybx

#endif
