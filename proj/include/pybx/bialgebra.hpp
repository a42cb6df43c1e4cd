#ifndef PYBX_BIALGEBRA_HPP
#define PYBX_BIALGEBRA_HPP

#include "pybx/poisson.hpp"

namespace pybx {

/// Algebra plus two cooperations stored input-first:
/// delta(e_k) = sum_{i,j} delta(k,i,j) e_i (x) e_j, and likewise for Delta.
/// The dual algebra on A^* reads its structure constants straight off them:
/// [e_i^*, e_j^*] = sum_k delta(k,i,j) e_k^*.
struct BialgebraSpec {
  AlgebraSpec alg;
  Tensor3 delta;
  Tensor3 Delta;

  BialgebraSpec() = default;
  BialgebraSpec(AlgebraSpec a, Tensor3 d, Tensor3 D);

  AlgebraSpec dual_algebra() const;
};

/// The maps A^* -> A carried by a 2-tensor, as column-action matrices on dual
/// coordinates: column a of r_plus holds the coordinates of r_plus(e_a^*),
/// so <r_plus(e_a^*), e_b^*> = r(a,b).  r_minus is the negated adjoint,
/// i_r = r_plus - r_minus and s_plus = i_r / 2.
struct RMatrixData {
  TwoTensor r;
  Matrix r_plus;   // transpose(r.coeffs)
  Matrix r_minus;  // -r.coeffs
  Matrix i_r;      // r.coeffs + transpose(r.coeffs), symmetric
  Matrix s_plus;   // i_r / 2

  explicit RMatrixData(TwoTensor rr);
};

enum class RLabel {
  NotSolution,
  CoboundaryOnly,
  QuasiTriangular,
  Triangular,
  Factorizable,
};
const char* rlabel_name(RLabel l);

/// Everything classify_r measures, with the label derived at the end.  The
/// five coboundary conditions are kept as individual flags; the residual
/// tensors of both Yang-Baxter equations are returned verbatim.
struct Classification {
  RLabel label = RLabel::NotSolution;
  bool cbd_sym_ad = false;     // (ad(a) x id + id x ad(a)) S = 0
  bool cbd_sym_l = false;      // (L(a) x id - id x L(a)) S = 0
  bool cbd_c_inv = false;      // ad-sweep of the bracket residual vanishes
  bool cbd_a_inv = false;      // L-sweep of the product residual vanishes
  bool cbd_mixed = false;      // mixed ad/L sweep vanishes
  bool pybe_c = false;         // bracket Yang-Baxter residual is zero
  bool pybe_a = false;         // product Yang-Baxter residual is zero
  bool s_ad_invariant = false;
  bool s_l_invariant = false;
  bool antisymmetric = false;
  std::size_t rank_s = 0;
  Tensor3 c_residual, a_residual;
  bool tau_quasi_agrees = false;
  bool tau_factorizable_agrees = false;

  bool coboundary_ok() const {
    return cbd_sym_ad && cbd_sym_l && cbd_c_inv && cbd_a_inv && cbd_mixed;
  }
  bool pybe() const { return pybe_c && pybe_a; }
  bool quasi_triangular() const {
    return pybe() && s_ad_invariant && s_l_invariant;
  }
};

/// Cobracket/coproduct residual pair produced from r.
struct CoboundaryMaps {
  Tensor3 delta;
  Tensor3 Delta;
};

struct YBResiduals {
  Tensor3 c;  // [r12,r13] + [r13,r23] + [r12,r23]
  Tensor3 a;  // r12.r13 + r13.r23 - r23.r12
};

/// Validity of both algebras, the cocycle identity, the coproduct
/// compatibility and the two mixed families, over every basis tuple.
Report check_poisson_bialgebra(const BialgebraSpec& b);

/// Transports the whole structure along an invertible phi (primal operations
/// by phi, dual operations by the inverse dual map).
BialgebraSpec transport_isomorphism(const BialgebraSpec& b, const Matrix& phi);

CoboundaryMaps coboundary_maps(const AlgebraSpec& a, const TwoTensor& r);

YBResiduals yb_residuals(const AlgebraSpec& a, const TwoTensor& r);

/// Checks invariance of an arbitrary 2-tensor; for symmetric input also
/// evaluates the two equivalent operator characterizations independently and
/// records whether all three agree.
Report adl_invariance_audit(const AlgebraSpec& a, const TwoTensor& t);

Classification classify_r(const AlgebraSpec& a, const TwoTensor& r);

/// The four equivalent conditions: Yang-Baxter for r, for tau(r), and the
/// homomorphism equation pairs for r_plus and for r_minus.
struct FourWay {
  bool pybe_r = false;
  bool pybe_tau = false;
  bool plus_hom = false;
  bool minus_hom = false;
  bool agree() const {
    return pybe_r == pybe_tau && pybe_r == plus_hom && pybe_r == minus_hom;
  }
};
FourWay four_way_equivalence(const AlgebraSpec& a, const TwoTensor& r);

/// Builds ([,]_r, ._r) on A^* and verifies the homomorphism equivalence in
/// both directions.  Requires the symmetric part of r invariant.
struct DualProducts {
  AlgebraSpec dual;
  Report hom_report;
};
DualProducts dual_products_and_homs(const AlgebraSpec& a, const TwoTensor& r);

/// For a quadratic form B: P = r_plus o I_B^{-1} satisfies the two modified
/// identities exactly when r solves both Yang-Baxter equations; evaluates
/// each side independently and reports the biconditional.
Report modified_rb_identities(const AlgebraSpec& a, const BilinearFormData& f,
                              const TwoTensor& r);

struct FactorizePair {
  Vec plus;
  Vec minus;
};
/// x = plus - minus through I_r^{-1}; requires a factorizable r.
FactorizePair factorize(const AlgebraSpec& a, const TwoTensor& r, const Vec& x);

struct DrinfeldDouble {
  AlgebraSpec dbl;
  TwoTensor r_canon;
  Classification cls;
};
/// A (+) A^* with the mutual coadjoint actions; canonical r has the identity
/// block in the A (x) A^* corner.  Requires a valid input bialgebra.
DrinfeldDouble drinfeld_double(const BialgebraSpec& b);

}  // namespace pybx

#endif
