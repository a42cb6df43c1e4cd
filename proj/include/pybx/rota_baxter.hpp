#ifndef PYBX_ROTA_BAXTER_HPP
#define PYBX_ROTA_BAXTER_HPP

#include <optional>
#include <utility>

#include "pybx/bialgebra.hpp"

namespace pybx {

/// Weighted operator data.  The weight is part of the data, never inferred;
/// the form is optional and only consulted by the quadratic checks.
struct RotaBaxterData {
  Matrix p;
  Scalar weight;
  std::optional<BilinearFormData> form;

  RotaBaxterData(Matrix op, Scalar w,
                 std::optional<BilinearFormData> f = std::nullopt)
      : p(std::move(op)), weight(std::move(w)), form(std::move(f)) {}
};

/// The iso A^* -> A induced by a nondegenerate form, and its 2-tensor.
/// i_b is the standard (column-action) matrix, so <i_b e_a^*, e_j^*> equals
/// the pairing of the image with the j-th coordinate; r_b(i,j) pairs the
/// image of e_i^* against e_j^*.
struct FormTensors {
  Matrix i_b;
  TwoTensor r_b;
};

/// Both weighted identities, bracket and product, on every basis pair.
Report check_rb_operator(const AlgebraSpec& a, const RotaBaxterData& rb);

/// [a,b]_P = [Pa,b] + [a,Pb] + w[a,b] and its product twin.  The output is
/// verified to be a Poisson algebra before it is returned.
AlgebraSpec descendent_algebra(const AlgebraSpec& a, const RotaBaxterData& rb);

/// Quadratic structure, operator identities, and the compatibility
/// B(a,Pb) + B(Pa,b) + w B(a,b) = 0.
Report check_quadratic_rb(const AlgebraSpec& a, const RotaBaxterData& rb);

/// -w id - P with the same weight and form.  When a form is present the
/// compatibility condition is confirmed to hold for the input exactly when
/// it holds for the output.
RotaBaxterData tilde_operator(const RotaBaxterData& rb);

/// Semidirect sum with the coadjoint actions, carrying the hyperbolic form
/// and the block operator P (+) tilde(P)^*.  The result is verified to be a
/// quadratic Rota-Baxter structure of the same weight.
std::pair<AlgebraSpec, RotaBaxterData> semidirect_rb(const AlgebraSpec& a,
                                                     const RotaBaxterData& rb);

FormTensors form_tensors(const BilinearFormData& f);

/// P = -w r_plus I_r^{-1}, B = -w <I_r^{-1}(.), .>; requires a factorizable
/// r and nonzero weight.  The output carries the form and passes the
/// quadratic checks.
RotaBaxterData factorizable_to_qrb(const AlgebraSpec& a, const RMatrixData& r,
                                   const Scalar& lambda);

/// The 2-tensor of P composed with the form iso.  Nonzero weight lands in
/// the factorizable class, zero weight in the triangular class; both are
/// verified.
RMatrixData qrb_to_factorizable(const AlgebraSpec& a, const RotaBaxterData& rb);

/// Round-trip coherence: transposing r corresponds to passing to the tilde
/// operator over the same form, and both compositions reproduce their
/// inputs bitwise.
Report diagram_check(const AlgebraSpec& a, const RMatrixData& r,
                     const Scalar& lambda);

/// Biconditional between the symmetric-part condition r + tau(r) = -w r_B
/// and the compatibility identity for P_r = r_plus o I_B^{-1}.  Both sides
/// are evaluated independently.
Report rbfna0_check(const BilinearFormData& f, const TwoTensor& r,
                    const Scalar& lambda);

/// -(1/w) I_r as an algebra map from the derived dual products onto the
/// descendent algebra of the induced operator.
Report descendent_iso_check(const AlgebraSpec& a, const TwoTensor& r,
                            const Scalar& lambda);

}  // namespace pybx

#endif
