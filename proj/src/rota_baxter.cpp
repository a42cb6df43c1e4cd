#include "pybx/rota_baxter.hpp"

namespace pybx {
namespace {

Vec column_of(const Matrix& m, std::size_t j) {
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

// B(a,Pb) + B(Pa,b) + w B(a,b) as a matrix residual.
Matrix compat_residual(const Matrix& b, const Matrix& p, const Scalar& w) {
  return b * p + p.transpose() * b + w * b;
}

}  // namespace

Report check_rb_operator(const AlgebraSpec& a, const RotaBaxterData& rb) {
  const std::size_t n = a.dim;
  Report out("rb_operator");
  if (rb.p.rows() != n || rb.p.cols() != n)
    throw Error(Errc::DimMismatch, "operator dimension mismatch");
  out.fact("weight", rb.weight.str());

  std::vector<Vec> pe(n);
  for (std::size_t i = 0; i < n; ++i) pe[i] = column_of(rb.p, i);

  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      Vec lhs_b = a.br(pe[i], pe[j]);
      Vec arg_b = vec_add(vec_add(a.br(pe[i], ej), a.br(ei, pe[j])),
                          vec_scale(rb.weight, a.br(ei, ej)));
      Vec res_b = vec_sub(lhs_b, rb.p * arg_b);
      if (!vec_is_zero(res_b)) out.add_violation("rb_bracket", {i, j}, res_b);

      Vec lhs_p = a.mul(pe[i], pe[j]);
      Vec arg_p = vec_add(vec_add(a.mul(pe[i], ej), a.mul(ei, pe[j])),
                          vec_scale(rb.weight, a.mul(ei, ej)));
      Vec res_p = vec_sub(lhs_p, rb.p * arg_p);
      if (!vec_is_zero(res_p)) out.add_violation("rb_product", {i, j}, res_p);
    }
  }
  return out;
}

AlgebraSpec descendent_algebra(const AlgebraSpec& a, const RotaBaxterData& rb) {
  if (!check_rb_operator(a, rb).passed())
    throw Error(Errc::NotRotaBaxter, "operator fails the weighted identities");

  const std::size_t n = a.dim;
  std::vector<Vec> pe(n);
  for (std::size_t i = 0; i < n; ++i) pe[i] = column_of(rb.p, i);

  Tensor3 br(n), pr(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      Vec db = vec_add(vec_add(a.br(pe[i], ej), a.br(ei, pe[j])),
                       vec_scale(rb.weight, a.br(ei, ej)));
      Vec dp = vec_add(vec_add(a.mul(pe[i], ej), a.mul(ei, pe[j])),
                       vec_scale(rb.weight, a.mul(ei, ej)));
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, j, k) = db[k];
        pr.at(i, j, k) = dp[k];
      }
    }
  }
  AlgebraSpec out(n, std::move(br), std::move(pr), a.basis_names);
  if (!check_poisson(out).passed())
    throw Error(Errc::InvalidAlgebra, "descendent structure failed validation");
  return out;
}

Report check_quadratic_rb(const AlgebraSpec& a, const RotaBaxterData& rb) {
  if (!rb.form)
    throw Error(Errc::MissingForm, "quadratic check requires a bilinear form");
  Report out("quadratic_rb");
  out.absorb(check_quadratic(a, *rb.form), "quad");
  out.absorb(check_rb_operator(a, rb), "rb");

  Matrix res = compat_residual(rb.form->b, rb.p, rb.weight);
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!res.at(i, j).is_zero())
        out.add_violation("compat", {i, j}, {res.at(i, j)});
  return out;
}

RotaBaxterData tilde_operator(const RotaBaxterData& rb) {
  const std::size_t n = rb.p.rows();
  Matrix tilde = -(rb.weight * Matrix::identity(n)) - rb.p;
  RotaBaxterData out(std::move(tilde), rb.weight, rb.form);
  if (rb.form) {
    // The compatibility residual of the output is the negation of the
    // input's, so the two conditions hold together.
    bool in_ok = compat_residual(rb.form->b, rb.p, rb.weight).is_zero();
    bool out_ok = compat_residual(out.form->b, out.p, out.weight).is_zero();
    if (in_ok != out_ok)
      throw Error(Errc::InvalidAlgebra, "tilde compatibility mismatch");
  }
  return out;
}

std::pair<AlgebraSpec, RotaBaxterData> semidirect_rb(const AlgebraSpec& a,
                                                     const RotaBaxterData& rb) {
  if (!check_rb_operator(a, rb).passed())
    throw Error(Errc::NotRotaBaxter, "operator fails the weighted identities");

  const std::size_t n = a.dim;
  AlgebraSpec dbl =
      semidirect_product(a, coadjoint_rep(a), dual_basis_names(a.basis_names));

  Matrix bd(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    bd.at(i, n + i) = Scalar(1);
    bd.at(n + i, i) = Scalar(1);
  }

  // P (+) tilde(P)^*: identity action on the first block, dual of the tilde
  // operator on the second.
  Matrix tilde = -(rb.weight * Matrix::identity(n)) - rb.p;
  Matrix big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big.at(i, j) = rb.p.at(i, j);
      big.at(n + i, n + j) = tilde.at(j, i);
    }

  RotaBaxterData out(std::move(big), rb.weight, BilinearFormData{std::move(bd)});
  if (!check_quadratic_rb(dbl, out).passed())
    throw Error(Errc::InvalidAlgebra, "semidirect structure failed validation");
  return {std::move(dbl), std::move(out)};
}

FormTensors form_tensors(const BilinearFormData& f) {
  Matrix i_b = matrix_inverse(f.b.transpose());
  TwoTensor r_b(i_b.transpose());
  return {std::move(i_b), std::move(r_b)};
}

RotaBaxterData factorizable_to_qrb(const AlgebraSpec& a, const RMatrixData& r,
                                   const Scalar& lambda) {
  if (lambda.is_zero())
    throw Error(Errc::ZeroWeight, "the correspondence needs a nonzero weight");
  if (classify_r(a, r.r).label != RLabel::Factorizable)
    throw Error(Errc::NotFactorizable, "r is not factorizable");

  Matrix inv = matrix_inverse(r.i_r);
  Matrix p = -(lambda * (r.r_plus * inv));
  // <I_r^{-1} e_i, e_j> is entry (j,i) of the inverse; the inverse is
  // symmetric, so the form matrix is just -w times it.
  Matrix b = -(lambda * inv);
  RotaBaxterData out(std::move(p), lambda, BilinearFormData{std::move(b)});
  if (!check_quadratic_rb(a, out).passed())
    throw Error(Errc::InvalidAlgebra, "induced operator failed validation");
  return out;
}

RMatrixData qrb_to_factorizable(const AlgebraSpec& a, const RotaBaxterData& rb) {
  if (!rb.form)
    throw Error(Errc::NotQuadraticRB, "conversion requires a bilinear form");
  if (!check_quadratic_rb(a, rb).passed())
    throw Error(Errc::NotQuadraticRB, "quadratic compatibility fails");

  FormTensors ft = form_tensors(*rb.form);
  RMatrixData out(TwoTensor((rb.p * ft.i_b).transpose()));
  RLabel expect =
      rb.weight.is_zero() ? RLabel::Triangular : RLabel::Factorizable;
  if (classify_r(a, out.r).label != expect)
    throw Error(Errc::InvalidAlgebra, "induced tensor landed in the wrong class");
  return out;
}

Report diagram_check(const AlgebraSpec& a, const RMatrixData& r,
                     const Scalar& lambda) {
  Report out("diagram");
  RotaBaxterData fwd = factorizable_to_qrb(a, r, lambda);
  RMatrixData rt(r.r.tau());
  RotaBaxterData bwd = factorizable_to_qrb(a, rt, lambda);
  RotaBaxterData tld = tilde_operator(fwd);

  bool forms_match = bwd.form->b == fwd.form->b;
  bool tilde_match = bwd.p == tld.p;
  out.fact("transpose_gives_same_form", forms_match);
  out.fact("transpose_gives_tilde", tilde_match);
  if (!forms_match)
    out.add_violation("diagram_form", {}, flatten(bwd.form->b - fwd.form->b));
  if (!tilde_match)
    out.add_violation("diagram_tilde", {}, flatten(bwd.p - tld.p));

  RMatrixData back = qrb_to_factorizable(a, fwd);
  RMatrixData back_t = qrb_to_factorizable(a, tld);
  bool fwd_round = back.r == r.r;
  bool tau_round = back_t.r == rt.r;
  out.fact("round_trip_r", fwd_round);
  out.fact("round_trip_tau_r", tau_round);
  if (!fwd_round)
    out.add_violation("diagram_forward", {}, flatten(back.r.coeffs - r.r.coeffs));
  if (!tau_round)
    out.add_violation("diagram_back", {}, flatten(back_t.r.coeffs - rt.r.coeffs));
  return out;
}

Report rbfna0_check(const BilinearFormData& f, const TwoTensor& r,
                    const Scalar& lambda) {
  if (!f.symmetric() || !f.nondegenerate())
    throw Error(Errc::MissingForm, "needs a symmetric nondegenerate form");
  Report out("rbfna0");

  FormTensors ft = form_tensors(f);
  Matrix i_r = r.coeffs + r.coeffs.transpose();
  bool sym_side = i_r == -(lambda * ft.r_b.coeffs);

  // P_r = r_plus o I_B^{-1}; its standard matrix composes the transposes.
  Matrix p_r = r.coeffs.transpose() * f.b.transpose();
  bool compat_side = compat_residual(f.b, p_r, lambda).is_zero();

  out.fact("sym_matches_form", sym_side);
  out.fact("compat_holds", compat_side);
  out.fact("equivalence_holds", sym_side == compat_side);
  if (sym_side != compat_side) out.add_violation("rbfna0_equivalence", {}, {});
  return out;
}

Report descendent_iso_check(const AlgebraSpec& a, const TwoTensor& r,
                            const Scalar& lambda) {
  if (lambda.is_zero())
    throw Error(Errc::ZeroWeight, "the iso needs a nonzero weight");
  RMatrixData rm(r);
  RotaBaxterData rb = factorizable_to_qrb(a, rm, lambda);
  AlgebraSpec desc =
      descendent_algebra(a, RotaBaxterData(rb.p, rb.weight));

  AlgebraSpec dual = dual_products_and_homs(a, r).dual;

  Scalar coef = -(Scalar(1) / lambda);
  Matrix phi = coef * rm.i_r;

  Report out("descendent_iso");
  out.fact("bijective", rank(phi) == a.dim);
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i) {
    Vec fi = column_of(phi, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec fj = column_of(phi, j);
      Vec xb = basis_vec(n, i), yb = basis_vec(n, j);
      Vec rb_res = vec_sub(phi * dual.br(xb, yb), desc.br(fi, fj));
      if (!vec_is_zero(rb_res)) out.add_violation("iso_bracket", {i, j}, rb_res);
      Vec rp_res = vec_sub(phi * dual.mul(xb, yb), desc.mul(fi, fj));
      if (!vec_is_zero(rp_res)) out.add_violation("iso_product", {i, j}, rp_res);
    }
  }
  return out;
}

}  // namespace pybx
