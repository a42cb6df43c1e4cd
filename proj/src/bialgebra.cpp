#include "pybx/bialgebra.hpp"

namespace pybx {

BialgebraSpec::BialgebraSpec(AlgebraSpec a, Tensor3 d, Tensor3 D)
    : alg(std::move(a)), delta(std::move(d)), Delta(std::move(D)) {
  if (delta.dim() != alg.dim || Delta.dim() != alg.dim)
    throw Error(Errc::DimMismatch, "cooperation tensor dimension mismatch");
}

AlgebraSpec BialgebraSpec::dual_algebra() const {
  const std::size_t n = alg.dim;
  Tensor3 br(n), pr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, j, k) = delta.at(k, i, j);
        pr.at(i, j, k) = Delta.at(k, i, j);
      }
  return AlgebraSpec(n, std::move(br), std::move(pr), dual_basis_names(alg.basis_names));
}

RMatrixData::RMatrixData(TwoTensor rr) : r(std::move(rr)) {
  r_plus = r.coeffs.transpose();
  r_minus = -r.coeffs;
  i_r = r_plus - r_minus;
  s_plus = Scalar(1, 2) * i_r;
}

const char* rlabel_name(RLabel l) {
  switch (l) {
    case RLabel::NotSolution: return "NotSolution";
    case RLabel::CoboundaryOnly: return "CoboundaryOnly";
    case RLabel::QuasiTriangular: return "QuasiTriangular";
    case RLabel::Triangular: return "Triangular";
    case RLabel::Factorizable: return "Factorizable";
  }
  return "Unknown";
}

// (M x id)(t) and (id x M)(t) for a 2-tensor t with coefficients t(p,q).
static Matrix act_first(const Matrix& m, const Matrix& t) { return m * t; }
static Matrix act_second(const Matrix& m, const Matrix& t) { return t * m.transpose(); }

// ---------------------------------------------------------------------------
// Bialgebra axioms
// ---------------------------------------------------------------------------

// delta(x) for a vector x, as the coefficient matrix of a 2-tensor.
static Matrix co_apply(const Tensor3& co, const Vec& x) {
  const std::size_t n = co.dim();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!co.at(k, i, j).is_zero()) out.at(i, j) += x[k] * co.at(k, i, j);
  }
  return out;
}

Report check_poisson_bialgebra(const BialgebraSpec& b) {
  Report out("poisson_bialgebra");
  const AlgebraSpec& A = b.alg;
  const std::size_t n = A.dim;

  out.absorb(check_poisson(A), "primal");
  out.absorb(check_poisson(b.dual_algebra()), "dual");

  std::vector<Matrix> ad(n), lm(n);
  for (std::size_t i = 0; i < n; ++i) {
    ad[i] = A.ad(i);
    lm[i] = A.lmul(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vec(n, i);
    Matrix di = co_apply(b.delta, ei), Di = co_apply(b.Delta, ei);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      Matrix dj = co_apply(b.delta, ej), Dj = co_apply(b.Delta, ej);

      // delta([e_i, e_j]) = (ad(e_i) x id + id x ad(e_i)) delta(e_j)
      //                   - (ad(e_j) x id + id x ad(e_j)) delta(e_i)
      Matrix lie = co_apply(b.delta, A.br(ei, ej)) -
                   (act_first(ad[i], dj) + act_second(ad[i], dj)) +
                   (act_first(ad[j], di) + act_second(ad[j], di));
      if (!lie.is_zero()) out.add_violation("lie_cocycle", {i, j}, flatten(lie));

      // Delta(e_i . e_j) = (L(e_i) x id) Delta(e_j) + (id x R(e_j)) Delta(e_i)
      Matrix inf = co_apply(b.Delta, A.mul(ei, ej)) - act_first(lm[i], Dj) -
                   act_second(A.rmul(j), Di);
      if (!inf.is_zero()) out.add_violation("coproduct_compat", {i, j}, flatten(inf));

      // delta(e_i . e_j) = (L(e_i) x id) delta(e_j) + (L(e_j) x id) delta(e_i)
      //                  + (id x ad(e_i)) Delta(e_j) + (id x ad(e_j)) Delta(e_i)
      Matrix mix1 = co_apply(b.delta, A.mul(ei, ej)) - act_first(lm[i], dj) -
                    act_first(lm[j], di) - act_second(ad[i], Dj) - act_second(ad[j], Di);
      if (!mix1.is_zero()) out.add_violation("mixed_product", {i, j}, flatten(mix1));

      // Delta([e_i, e_j]) = (ad(e_i) x id + id x ad(e_i)) Delta(e_j)
      //                   + (L(e_j) x id - id x L(e_j)) delta(e_i)
      Matrix mix2 = co_apply(b.Delta, A.br(ei, ej)) -
                    (act_first(ad[i], Dj) + act_second(ad[i], Dj)) -
                    (act_first(lm[j], di) - act_second(lm[j], di));
      if (!mix2.is_zero()) out.add_violation("mixed_bracket", {i, j}, flatten(mix2));
    }
  }
  return out;
}

BialgebraSpec transport_isomorphism(const BialgebraSpec& b, const Matrix& phi) {
  const std::size_t n = b.alg.dim;
  if (phi.rows() != n || phi.cols() != n)
    throw Error(Errc::DimMismatch, "transport map dimension mismatch");
  Matrix phi_inv = matrix_inverse(phi);
  Matrix phi_dual = phi.transpose();            // matrix of the dual map
  Matrix phi_dual_inv = phi_inv.transpose();

  AlgebraSpec dual = b.dual_algebra();
  Tensor3 br(n), pr(n), de(n), De(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec pi = phi_inv * basis_vec(n, i);
    Vec qi = phi_dual * basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec pj = phi_inv * basis_vec(n, j);
      Vec qj = phi_dual * basis_vec(n, j);
      Vec vb = phi * b.alg.br(pi, pj);
      Vec vp = phi * b.alg.mul(pi, pj);
      // Dual side: transported dual-algebra constants, re-expressed as
      // cooperation tensors below.
      Vec wb = phi_dual_inv * dual.br(qi, qj);
      Vec wp = phi_dual_inv * dual.mul(qi, qj);
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, j, k) = vb[k];
        pr.at(i, j, k) = vp[k];
        de.at(k, i, j) = wb[k];
        De.at(k, i, j) = wp[k];
      }
    }
  }
  AlgebraSpec alg(n, std::move(br), std::move(pr), b.alg.basis_names);
  return BialgebraSpec(std::move(alg), std::move(de), std::move(De));
}

CoboundaryMaps coboundary_maps(const AlgebraSpec& a, const TwoTensor& r) {
  const std::size_t n = a.dim;
  if (r.dim() != n) throw Error(Errc::DimMismatch, "r dimension mismatch");
  CoboundaryMaps cm{Tensor3(n), Tensor3(n)};
  for (std::size_t k = 0; k < n; ++k) {
    Matrix adk = a.ad(k), lk = a.lmul(k);
    // (id x ad(e_k) + ad(e_k) x id)(r) and (id x L(e_k) - L(e_k) x id)(r)
    Matrix d = act_second(adk, r.coeffs) + act_first(adk, r.coeffs);
    Matrix D = act_second(lk, r.coeffs) - act_first(lk, r.coeffs);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cm.delta.at(k, i, j) = d.at(i, j);
        cm.Delta.at(k, i, j) = D.at(i, j);
      }
  }
  return cm;
}

YBResiduals yb_residuals(const AlgebraSpec& a, const TwoTensor& r) {
  const std::size_t n = a.dim;
  if (r.dim() != n) throw Error(Errc::DimMismatch, "r dimension mismatch");
  YBResiduals res{Tensor3(n), Tensor3(n)};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& rpq = r.at(p, q);
      if (rpq.is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const Scalar& rst = r.at(s, t);
          if (rst.is_zero()) continue;
          Scalar w = rpq * rst;
          for (std::size_t k = 0; k < n; ++k) {
            // [r12, r13]: [a_p, a_s] (x) b_p (x) b_t
            const Scalar& c1 = a.bracket.at(p, s, k);
            if (!c1.is_zero()) res.c.at(k, q, t) += w * c1;
            // [r13, r23]: a_p (x) a_s (x) [b_p, b_t]
            const Scalar& c2 = a.bracket.at(q, t, k);
            if (!c2.is_zero()) res.c.at(p, s, k) += w * c2;
            // [r12, r23]: a_p (x) [b_p, a_s] (x) b_t
            const Scalar& c3 = a.bracket.at(q, s, k);
            if (!c3.is_zero()) res.c.at(p, k, t) += w * c3;
            // r12.r13: a_p a_s (x) b_p (x) b_t
            const Scalar& m1 = a.product.at(p, s, k);
            if (!m1.is_zero()) res.a.at(k, q, t) += w * m1;
            // r13.r23: a_p (x) a_s (x) b_p b_t
            const Scalar& m2 = a.product.at(q, t, k);
            if (!m2.is_zero()) res.a.at(p, s, k) += w * m2;
            // -r23.r12: a_s (x) b_s a_p ... with labels swapped this is
            // - a_p (x) a_s b_p (x) b_t after renaming (p,q)<->(s,t).
            const Scalar& m3 = a.product.at(s, q, k);
            if (!m3.is_zero()) res.a.at(p, k, t) -= w * m3;
          }
        }
    }
  return res;
}

// Applies M to one slot of a 3-tensor.
static Tensor3 act_slot(const Matrix& m, const Tensor3& t, int slot) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = t.at(i, j, k);
        if (v.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& mp = slot == 0 ? m.at(p, i) : slot == 1 ? m.at(p, j) : m.at(p, k);
          if (mp.is_zero()) continue;
          if (slot == 0)
            out.at(p, j, k) += mp * v;
          else if (slot == 1)
            out.at(i, p, k) += mp * v;
          else
            out.at(i, j, p) += mp * v;
        }
      }
  return out;
}

Report adl_invariance_audit(const AlgebraSpec& a, const TwoTensor& t) {
  Report out("adl_invariance");
  const std::size_t n = a.dim;
  if (t.dim() != n) throw Error(Errc::DimMismatch, "tensor dimension mismatch");

  bool direct_ok = true;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix adx = a.ad(x), lx = a.lmul(x);
    Matrix rb = act_first(adx, t.coeffs) + act_second(adx, t.coeffs);
    if (!rb.is_zero()) {
      direct_ok = false;
      out.add_violation("invariant_bracket", {x}, flatten(rb));
    }
    Matrix rp = act_first(lx, t.coeffs) - act_second(lx, t.coeffs);
    if (!rp.is_zero()) {
      direct_ok = false;
      out.add_violation("invariant_product", {x}, flatten(rp));
    }
  }
  out.fact("tensor_condition", direct_ok);

  if (!t.coeffs.is_symmetric()) {
    out.fact("symmetric_input", false);
    return out;
  }
  out.fact("symmetric_input", true);

  // Operator characterization: S+(ad^*(a) x^*) + [a, S+(x^*)] = 0 and
  // S+(L^*(a) x^*) - a . S+(x^*) = 0, evaluated pointwise on basis pairs.
  Matrix sp = t.coeffs.transpose();  // map A^* -> A of the symmetric tensor
  bool op_ok = true;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix adx = a.ad(x), lx = a.lmul(x);
    for (std::size_t b = 0; b < n; ++b) {
      Vec xb = basis_vec(n, b);
      Vec r1 = vec_add(sp * (adx.transpose() * xb), adx * (sp * xb));
      if (!vec_is_zero(r1)) {
        op_ok = false;
        out.add_violation("module_map_bracket", {x, b}, r1);
      }
      Vec r2 = vec_sub(sp * (lx.transpose() * xb), lx * (sp * xb));
      if (!vec_is_zero(r2)) {
        op_ok = false;
        out.add_violation("module_map_product", {x, b}, r2);
      }
    }
  }
  out.fact("operator_condition", op_ok);

  // Pairing characterization: ad^*(S+ x^*) y^* + ad^*(S+ y^*) x^* = 0 and
  // L^*(S+ x^*) y^* - L^*(S+ y^*) x^* = 0.
  bool pair_ok = true;
  for (std::size_t b = 0; b < n; ++b) {
    Vec xb = basis_vec(n, b);
    Vec sxb = sp * xb;
    for (std::size_t c = 0; c < n; ++c) {
      Vec xc = basis_vec(n, c);
      Vec sxc = sp * xc;
      Vec r1 = vec_add(a.ad_vec(sxb).transpose() * xc, a.ad_vec(sxc).transpose() * xb);
      if (!vec_is_zero(r1)) {
        pair_ok = false;
        out.add_violation("pairing_bracket", {b, c}, r1);
      }
      Vec r2 = vec_sub(a.lmul_vec(sxb).transpose() * xc, a.lmul_vec(sxc).transpose() * xb);
      if (!vec_is_zero(r2)) {
        pair_ok = false;
        out.add_violation("pairing_product", {b, c}, r2);
      }
    }
  }
  out.fact("pairing_condition", pair_ok);
  out.fact("characterizations_agree",
           direct_ok == op_ok && op_ok == pair_ok);
  return out;
}

Classification classify_r(const AlgebraSpec& a, const TwoTensor& r) {
  const std::size_t n = a.dim;
  if (r.dim() != n) throw Error(Errc::DimMismatch, "r dimension mismatch");
  Classification cls;
  SymSplit parts = split_two_tensor(r);
  const Matrix& S = parts.sym.coeffs;

  YBResiduals res = yb_residuals(a, r);
  cls.c_residual = res.c;
  cls.a_residual = res.a;
  cls.pybe_c = res.c.is_zero();
  cls.pybe_a = res.a.is_zero();

  cls.cbd_sym_ad = true;
  cls.cbd_sym_l = true;
  cls.cbd_c_inv = true;
  cls.cbd_a_inv = true;
  cls.cbd_mixed = true;
  for (std::size_t x = 0; x < n && (cls.cbd_sym_ad || cls.cbd_sym_l || cls.cbd_c_inv ||
                                    cls.cbd_a_inv || cls.cbd_mixed);
       ++x) {
    Matrix adx = a.ad(x), lx = a.lmul(x);
    if (cls.cbd_sym_ad && !(act_first(adx, S) + act_second(adx, S)).is_zero())
      cls.cbd_sym_ad = false;
    if (cls.cbd_sym_l && !(act_first(lx, S) - act_second(lx, S)).is_zero())
      cls.cbd_sym_l = false;
    if (cls.cbd_c_inv) {
      Tensor3 sweep = tensor3_add(tensor3_add(act_slot(adx, res.c, 0), act_slot(adx, res.c, 1)),
                                  act_slot(adx, res.c, 2));
      if (!sweep.is_zero()) cls.cbd_c_inv = false;
    }
    if (cls.cbd_a_inv) {
      Tensor3 sweep = tensor3_sub(act_slot(lx, res.a, 0), act_slot(lx, res.a, 2));
      if (!sweep.is_zero()) cls.cbd_a_inv = false;
    }
    if (cls.cbd_mixed) {
      Tensor3 sweep = tensor3_sub(act_slot(adx, res.a, 0),
                                  tensor3_sub(act_slot(lx, res.c, 1), act_slot(lx, res.c, 2)));
      if (!sweep.is_zero()) cls.cbd_mixed = false;
    }
  }

  // Conditions (1) and (2) applied to S are exactly (ad, L)-invariance of the
  // symmetric part, so the quasi-triangularity flags alias them.
  cls.s_ad_invariant = cls.cbd_sym_ad;
  cls.s_l_invariant = cls.cbd_sym_l;

  cls.antisymmetric = parts.sym.coeffs.is_zero();
  cls.rank_s = rank(S);

  auto label_of = [&](bool qt, bool anti, std::size_t rk) {
    if (qt) {
      if (anti) return RLabel::Triangular;
      if (rk == n) return RLabel::Factorizable;
      return RLabel::QuasiTriangular;
    }
    return RLabel::NotSolution;
  };

  bool qt = cls.pybe() && cls.s_ad_invariant && cls.s_l_invariant;
  if (qt)
    cls.label = label_of(true, cls.antisymmetric, cls.rank_s);
  else if (cls.coboundary_ok())
    cls.label = RLabel::CoboundaryOnly;
  else
    cls.label = RLabel::NotSolution;

  // tau(r) must land in the same quasi-triangular / factorizable classes.
  TwoTensor rt = r.tau();
  YBResiduals rest = yb_residuals(a, rt);
  // The symmetric part and its invariance are shared with r.
  bool qt_tau = rest.c.is_zero() && rest.a.is_zero() && cls.s_ad_invariant &&
                cls.s_l_invariant;
  cls.tau_quasi_agrees = qt == qt_tau;
  cls.tau_factorizable_agrees =
      (qt && cls.rank_s == n) == (qt_tau && cls.rank_s == n);
  return cls;
}

// Structure constants of [,]_r and ._r on A^*.
static void dual_structure_tensors(const AlgebraSpec& a, const TwoTensor& r,
                                   Tensor3& br, Tensor3& pr) {
  const std::size_t n = a.dim;
  RMatrixData rm(r);
  br = Tensor3(n);
  pr = Tensor3(n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec xb = basis_vec(n, b);
    Vec rpb = rm.r_plus * xb, rmb = rm.r_minus * xb;
    Matrix ad_rpb_t = a.ad_vec(rpb).transpose();
    Matrix l_rpb_t = a.lmul_vec(rpb).transpose();
    for (std::size_t c = 0; c < n; ++c) {
      Vec xc = basis_vec(n, c);
      Vec rmc = rm.r_minus * xc;
      // [x_b^*, x_c^*]_r = -ad^*(r+(x_b^*)) x_c^* + ad^*(r-(x_c^*)) x_b^*
      Vec vb = vec_add(vec_scale(Scalar(-1), ad_rpb_t * xc),
                       a.ad_vec(rmc).transpose() * xb);
      // x_b^* ._r x_c^* = L^*(r+(x_b^*)) x_c^* + L^*(r-(x_c^*)) x_b^*
      Vec vp = vec_add(l_rpb_t * xc, a.lmul_vec(rmc).transpose() * xb);
      for (std::size_t k = 0; k < n; ++k) {
        br.at(b, c, k) = vb[k];
        pr.at(b, c, k) = vp[k];
      }
    }
  }
}

// Homomorphism residuals of f: (A^*, [,]_r, ._r) -> A on all basis pairs.
static bool map_is_hom(const AlgebraSpec& a, const AlgebraSpec& dual,
                       const Matrix& f) {
  const std::size_t n = a.dim;
  for (std::size_t b = 0; b < n; ++b) {
    Vec xb = basis_vec(n, b);
    Vec fb = f * xb;
    for (std::size_t c = 0; c < n; ++c) {
      Vec xc = basis_vec(n, c);
      Vec fc = f * xc;
      if (!vec_is_zero(vec_sub(f * dual.br(xb, xc), a.br(fb, fc)))) return false;
      if (!vec_is_zero(vec_sub(f * dual.mul(xb, xc), a.mul(fb, fc)))) return false;
    }
  }
  return true;
}

FourWay four_way_equivalence(const AlgebraSpec& a, const TwoTensor& r) {
  FourWay fw;
  YBResiduals res = yb_residuals(a, r);
  fw.pybe_r = res.c.is_zero() && res.a.is_zero();
  YBResiduals rest = yb_residuals(a, r.tau());
  fw.pybe_tau = rest.c.is_zero() && rest.a.is_zero();

  const std::size_t n = a.dim;
  RMatrixData rm(r);
  Tensor3 br, pr;
  dual_structure_tensors(a, r, br, pr);
  AlgebraSpec dual(n, br, pr, dual_basis_names(a.basis_names));
  fw.plus_hom = map_is_hom(a, dual, rm.r_plus);

  // The r_minus equations swap r_plus and r_minus inside the arguments while
  // keeping r_minus outside.
  bool minus_ok = true;
  for (std::size_t b = 0; b < n && minus_ok; ++b) {
    Vec xb = basis_vec(n, b);
    Vec fb = rm.r_minus * xb;
    for (std::size_t c = 0; c < n && minus_ok; ++c) {
      Vec xc = basis_vec(n, c);
      Vec fc = rm.r_minus * xc;
      // [r-(x*), r-(y*)] = r-(-ad^*(r-(x*)) y* + ad^*(r+(y*)) x*)
      Vec arg_b = vec_add(vec_scale(Scalar(-1), a.ad_vec(fb).transpose() * xc),
                          a.ad_vec(rm.r_plus * xc).transpose() * xb);
      if (!vec_is_zero(vec_sub(a.br(fb, fc), rm.r_minus * arg_b))) minus_ok = false;
      // r-(x*) . r-(y*) = r-(L^*(r-(x*)) y* + L^*(r+(y*)) x*)
      Vec arg_p = vec_add(a.lmul_vec(fb).transpose() * xc,
                          a.lmul_vec(rm.r_plus * xc).transpose() * xb);
      if (!vec_is_zero(vec_sub(a.mul(fb, fc), rm.r_minus * arg_p))) minus_ok = false;
    }
  }
  fw.minus_hom = minus_ok;
  return fw;
}

DualProducts dual_products_and_homs(const AlgebraSpec& a, const TwoTensor& r) {
  SymSplit parts = split_two_tensor(r);
  Report inv = adl_invariance_audit(a, parts.sym);
  if (!inv.passed())
    throw Error(Errc::NotInvariant, "symmetric part of r is not invariant");

  const std::size_t n = a.dim;
  Tensor3 br, pr;
  dual_structure_tensors(a, r, br, pr);
  DualProducts dp{AlgebraSpec(n, br, pr, dual_basis_names(a.basis_names)),
                  Report("dual_products_homs")};

  YBResiduals res = yb_residuals(a, r);
  bool pybe = res.c.is_zero() && res.a.is_zero();
  RMatrixData rm(r);
  bool dual_poisson = check_poisson(dp.dual).passed();
  bool plus_hom = map_is_hom(a, dp.dual, rm.r_plus);
  bool minus_hom = map_is_hom(a, dp.dual, rm.r_minus);
  bool hom_side = dual_poisson && plus_hom && minus_hom;

  dp.hom_report.fact("pybe", pybe);
  dp.hom_report.fact("dual_poisson", dual_poisson);
  dp.hom_report.fact("r_plus_hom", plus_hom);
  dp.hom_report.fact("r_minus_hom", minus_hom);
  dp.hom_report.fact("equivalence_holds", pybe == hom_side);
  if (pybe != hom_side)
    dp.hom_report.add_violation("hom_equivalence", {}, {});
  return dp;
}

Report modified_rb_identities(const AlgebraSpec& a, const BilinearFormData& f,
                              const TwoTensor& r) {
  Report out("modified_rb");
  Report quad = check_quadratic(a, f);
  if (!quad.passed())
    throw Error(Errc::NotInvariant, "form is not a quadratic structure");

  const std::size_t n = a.dim;
  RMatrixData rm(r);
  Matrix ib_inv = f.b.transpose();       // standard matrix of I_B^{-1}
  Matrix P = rm.r_plus * ib_inv;
  Matrix Q = rm.i_r * ib_inv;            // I_r o I_B^{-1}

  bool identities_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ea = basis_vec(n, i);
    Vec pa = P * ea;
    for (std::size_t j = 0; j < n; ++j) {
      Vec eb = basis_vec(n, j);
      Vec pb = P * eb, qb = Q * eb;
      Vec lhs_b = a.br(pa, pb);
      Vec rhs_b = P * vec_sub(vec_add(a.br(pa, eb), a.br(ea, pb)), a.br(ea, qb));
      if (!vec_is_zero(vec_sub(lhs_b, rhs_b))) {
        identities_ok = false;
        out.add_violation("modified_bracket", {i, j}, vec_sub(lhs_b, rhs_b));
      }
      Vec lhs_p = a.mul(pa, pb);
      Vec rhs_p = P * vec_sub(vec_add(a.mul(pa, eb), a.mul(ea, pb)), a.mul(ea, qb));
      if (!vec_is_zero(vec_sub(lhs_p, rhs_p))) {
        identities_ok = false;
        out.add_violation("modified_product", {i, j}, vec_sub(lhs_p, rhs_p));
      }
    }
  }
  YBResiduals res = yb_residuals(a, r);
  bool pybe = res.c.is_zero() && res.a.is_zero();
  out.fact("identities_hold", identities_ok);
  out.fact("pybe", pybe);
  out.fact("equivalence_holds", identities_ok == pybe);
  if (identities_ok != pybe) out.add_violation("modified_rb_equivalence", {}, {});
  return out;
}

FactorizePair factorize(const AlgebraSpec& a, const TwoTensor& r, const Vec& x) {
  Classification cls = classify_r(a, r);
  if (cls.label != RLabel::Factorizable)
    throw Error(Errc::NotFactorizable, "r is not factorizable");
  RMatrixData rm(r);
  Vec w = solve(rm.i_r, x);
  return FactorizePair{rm.r_plus * w, rm.r_minus * w};
}

DrinfeldDouble drinfeld_double(const BialgebraSpec& b) {
  Report valid = check_poisson_bialgebra(b);
  if (!valid.passed())
    throw Error(Errc::InvalidBialgebra, "input is not a Poisson bialgebra");

  const std::size_t n = b.alg.dim, N = 2 * n;
  AlgebraSpec dual = b.dual_algebra();
  Tensor3 br(N), pr(N);

  // For basis vectors the mutual actions reduce to structure constants:
  //   ad^*_{A}(e_i) e_j^*  has A^*-coordinates -(bracket(i, -, j)),
  //   ad^*_{A^*}(e_i^*) e_j has A-coordinates  -(delta-side constants).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, j, k) = b.alg.bracket.at(i, j, k);
        pr.at(i, j, k) = b.alg.product.at(i, j, k);
        br.at(n + i, n + j, n + k) = dual.bracket.at(i, j, k);
        pr.at(n + i, n + j, n + k) = dual.product.at(i, j, k);
      }

  // Cross blocks.  With f^* the plain dual map (matrix transpose):
  //   [e_i, e_j^*] = ( ad^*_{A^*}(e_j^*) e_i, -ad^*_A(e_i) e_j^* )
  //   e_i . e_j^*  = ( L^*_{A^*}(e_j^*) e_i,  L^*_A(e_i) e_j^* ), symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adA = b.alg.ad(i);      // bracket action of e_i on A
    Matrix lA = b.alg.lmul(i);     // product action of e_i on A
    for (std::size_t j = 0; j < n; ++j) {
      Matrix adD = dual.ad(j);     // bracket action of e_j^* on A^*
      Matrix lD = dual.lmul(j);
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, n + j, k) = adD.at(i, k);
        br.at(i, n + j, n + k) = -adA.at(j, k);
        br.at(n + j, i, k) = -adD.at(i, k);
        br.at(n + j, i, n + k) = adA.at(j, k);
        pr.at(i, n + j, k) = lD.at(i, k);
        pr.at(i, n + j, n + k) = lA.at(j, k);
        pr.at(n + j, i, k) = lD.at(i, k);
        pr.at(n + j, i, n + k) = lA.at(j, k);
      }
    }
  }

  std::vector<std::string> names = b.alg.basis_names;
  for (const auto& s : dual.basis_names) names.push_back(s);
  AlgebraSpec dbl(N, std::move(br), std::move(pr), std::move(names));

  TwoTensor rc(N);
  for (std::size_t i = 0; i < n; ++i) rc.at(i, n + i) = Scalar(1);
  Classification cls = classify_r(dbl, rc);
  return DrinfeldDouble{std::move(dbl), std::move(rc), std::move(cls)};
}

}  // namespace pybx
