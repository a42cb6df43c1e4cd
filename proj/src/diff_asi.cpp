#include "pybx/diff_asi.hpp"

#include <string>
#include <utility>
#include <vector>

#include "pybx/linalg.hpp"

namespace pybx {

namespace {

// (M (x) id) and (id (x) M) acting on a 2-tensor coefficient matrix.
Matrix act_first(const Matrix& m, const Matrix& t) { return m * t; }
Matrix act_second(const Matrix& t, const Matrix& m) { return t * m.transpose(); }

Vec column_of(const Matrix& m, std::size_t j) {
  Vec v(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

// Coefficient matrix of the coproduct image of basis element a.
Matrix coproduct_row(const Tensor3& D, std::size_t a) {
  const std::size_t n = D.dim();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = D.at(a, i, j);
  return out;
}

// Coefficient matrix of the coproduct image of an arbitrary vector.
Matrix coproduct_vec(const Tensor3& D, const Vec& v) {
  const std::size_t n = D.dim();
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (v[a].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.at(i, j) = out.at(i, j) + v[a] * D.at(a, i, j);
  }
  return out;
}

void require_square_family(const std::vector<Matrix>& fam, std::size_t n,
                           const char* what) {
  for (const Matrix& m : fam)
    if (m.rows() != n || m.cols() != n)
      throw Error(Errc::DimMismatch, std::string(what) +
                                         " must be square matrices of the "
                                         "algebra dimension");
}

void require_same_shape(const DiffASIBialgebra& b) {
  const std::size_t n = b.diff_alg.alg.dim;
  if (b.diff_coalg.dim != n || b.diff_coalg.Delta.dim() != n)
    throw Error(Errc::DimMismatch, "algebra and coalgebra dimensions differ");
  if (b.diff_alg.phi.size() != b.diff_coalg.psi.size())
    throw Error(Errc::DimMismatch,
                "derivation and coderivation families differ in size");
  require_square_family(b.diff_alg.phi, n, "derivations");
  require_square_family(b.diff_coalg.psi, n, "coderivations");
}

std::vector<Vec> basis_of(std::size_t n) {
  std::vector<Vec> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  return e;
}

constexpr const char* kLRForm = "id (x) L(u) - R(u) (x) id";

}  // namespace

Report check_diff_algebra(const DiffAlgebra& d) {
  const AlgebraSpec& a = d.alg;
  const std::size_t n = a.dim;
  require_square_family(d.phi, n, "derivations");

  Report rep;
  rep.title = "differential algebra audit";
  rep.fact("dim", std::to_string(n));
  rep.fact("derivations", std::to_string(d.phi.size()));
  rep.fact("commutative_flag", d.commutative);

  const Tensor3& pr = a.product;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec res(n, Scalar(0));
        bool bad = false;
        for (std::size_t t = 0; t < n; ++t) {
          Scalar v(0);
          for (std::size_t s = 0; s < n; ++s)
            v += pr.at(i, j, s) * pr.at(s, k, t) -
                 pr.at(j, k, s) * pr.at(i, s, t);
          res[t] = v;
          if (!v.is_zero()) bad = true;
        }
        if (bad) rep.add_violation("associativity", {i, j, k}, res);
      }
      if (d.commutative && i < j) {
        Vec res(n, Scalar(0));
        bool bad = false;
        for (std::size_t k = 0; k < n; ++k) {
          res[k] = pr.at(i, j, k) - pr.at(j, i, k);
          if (!res[k].is_zero()) bad = true;
        }
        if (bad) rep.add_violation("commutativity", {i, j}, res);
      }
    }

  const std::vector<Vec> e = basis_of(n);
  for (std::size_t k = 0; k < d.phi.size(); ++k) {
    const Matrix& f = d.phi[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = f * a.mul(e[i], e[j]);
        const Vec rhs = vec_add(a.mul(column_of(f, i), e[j]),
                                a.mul(e[i], column_of(f, j)));
        const Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) rep.add_violation("derivation", {k, i, j}, res);
      }
    for (std::size_t l = k + 1; l < d.phi.size(); ++l) {
      const Matrix comm = f * d.phi[l] - d.phi[l] * f;
      if (!comm.is_zero())
        rep.add_violation("commuting_derivations", {k, l}, flatten(comm));
    }
  }
  return rep;
}

Report check_diff_coalgebra(const DiffCoalgebra& c) {
  const std::size_t n = c.dim;
  if (c.Delta.dim() != n)
    throw Error(Errc::DimMismatch,
                "coproduct tensor dimension differs from the declared one");
  require_square_family(c.psi, n, "coderivations");

  Report rep;
  rep.title = "differential coalgebra audit";
  rep.fact("dim", std::to_string(n));
  rep.fact("coderivations", std::to_string(c.psi.size()));
  rep.fact("cocommutative_flag", c.cocommutative);

  const Tensor3& D = c.Delta;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Scalar lhs(0), rhs(0);
          for (std::size_t i = 0; i < n; ++i) {
            lhs += D.at(a, i, z) * D.at(i, x, y);
            rhs += D.at(a, x, i) * D.at(i, y, z);
          }
          const Scalar diff = lhs - rhs;
          if (!diff.is_zero())
            rep.add_violation("coassociativity", {a, x, y, z}, Vec{diff});
        }

  if (c.cocommutative)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const Scalar diff = D.at(a, i, j) - D.at(a, j, i);
          if (!diff.is_zero())
            rep.add_violation("cocommutativity", {a, i, j}, Vec{diff});
        }

  for (std::size_t k = 0; k < c.psi.size(); ++k) {
    const Matrix& g = c.psi[k];
    for (std::size_t a = 0; a < n; ++a) {
      const Matrix Da = coproduct_row(D, a);
      const Matrix res = coproduct_vec(D, column_of(g, a)) -
                         (act_first(g, Da) + act_second(Da, g));
      if (!res.is_zero()) rep.add_violation("coderivation", {k, a}, flatten(res));
    }
    for (std::size_t l = k + 1; l < c.psi.size(); ++l) {
      const Matrix comm = g * c.psi[l] - c.psi[l] * g;
      if (!comm.is_zero())
        rep.add_violation("commuting_coderivations", {k, l}, flatten(comm));
    }
  }
  return rep;
}

Report admissibility_audit(const DiffASIBialgebra& b) {
  require_same_shape(b);
  const AlgebraSpec& a = b.diff_alg.alg;
  const Tensor3& D = b.diff_coalg.Delta;
  const std::size_t n = a.dim;
  const std::size_t m = b.diff_alg.phi.size();

  Report rep;
  rep.title = "admissibility audit";
  rep.fact("pairs", std::to_string(m));

  const std::vector<Vec> e = basis_of(n);
  for (std::size_t k = 0; k < m; ++k) {
    const Matrix& f = b.diff_alg.phi[k];
    const Matrix& g = b.diff_coalg.psi[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec shifted = g * a.mul(e[i], e[j]);
        const Vec q1 = vec_sub(a.mul(column_of(g, i), e[j]),
                               vec_add(a.mul(e[i], column_of(f, j)), shifted));
        if (!vec_is_zero(q1)) rep.add_violation("qadm1", {k, i, j}, q1);
        const Vec q2 = vec_sub(a.mul(e[i], column_of(g, j)),
                               vec_add(a.mul(column_of(f, i), e[j]), shifted));
        if (!vec_is_zero(q2)) rep.add_violation("qadm2", {k, i, j}, q2);
      }
    for (std::size_t u = 0; u < n; ++u) {
      const Matrix Du = coproduct_row(D, u);
      const Matrix shifted = coproduct_vec(D, column_of(f, u));
      const Matrix p1 = act_first(f, Du) - act_second(Du, g) - shifted;
      if (!p1.is_zero()) rep.add_violation("psadm1", {k, u}, flatten(p1));
      const Matrix p2 = act_second(Du, f) - act_first(g, Du) - shifted;
      if (!p2.is_zero()) rep.add_violation("psadm2", {k, u}, flatten(p2));
    }
  }
  return rep;
}

Report check_diff_asi_bialgebra(const DiffASIBialgebra& b) {
  require_same_shape(b);
  const AlgebraSpec& a = b.diff_alg.alg;
  const Tensor3& D = b.diff_coalg.Delta;
  const std::size_t n = a.dim;

  Report rep;
  rep.title = "differential ASI bialgebra audit";
  rep.absorb(check_diff_algebra(b.diff_alg), "alg");
  rep.absorb(check_diff_coalgebra(b.diff_coalg), "coalg");

  std::vector<Matrix> rows, L, R;
  rows.reserve(n);
  L.reserve(n);
  R.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    rows.push_back(coproduct_row(D, u));
    L.push_back(a.lmul(u));
    R.push_back(a.rmul(u));
  }
  const std::vector<Vec> e = basis_of(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = coproduct_vec(D, a.mul(e[i], e[j]));
      const Matrix rhs =
          act_first(R[j], rows[i]) + act_second(rows[j], L[i]);
      const Matrix res = lhs - rhs;
      if (!res.is_zero()) rep.add_violation("asi_coproduct", {i, j}, flatten(res));

      const Matrix left = act_first(L[i], rows[j]) - act_second(rows[j], R[i]);
      const Matrix mirror =
          act_second(rows[i], R[j]) - act_first(L[j], rows[i]);
      const Matrix bal = left - mirror.transpose();
      if (!bal.is_zero()) rep.add_violation("asi_balance", {i, j}, flatten(bal));
    }

  rep.absorb(admissibility_audit(b), "adm");
  rep.fact("commutative_flag", b.diff_alg.commutative);
  rep.fact("cocommutative_flag", b.diff_coalg.cocommutative);
  return rep;
}

Report psi_admissible_aybe(const DiffAlgebra& d, const std::vector<Matrix>& psi,
                           const RMatrixData& r) {
  const std::size_t n = d.alg.dim;
  require_square_family(d.phi, n, "derivations");
  require_square_family(psi, n, "coderivations");
  if (psi.size() != d.phi.size())
    throw Error(Errc::DimMismatch,
                "derivation and coderivation families differ in size");
  if (r.r.dim() != n)
    throw Error(Errc::DimMismatch, "r dimension differs from the algebra");

  Report rep;
  rep.title = "derivation-compatible associative Yang-Baxter audit";

  const YBResiduals res = yb_residuals(d.alg, r.r);
  bool aybe_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!res.a.at(i, j, k).is_zero()) {
          aybe_ok = false;
          rep.add_violation("aybe", {i, j, k}, Vec{res.a.at(i, j, k)});
        }

  const Matrix& rm = r.r.coeffs;
  bool adm1 = true, adm2 = true;
  for (std::size_t k = 0; k < d.phi.size(); ++k) {
    const Matrix p1 = act_first(d.phi[k], rm) - act_second(rm, psi[k]);
    if (!p1.is_zero()) {
      adm1 = false;
      rep.add_violation("pqadm1", {k}, flatten(p1));
    }
    const Matrix p2 = act_first(psi[k], rm) - act_second(rm, d.phi[k]);
    if (!p2.is_zero()) {
      adm2 = false;
      rep.add_violation("pqadm2", {k}, flatten(p2));
    }
  }

  // Operator formulation, evaluated independently of the tensor sweeps.
  bool plus_ok = true, minus_ok = true;
  for (std::size_t k = 0; k < d.phi.size(); ++k) {
    if (!(d.phi[k] * r.r_plus - r.r_plus * psi[k].transpose()).is_zero())
      plus_ok = false;
    if (!(d.phi[k] * r.r_minus - r.r_minus * psi[k].transpose()).is_zero())
      minus_ok = false;
  }

  rep.fact("aybe", aybe_ok);
  rep.fact("pqadm1", adm1);
  rep.fact("pqadm2", adm2);
  rep.fact("plus_intertwines", plus_ok);
  rep.fact("minus_intertwines", minus_ok);
  rep.fact("plus_matches_pqadm2", plus_ok == adm2);
  rep.fact("minus_matches_pqadm1", minus_ok == adm1);
  const bool equiv = (adm1 && adm2) == (plus_ok && minus_ok);
  rep.fact("operator_equivalence", equiv);
  if (!equiv) rep.add_violation("operator_equivalence", {}, Vec{Scalar(1)});
  return rep;
}

Report fdt_factorization(const DiffAlgebra& d, const std::vector<Matrix>& psi,
                         const RMatrixData& r) {
  const AlgebraSpec& a = d.alg;
  const std::size_t n = a.dim;
  require_square_family(d.phi, n, "derivations");
  require_square_family(psi, n, "coderivations");
  if (r.r.dim() != n)
    throw Error(Errc::DimMismatch, "r dimension differs from the algebra");

  Report rep;
  rep.title = "factorization through the image of r";

  bool plus_der = true, minus_der = true;
  for (std::size_t k = 0; k < d.phi.size() && k < psi.size(); ++k) {
    const Matrix dp = d.phi[k] * r.r_plus - r.r_plus * psi[k].transpose();
    if (!dp.is_zero()) {
      plus_der = false;
      rep.add_violation("plus_derivation", {k}, flatten(dp));
    }
    const Matrix dm = d.phi[k] * r.r_minus - r.r_minus * psi[k].transpose();
    if (!dm.is_zero()) {
      minus_der = false;
      rep.add_violation("minus_derivation", {k}, flatten(dm));
    }
  }
  rep.fact("plus_derivation_maps", plus_der);
  rep.fact("minus_derivation_maps", minus_der);

  // Product on the dual side: x ._r y = R^*(r_plus x) y + L^*(r_minus y) x.
  const std::vector<Vec> e = basis_of(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod =
          vec_add(a.rmul_vec(column_of(r.r_plus, i)).transpose() * e[j],
                  a.lmul_vec(column_of(r.r_minus, j)).transpose() * e[i]);
      const Vec ph = vec_sub(r.r_plus * prod,
                             a.mul(column_of(r.r_plus, i), column_of(r.r_plus, j)));
      if (!vec_is_zero(ph)) rep.add_violation("plus_product_hom", {i, j}, ph);
      const Vec mh = vec_sub(r.r_minus * prod,
                             a.mul(column_of(r.r_minus, i), column_of(r.r_minus, j)));
      if (!vec_is_zero(mh)) rep.add_violation("minus_product_hom", {i, j}, mh);
    }

  const std::size_t rk = rank(r.i_r);
  rep.fact("i_r_rank", std::to_string(rk));
  rep.fact("i_r_invertible", rk == n);
  if (rk == n) {
    for (std::size_t t = 0; t < n; ++t) {
      const Vec z = solve(r.i_r, e[t]);
      const Vec back = vec_sub(r.r_plus * z, r.r_minus * z);
      const Vec resd = vec_sub(back, e[t]);
      if (!vec_is_zero(resd)) rep.add_violation("decomposition", {t}, resd);
    }
  } else {
    rep.add_violation("decomposition_rank", {},
                      Vec{Scalar(static_cast<long>(n - rk))});
  }
  return rep;
}

Classification classify_diff_r(const DiffAlgebra& d,
                               const std::vector<Matrix>& psi,
                               const RMatrixData& r) {
  const AlgebraSpec& a = d.alg;
  const std::size_t n = a.dim;
  require_square_family(d.phi, n, "derivations");
  require_square_family(psi, n, "coderivations");
  if (psi.size() != d.phi.size())
    throw Error(Errc::DimMismatch,
                "derivation and coderivation families differ in size");
  if (r.r.dim() != n)
    throw Error(Errc::DimMismatch, "r dimension differs from the algebra");

  Classification cls;
  const YBResiduals res = yb_residuals(a, r.r);
  cls.a_residual = res.a;
  cls.pybe_a = res.a.is_zero();

  const auto admissible = [&](const Matrix& rm) {
    for (std::size_t k = 0; k < d.phi.size(); ++k) {
      if (!(act_first(d.phi[k], rm) - act_second(rm, psi[k])).is_zero())
        return false;
      if (!(act_first(psi[k], rm) - act_second(rm, d.phi[k])).is_zero())
        return false;
    }
    return true;
  };
  // The bracket residual slot carries the derivation-compatibility verdict.
  cls.pybe_c = admissible(r.r.coeffs);

  const Matrix& S = r.s_plus;
  bool linv = true;
  for (std::size_t u = 0; u < n && linv; ++u)
    if (!(act_first(a.lmul(u), S) - act_second(S, a.rmul(u))).is_zero())
      linv = false;
  cls.s_l_invariant = linv;
  cls.s_ad_invariant = linv;  // mirrored; only left invariance enters here
  cls.antisymmetric = S.is_zero();
  cls.rank_s = rank(S);

  const bool self_qt = cls.pybe_a && cls.pybe_c && linv;
  const Matrix rt = r.r.coeffs.transpose();
  const bool tau_qt =
      yb_residuals(a, TwoTensor(rt)).a.is_zero() && admissible(rt) && linv;
  cls.tau_quasi_agrees = self_qt == tau_qt;
  cls.tau_factorizable_agrees =
      (self_qt && cls.rank_s == n) == (tau_qt && cls.rank_s == n);

  if (self_qt) {
    if (cls.antisymmetric)
      cls.label = RLabel::Triangular;
    else if (cls.rank_s == n)
      cls.label = RLabel::Factorizable;
    else
      cls.label = RLabel::QuasiTriangular;
  } else {
    cls.label = RLabel::NotSolution;
  }

  if (cls.label == RLabel::Factorizable &&
      !fdt_factorization(d, psi, r).passed())
    throw Error(Errc::InvalidAlgebra,
                "factorizable verdict contradicts the factorization audit");
  return cls;
}

Tensor3 diff_coboundary_coproduct(const AlgebraSpec& alg, const TwoTensor& r,
                                  bool left_right_form) {
  const std::size_t n = alg.dim;
  if (r.dim() != n)
    throw Error(Errc::DimMismatch, "r dimension differs from the algebra");
  Tensor3 out(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Matrix first = left_right_form ? alg.rmul(u) : alg.lmul(u);
    const Matrix Du =
        act_second(r.coeffs, alg.lmul(u)) - act_first(first, r.coeffs);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(u, i, j) = Du.at(i, j);
  }
  return out;
}

DiffDouble diff_drinfeld_double(const DiffASIBialgebra& b) {
  require_same_shape(b);
  if (!check_diff_asi_bialgebra(b).passed())
    throw Error(Errc::InvalidBialgebra,
                "the double needs a valid differential ASI bialgebra");

  const AlgebraSpec& a = b.diff_alg.alg;
  const Tensor3& mt = a.product;
  const Tensor3& Dt = b.diff_coalg.Delta;
  const std::size_t n = a.dim;
  const std::size_t N = 2 * n;

  // Mixed products forced by invariance of the hyperbolic pairing:
  // e_i . e_j^* pairs the dual left action with R^*, e_j^* . e_i mirrors it.
  Tensor3 pr(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        pr.at(i, j, k) = mt.at(i, j, k);
        pr.at(n + i, n + j, n + k) = Dt.at(k, i, j);
        pr.at(i, n + j, k) = Dt.at(i, j, k);
        pr.at(i, n + j, n + k) = mt.at(k, i, j);
        pr.at(n + j, i, k) = Dt.at(i, k, j);
        pr.at(n + j, i, n + k) = mt.at(i, k, j);
      }

  std::vector<std::string> names = a.basis_names;
  if (names.size() != n) names = default_basis_names(n);
  const std::vector<std::string> duals = dual_basis_names(names);
  names.insert(names.end(), duals.begin(), duals.end());
  AlgebraSpec dalg(N, Tensor3(N), std::move(pr), std::move(names));

  Matrix rc(N, N);
  for (std::size_t i = 0; i < n; ++i) rc.at(i, n + i) = Scalar(1);
  TwoTensor rcanon(std::move(rc));

  const Tensor3 Delta = diff_coboundary_coproduct(dalg, rcanon, true);

  const std::size_t m = b.diff_alg.phi.size();
  std::vector<Matrix> Phi(m, Matrix(N, N)), Psi(m, Matrix(N, N));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Phi[k].at(i, j) = b.diff_alg.phi[k].at(i, j);
        Phi[k].at(n + i, n + j) = b.diff_coalg.psi[k].at(j, i);
        Psi[k].at(i, j) = b.diff_coalg.psi[k].at(i, j);
        Psi[k].at(n + i, n + j) = b.diff_alg.phi[k].at(j, i);
      }

  // Flags reflect the constructed structure rather than a forecast.
  bool comm = true;
  for (std::size_t i = 0; i < N && comm; ++i)
    for (std::size_t j = 0; j < N && comm; ++j)
      for (std::size_t k = 0; k < N; ++k)
        if (dalg.product.at(i, j, k) != dalg.product.at(j, i, k)) {
          comm = false;
          break;
        }
  bool cocomm = true;
  for (std::size_t u = 0; u < N && cocomm; ++u)
    for (std::size_t i = 0; i < N && cocomm; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (Delta.at(u, i, j) != Delta.at(u, j, i)) {
          cocomm = false;
          break;
        }

  DiffDouble out{DiffASIBialgebra{DiffAlgebra{std::move(dalg), std::move(Phi), comm},
                                  DiffCoalgebra{N, Delta, std::move(Psi), cocomm}},
                 RMatrixData(rcanon)};

  if (!check_diff_asi_bialgebra(out.dbl).passed())
    throw Error(Errc::InvalidAlgebra, "double construction failed its own audit");
  const Classification cls =
      classify_diff_r(out.dbl.diff_alg, out.dbl.diff_coalg.psi, out.r_canon);
  if (cls.label != RLabel::Factorizable)
    throw Error(Errc::InvalidAlgebra, "double classification is not factorizable");
  return out;
}

FrobeniusData frobenius_tools(const DiffAlgebra& d, const BilinearFormData& f) {
  const AlgebraSpec& a = d.alg;
  const std::size_t n = a.dim;
  if (f.b.rows() != n || f.b.cols() != n)
    throw Error(Errc::DimMismatch, "form dimension differs from the algebra");
  require_square_family(d.phi, n, "derivations");
  if (!f.symmetric())
    throw Error(Errc::NotInvariant, "the form must be symmetric");
  if (!f.nondegenerate())
    throw Error(Errc::SingularMatrix, "the form must be nondegenerate");

  const Tensor3& pr = a.product;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs(0), rhs(0);
        for (std::size_t t = 0; t < n; ++t) {
          lhs += pr.at(i, j, t) * f.b.at(t, k);
          rhs += pr.at(j, k, t) * f.b.at(i, t);
        }
        if (lhs != rhs)
          throw Error(Errc::NotInvariant,
                      "the form is not invariant for the product");
      }

  FrobeniusData out{f, {}};
  const Matrix binv = matrix_inverse(f.b);
  out.phi_hat.reserve(d.phi.size());
  for (const Matrix& df : d.phi)
    out.phi_hat.push_back(binv * df.transpose() * f.b);

  // The adjoint must intertwine with the form iso bitwise.
  const FormTensors ft = form_tensors(f);
  for (std::size_t k = 0; k < d.phi.size(); ++k)
    if (!(d.phi[k] * ft.i_b - ft.i_b * out.phi_hat[k].transpose()).is_zero())
      throw Error(Errc::InvalidAlgebra,
                  "adjoint family failed the form-iso identity");
  return out;
}

Report dfof_check(const DiffAlgebra& d, const BilinearFormData& f,
                  const Matrix& p) {
  const std::size_t n = d.alg.dim;
  if (p.rows() != n || p.cols() != n)
    throw Error(Errc::DimMismatch, "operator dimension differs from the algebra");
  const FrobeniusData fro = frobenius_tools(d, f);
  const FormTensors ft = form_tensors(f);
  const Matrix r_plus = p * ft.i_b;

  Report rep;
  rep.title = "derivation transfer through the form iso";
  bool commute = true, intertwine = true;
  for (std::size_t k = 0; k < d.phi.size(); ++k) {
    if (!(d.phi[k] * p - p * d.phi[k]).is_zero()) commute = false;
    if (!(d.phi[k] * r_plus - r_plus * fro.phi_hat[k].transpose()).is_zero())
      intertwine = false;
  }
  rep.fact("p_commutes", commute);
  rep.fact("r_plus_intertwines", intertwine);
  rep.fact("equivalence_holds", commute == intertwine);
  if (commute != intertwine)
    rep.add_violation("dfof_equivalence", {}, Vec{Scalar(1)});
  return rep;
}

Report diff_rb_verify(const DiffAlgebra& d, const BilinearFormData& f,
                      const Matrix& p, const Scalar& lambda) {
  const AlgebraSpec& a = d.alg;
  const std::size_t n = a.dim;
  if (p.rows() != n || p.cols() != n || f.b.rows() != n || f.b.cols() != n)
    throw Error(Errc::DimMismatch,
                "operator or form dimension differs from the algebra");
  require_square_family(d.phi, n, "derivations");

  Report rep;
  rep.title = "symmetric Rota-Baxter differential Frobenius audit";
  rep.fact("weight", lambda.str());

  const bool sym = f.symmetric();
  const bool nondeg = f.nondegenerate();
  rep.fact("form_symmetric", sym);
  rep.fact("form_nondegenerate", nondeg);
  if (!sym)
    rep.add_violation("form_symmetric", {}, flatten(f.b - f.b.transpose()));
  if (!nondeg)
    rep.add_violation("form_rank", {},
                      Vec{Scalar(static_cast<long>(n - rank(f.b)))});

  bool invariant = true;
  const Tensor3& pr = a.product;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs(0), rhs(0);
        for (std::size_t t = 0; t < n; ++t) {
          lhs += pr.at(i, j, t) * f.b.at(t, k);
          rhs += pr.at(j, k, t) * f.b.at(i, t);
        }
        if (lhs != rhs) {
          invariant = false;
          rep.add_violation("frobenius", {i, j, k}, Vec{lhs - rhs});
        }
      }
  rep.fact("form_invariant", invariant);

  AlgebraSpec assoc(n, Tensor3(n), a.product, a.basis_names);
  rep.absorb(check_rb_operator(assoc, RotaBaxterData(p, lambda)), "rb");

  const Matrix compat = f.b * p + p.transpose() * f.b + lambda * f.b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!compat.at(i, j).is_zero())
        rep.add_violation("compat", {i, j}, Vec{compat.at(i, j)});

  bool pcomm = true;
  for (std::size_t k = 0; k < d.phi.size(); ++k) {
    const Matrix c = d.phi[k] * p - p * d.phi[k];
    if (!c.is_zero()) {
      pcomm = false;
      rep.add_violation("derivation_commute", {k}, flatten(c));
    }
  }
  rep.fact("p_commutes", pcomm);
  return rep;
}

DiffRBInduced diff_rb_to_r(const DiffAlgebra& d, const BilinearFormData& f,
                           const Matrix& p, const Scalar& lambda) {
  if (!diff_rb_verify(d, f, p, lambda).passed())
    throw Error(Errc::NotQuadraticRB,
                "the data is not a symmetric Rota-Baxter differential "
                "Frobenius structure");
  const FrobeniusData fro = frobenius_tools(d, f);
  const FormTensors ft = form_tensors(f);
  DiffRBInduced out{RMatrixData(TwoTensor((p * ft.i_b).transpose())),
                    fro.phi_hat};
  const Classification cls = classify_diff_r(d, out.psi, out.r);
  const RLabel expected =
      lambda.is_zero() ? RLabel::Triangular : RLabel::Factorizable;
  if (cls.label != expected)
    throw Error(Errc::InvalidAlgebra, "induced tensor missed its promised label");
  return out;
}

DiffRBRecovered diff_r_to_rb(const DiffAlgebra& d,
                             const std::vector<Matrix>& psi,
                             const RMatrixData& r, const Scalar& lambda) {
  if (lambda.is_zero())
    throw Error(Errc::ZeroWeight, "recovery needs a nonzero weight");
  const Classification cls = classify_diff_r(d, psi, r);
  if (cls.label != RLabel::Factorizable)
    throw Error(Errc::NotFactorizable, "recovery needs a factorizable tensor");

  const Matrix inv = matrix_inverse(r.i_r);
  DiffRBRecovered out{BilinearFormData{-(lambda * inv)},
                      -(lambda * (r.r_plus * inv)),
                      {},
                      Report{}};
  const FrobeniusData fro = frobenius_tools(d, out.form);
  out.psi_hat = fro.phi_hat;

  Report rep;
  rep.title = "recovered operator and form";
  rep.fact("weight", lambda.str());
  bool match = psi.size() == out.psi_hat.size();
  for (std::size_t k = 0; match && k < psi.size(); ++k)
    if (!(psi[k] == out.psi_hat[k])) {
      match = false;
      rep.add_violation("adjoint_mismatch", {k}, flatten(psi[k] - out.psi_hat[k]));
    }
  rep.fact("adjoint_equals_psi", match);
  rep.absorb(diff_rb_verify(d, out.form, out.p, lambda), "verify");
  out.confirmation = std::move(rep);
  return out;
}

AlgebraSpec induce_poisson_core(const DiffAlgebra& d) {
  const AlgebraSpec& a = d.alg;
  const std::size_t n = a.dim;
  if (d.phi.size() != 2)
    throw Error(Errc::MissingInput, "induction needs exactly two derivations");
  require_square_family(d.phi, n, "derivations");
  if (!d.commutative)
    throw Error(Errc::NotCommutative, "induction needs the commutative flag");
  if (!check_diff_algebra(d).passed())
    throw Error(Errc::InvalidAlgebra,
                "the differential algebra fails its own audit");

  Tensor3 br(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec v = vec_sub(a.mul(column_of(d.phi[0], i), column_of(d.phi[1], j)),
                            a.mul(column_of(d.phi[1], i), column_of(d.phi[0], j)));
      for (std::size_t k = 0; k < n; ++k) br.at(i, j, k) = v[k];
    }
  AlgebraSpec out(n, std::move(br), a.product, a.basis_names);
  if (!check_poisson(out).passed())
    throw Error(Errc::InvalidAlgebra, "induced bracket failed the Poisson audit");
  return out;
}

namespace {

struct InductionCore {
  AlgebraSpec alg;
  Tensor3 delta;
  Tensor3 Delta;
};

InductionCore build_induction(const DiffASIBialgebra& b, const TwoTensor& r) {
  require_same_shape(b);
  const DiffAlgebra& d = b.diff_alg;
  const DiffCoalgebra& c = b.diff_coalg;
  const std::size_t n = d.alg.dim;
  if (d.phi.size() != 2)
    throw Error(Errc::MissingInput,
                "induction needs exactly two derivation pairs");
  if (!d.commutative || !c.cocommutative)
    throw Error(Errc::NotCommutative,
                "induction needs commutative and cocommutative flags");
  if (r.dim() != n)
    throw Error(Errc::DimMismatch, "r dimension differs from the algebra");

  // Mixed second-order compositions must agree as multipliers.
  const Matrix E = c.psi[1] * d.phi[0] - c.psi[0] * d.phi[1];
  const std::vector<Vec> e = basis_of(n);
  for (std::size_t u = 0; u < n; ++u) {
    const Vec img = column_of(E, u);
    if (vec_is_zero(img)) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!vec_is_zero(d.alg.mul(img, e[j])))
        throw Error(Errc::VipViolated,
                    "mixed derivation compositions differ as multipliers");
  }

  InductionCore core{induce_poisson_core(d), Tensor3(n), Tensor3(n)};
  for (std::size_t u = 0; u < n; ++u) {
    const Matrix Du = coproduct_row(c.Delta, u);
    const Matrix M = c.psi[0] * Du * c.psi[1].transpose() -
                     c.psi[1] * Du * c.psi[0].transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) core.delta.at(u, i, j) = M.at(i, j);
  }
  core.Delta = diff_coboundary_coproduct(core.alg, r, true);
  return core;
}

}  // namespace

InducedPoisson induce_poisson_bialgebra(const DiffASIBialgebra& b,
                                        const RMatrixData& r) {
  const DiffAlgebra& d = b.diff_alg;
  const DiffCoalgebra& c = b.diff_coalg;
  InductionCore core = build_induction(b, r.r);
  const std::size_t n = core.alg.dim;
  const bool valid = check_diff_asi_bialgebra(b).passed();

  InducedPoisson out{BialgebraSpec(core.alg, core.delta, core.Delta),
                     classify_r(core.alg, r.r), Report{}};
  Report& diag = out.diagrams;
  diag.title = "induction diagram audit";
  diag.fact("coproduct_form", kLRForm);
  diag.fact("vip_holds", true);
  diag.fact("input_valid", valid);
  diag.fact("input_Delta_matches", core.Delta == c.Delta);

  const Classification dcls = classify_diff_r(d, c.psi, r);
  diag.fact("diff_label", rlabel_name(dcls.label));
  diag.fact("poisson_label", rlabel_name(out.cls.label));
  bool inherited = true;
  if (dcls.quasi_triangular())
    inherited = out.cls.quasi_triangular() && out.cls.label == dcls.label;
  diag.fact("label_inherited", inherited);
  if (!inherited) diag.add_violation("label_inheritance", {}, Vec{Scalar(1)});

  // Image-subalgebra diagram, meaningful in the factorizable case.
  const bool image_checked = valid && dcls.label == RLabel::Factorizable &&
                             out.cls.label == RLabel::Factorizable;
  diag.fact("image_diagram_checked", image_checked);
  if (image_checked) {
    const DualProducts dp = dual_products_and_homs(core.alg, r.r);
    diag.absorb(dp.hom_report, "image_hom");
    DiffAlgebra dual_diff{AlgebraSpec(n, Tensor3(n), dp.dual.product,
                                      dual_basis_names(core.alg.basis_names)),
                          {c.psi[0].transpose(), c.psi[1].transpose()},
                          true};
    const AlgebraSpec dual_induced = induce_poisson_core(dual_diff);
    const bool image_ok = dual_induced.bracket == dp.dual.bracket;
    if (!image_ok)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec diff(n, Scalar(0));
          bool bad = false;
          for (std::size_t k = 0; k < n; ++k) {
            diff[k] =
                dual_induced.bracket.at(i, j, k) - dp.dual.bracket.at(i, j, k);
            if (!diff[k].is_zero()) bad = true;
          }
          if (bad) diag.add_violation("image_bracket", {i, j}, diff);
        }
    diag.fact("image_diagram_holds", image_ok && dp.hom_report.passed());
  }

  // Double-then-induce against induce-then-double.
  const Matrix E = c.psi[1] * d.phi[0] - c.psi[0] * d.phi[1];
  bool vip1 = true;
  for (std::size_t u = 0; u < n && vip1; ++u)
    if (!(E * coproduct_row(c.Delta, u)).is_zero()) vip1 = false;
  diag.fact("vip1_holds", vip1);
  const bool run_double = valid && vip1;
  diag.fact("double_diagram_checked", run_double);
  if (run_double) {
    const DiffDouble dd = diff_drinfeld_double(b);
    const InductionCore left = build_induction(dd.dbl, dd.r_canon.r);
    const DrinfeldDouble pd = drinfeld_double(out.pb);
    const CoboundaryMaps cm = coboundary_maps(pd.dbl, pd.r_canon);
    const bool br_ok = left.alg.bracket == pd.dbl.bracket;
    const bool pr_ok = left.alg.product == pd.dbl.product;
    const bool de_ok = left.delta == cm.delta;
    const bool De_ok = left.Delta == cm.Delta;
    diag.fact("double_bracket_agrees", br_ok);
    diag.fact("double_product_agrees", pr_ok);
    diag.fact("double_delta_agrees", de_ok);
    diag.fact("double_Delta_agrees", De_ok);
    if (!br_ok) diag.add_violation("double_bracket", {}, Vec{Scalar(1)});
    if (!pr_ok) diag.add_violation("double_product", {}, Vec{Scalar(1)});
    if (!de_ok) diag.add_violation("double_delta", {}, Vec{Scalar(1)});
    if (!De_ok) diag.add_violation("double_Delta", {}, Vec{Scalar(1)});
  }
  return out;
}

}  // namespace pybx
