#include "pybx/poisson.hpp"

namespace pybx {

std::vector<std::string> default_basis_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

std::vector<std::string> dual_basis_names(const std::vector<std::string>& names) {
  std::vector<std::string> duals;
  duals.reserve(names.size());
  for (const auto& s : names) duals.push_back(s + "*");
  return duals;
}

AlgebraSpec::AlgebraSpec(std::size_t n, Tensor3 br, Tensor3 pr,
                         std::vector<std::string> names)
    : dim(n), bracket(std::move(br)), product(std::move(pr)), basis_names(std::move(names)) {
  if (bracket.dim() != n || product.dim() != n)
    throw Error(Errc::DimMismatch, "structure tensor dimension mismatch");
  if (basis_names.empty()) basis_names = default_basis_names(n);
  if (basis_names.size() != n)
    throw Error(Errc::DimMismatch, "basis name count mismatch");
}

static Matrix left_slot_operator(const Tensor3& t, std::size_t i) {
  Matrix m(t.dim(), t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j)
    for (std::size_t k = 0; k < t.dim(); ++k) m.at(k, j) = t.at(i, j, k);
  return m;
}

static Matrix right_slot_operator(const Tensor3& t, std::size_t i) {
  Matrix m(t.dim(), t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j)
    for (std::size_t k = 0; k < t.dim(); ++k) m.at(k, j) = t.at(j, i, k);
  return m;
}

Matrix AlgebraSpec::ad(std::size_t i) const { return left_slot_operator(bracket, i); }
Matrix AlgebraSpec::lmul(std::size_t i) const { return left_slot_operator(product, i); }
Matrix AlgebraSpec::rmul(std::size_t i) const { return right_slot_operator(product, i); }

static Matrix vec_operator(const Tensor3& t, const Vec& x, bool left_slot) {
  const std::size_t n = t.dim();
  if (x.size() != n) throw Error(Errc::DimMismatch, "operator argument dimension mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = left_slot ? t.at(i, j, k) : t.at(j, i, k);
        if (!c.is_zero()) m.at(k, j) += x[i] * c;
      }
  }
  return m;
}

Matrix AlgebraSpec::ad_vec(const Vec& x) const { return vec_operator(bracket, x, true); }
Matrix AlgebraSpec::lmul_vec(const Vec& x) const { return vec_operator(product, x, true); }
Matrix AlgebraSpec::rmul_vec(const Vec& x) const { return vec_operator(product, x, false); }

Matrix Representation::rho_vec(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m = m + x[i] * rho[i];
  return m;
}

Matrix Representation::mu_vec(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m = m + x[i] * mu[i];
  return m;
}

MultiplicationOperators multiplication_operators(const AlgebraSpec& a) {
  MultiplicationOperators ops;
  for (std::size_t i = 0; i < a.dim; ++i) {
    ops.ad.push_back(a.ad(i));
    ops.left.push_back(a.lmul(i));
    ops.right.push_back(a.rmul(i));
  }
  return ops;
}

Report check_poisson(const AlgebraSpec& a) {
  Report rep("poisson_axioms");
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec res(n);
      for (std::size_t k = 0; k < n; ++k)
        res[k] = a.bracket.at(i, j, k) + a.bracket.at(j, i, k);
      if (!vec_is_zero(res)) rep.add_violation("bracket_antisymmetry", {i, j}, res);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec res(n);
      for (std::size_t k = 0; k < n; ++k)
        res[k] = a.product.at(i, j, k) - a.product.at(j, i, k);
      if (!vec_is_zero(res)) rep.add_violation("product_commutativity", {i, j}, res);
    }
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = basis_vec(n, k);
        Vec jac = vec_add(a.br(a.br(ei, ej), ek),
                          vec_add(a.br(a.br(ej, ek), ei), a.br(a.br(ek, ei), ej)));
        if (!vec_is_zero(jac)) rep.add_violation("jacobi", {i, j, k}, jac);
        Vec assoc = vec_sub(a.mul(a.mul(ei, ej), ek), a.mul(ei, a.mul(ej, ek)));
        if (!vec_is_zero(assoc)) rep.add_violation("associativity", {i, j, k}, assoc);
        Vec leib = vec_sub(a.br(ei, a.mul(ej, ek)),
                           vec_add(a.mul(a.br(ei, ej), ek), a.mul(ej, a.br(ei, ek))));
        if (!vec_is_zero(leib)) rep.add_violation("leibniz", {i, j, k}, leib);
      }
    }
  }
  return rep;
}

Report check_representation(const AlgebraSpec& a, const Representation& rep) {
  Report out("representation_axioms");
  const std::size_t n = a.dim;
  if (rep.rho.size() != n || rep.mu.size() != n)
    throw Error(Errc::DimMismatch, "representation operator count mismatch");
  if (!check_poisson(a).passed())
    throw Error(Errc::InvalidAlgebra, "base algebra fails the Poisson axioms");
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      Matrix lie = rep.rho_vec(a.br(ei, ej)) -
                   (rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i]);
      if (!lie.is_zero()) out.add_violation("rep_bracket", {i, j}, flatten(lie));
      Matrix assoc = rep.mu_vec(a.mul(ei, ej)) - rep.mu[i] * rep.mu[j];
      if (!assoc.is_zero()) out.add_violation("rep_product", {i, j}, flatten(assoc));
      Matrix mixr = rep.rho_vec(a.mul(ei, ej)) -
                    (rep.mu[j] * rep.rho[i] + rep.mu[i] * rep.rho[j]);
      if (!mixr.is_zero()) out.add_violation("rep_mixed_rho", {i, j}, flatten(mixr));
      Matrix mixm = rep.mu_vec(a.br(ei, ej)) -
                    (rep.rho[i] * rep.mu[j] - rep.mu[j] * rep.rho[i]);
      if (!mixm.is_zero()) out.add_violation("rep_mixed_mu", {i, j}, flatten(mixm));
    }
  }
  return out;
}

AlgebraSpec semidirect_product(const AlgebraSpec& a, const Representation& rep,
                               std::vector<std::string> v_names) {
  const std::size_t n = a.dim, m = rep.dimV, N = n + m;
  if (!check_representation(a, rep).passed())
    throw Error(Errc::InvalidRepresentation,
                "operators fail the representation conditions");
  Tensor3 br(N), pr(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, j, k) = a.bracket.at(i, j, k);
        pr.at(i, j, k) = a.product.at(i, j, k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        // [e_i, v_b] and e_i . v_b land in V.
        br.at(i, n + b, n + c) = rep.rho[i].at(c, b);
        br.at(n + b, i, n + c) = -rep.rho[i].at(c, b);
        pr.at(i, n + b, n + c) = rep.mu[i].at(c, b);
        pr.at(n + b, i, n + c) = rep.mu[i].at(c, b);
      }
  if (v_names.empty())
    for (std::size_t b = 0; b < m; ++b) v_names.push_back("v" + std::to_string(b + 1));
  if (v_names.size() != m) throw Error(Errc::DimMismatch, "module name count mismatch");
  std::vector<std::string> names = a.basis_names;
  names.insert(names.end(), v_names.begin(), v_names.end());
  return AlgebraSpec(N, std::move(br), std::move(pr), std::move(names));
}

Representation coadjoint_rep(const AlgebraSpec& a) {
  Representation rep;
  rep.dimV = a.dim;
  for (std::size_t i = 0; i < a.dim; ++i) {
    rep.rho.push_back(-a.ad(i).transpose());
    rep.mu.push_back(a.lmul(i).transpose());
  }
  return rep;
}

// Shared by check_quadratic and the bsharp converse: the two associativity /
// ad-invariance families for an arbitrary (not necessarily symmetric) form.
static void check_form_invariance(const AlgebraSpec& a, const Matrix& b,
                                  const std::string& tag, Report& out) {
  const std::size_t n = a.dim;
  auto B = [&](const Vec& x, const Vec& y) {
    Scalar s;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (!b.at(p, q).is_zero()) s += x[p] * b.at(p, q) * y[q];
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vec(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vec(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = basis_vec(n, k);
        Scalar br_res = B(a.br(ei, ej), ek) - B(ei, a.br(ej, ek));
        if (!br_res.is_zero()) out.add_violation(tag + "_bracket", {i, j, k}, {br_res});
        Scalar pr_res = B(a.mul(ei, ej), ek) - B(ei, a.mul(ej, ek));
        if (!pr_res.is_zero()) out.add_violation(tag + "_product", {i, j, k}, {pr_res});
      }
    }
  }
}

// Residuals of the intertwining equations iso o ad(x) = -ad^*(x) o iso and
// iso o L(x) = L^*(x) o iso for basis x.
static void check_intertwine(const AlgebraSpec& a, const Matrix& iso,
                             const std::string& tag, Report& out) {
  for (std::size_t x = 0; x < a.dim; ++x) {
    Matrix adx = a.ad(x), lx = a.lmul(x);
    Matrix rb = iso * adx + adx.transpose() * iso;
    if (!rb.is_zero()) out.add_violation(tag + "_bracket", {x}, flatten(rb));
    Matrix rp = iso * lx - lx.transpose() * iso;
    if (!rp.is_zero()) out.add_violation(tag + "_product", {x}, flatten(rp));
  }
}

Report check_quadratic(const AlgebraSpec& a, const BilinearFormData& f) {
  Report out("quadratic_form");
  const std::size_t n = a.dim;
  if (f.b.rows() != n || f.b.cols() != n)
    throw Error(Errc::DimMismatch, "form dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar res = f.b.at(i, j) - f.b.at(j, i);
      if (!res.is_zero()) out.add_violation("form_symmetry", {i, j}, {res});
    }
  std::size_t rk = rank(f.b);
  out.fact("form_rank", std::to_string(rk));
  if (rk != n) out.add_violation("form_nondegenerate", {}, {});
  check_form_invariance(a, f.b, "invariance", out);

  // The pairing map a |-> B(a, -) intertwines (ad, L) with the coadjoint
  // actions exactly when B is invariant; recorded as its own flag.
  Report iso("bsharp");
  check_intertwine(a, f.b.transpose(), "intertwine", iso);
  out.fact("bsharp_intertwines", iso.passed());
  return out;
}

Report bsharp_iso_check(const AlgebraSpec& a, const Matrix& iso) {
  Report out("bsharp_iso");
  const std::size_t n = a.dim;
  if (iso.rows() != n || iso.cols() != n)
    throw Error(Errc::DimMismatch, "iso dimension mismatch");
  std::size_t rk = rank(iso);
  out.fact("iso_rank", std::to_string(rk));
  if (rk != n) out.add_violation("iso_invertible", {}, {});
  check_intertwine(a, iso, "intertwine", out);

  // Converse: the form built from the iso must come out nondegenerate and
  // invariant; symmetry is not part of the claim.
  Matrix b = iso.transpose();
  Report conv("converse");
  check_form_invariance(a, b, "invariance", conv);
  out.fact("converse_form_nondegenerate", rank(b) == n);
  out.fact("converse_form_symmetric", b.is_symmetric());
  out.absorb(conv, "converse");
  return out;
}

}  // namespace pybx
