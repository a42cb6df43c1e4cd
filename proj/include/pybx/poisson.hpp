#ifndef PYBX_POISSON_HPP
#define PYBX_POISSON_HPP

#include <string>
#include <vector>

#include "pybx/linalg.hpp"
#include "pybx/report.hpp"

namespace pybx {

std::vector<std::string> default_basis_names(std::size_t n);
std::vector<std::string> dual_basis_names(const std::vector<std::string>& names);

/// A finite-dimensional algebra carrying a bracket and a product, both as
/// structure-constant tensors: op(e_i, e_j) = sum_k t(i,j,k) e_k.  Nothing is
/// assumed about either tensor; the checkers verify all axioms.
struct AlgebraSpec {
  std::size_t dim = 0;
  Tensor3 bracket;
  Tensor3 product;
  std::vector<std::string> basis_names;

  AlgebraSpec() = default;
  AlgebraSpec(std::size_t n, Tensor3 br, Tensor3 pr, std::vector<std::string> names = {});

  Vec br(const Vec& a, const Vec& b) const { return contract_bilinear(bracket, a, b); }
  Vec mul(const Vec& a, const Vec& b) const { return contract_bilinear(product, a, b); }

  /// Left bracket action [e_i, -].
  Matrix ad(std::size_t i) const;
  /// Left multiplication e_i . -.
  Matrix lmul(std::size_t i) const;
  /// Right multiplication - . e_i.
  Matrix rmul(std::size_t i) const;

  Matrix ad_vec(const Vec& x) const;
  Matrix lmul_vec(const Vec& x) const;
  Matrix rmul_vec(const Vec& x) const;
};

struct MultiplicationOperators {
  std::vector<Matrix> ad, left, right;
};

/// A module (V, rho, mu): rho[i] is the bracket action of e_i on V, mu[i] the
/// product action, both as dimV x dimV matrices in column-action convention.
struct Representation {
  std::size_t dimV = 0;
  std::vector<Matrix> rho, mu;

  Matrix rho_vec(const Vec& x) const;
  Matrix mu_vec(const Vec& x) const;
};

struct BilinearFormData {
  Matrix b;  // b(i,j) = B(e_i, e_j)

  bool symmetric() const { return b.is_symmetric(); }
  bool nondegenerate() const { return rank(b) == b.rows(); }
};

/// Verifies bracket antisymmetry, Jacobi, product commutativity,
/// associativity and the Leibniz compatibility on every basis tuple.
Report check_poisson(const AlgebraSpec& a);

MultiplicationOperators multiplication_operators(const AlgebraSpec& a);

/// Verifies the four module identities for (rho, mu).
Report check_representation(const AlgebraSpec& a, const Representation& rep);

/// A (+) V with [(a,u),(b,v)] = ([a,b], rho(a)v - rho(b)u) and
/// (a,u).(b,v) = (a.b, mu(a)v + mu(b)u).  Basis order: A first, then V.
AlgebraSpec semidirect_product(const AlgebraSpec& a, const Representation& rep,
                               std::vector<std::string> v_names = {});

/// (-ad^*, L^*) acting on dual coordinates; matrix of f^* is transpose(f).
Representation coadjoint_rep(const AlgebraSpec& a);

/// Symmetry, nondegeneracy and the two invariance families for B, plus a
/// separate fact recording whether b-sharp intertwines (ad, L) with the
/// coadjoint actions.
Report check_quadratic(const AlgebraSpec& a, const BilinearFormData& f);

/// Forward direction: iso intertwines ad with -ad^* and L with L^*.
/// Converse: the form B(x,y) = <iso(x), y> built from the iso is checked
/// nondegenerate and invariant (symmetry not required).
Report bsharp_iso_check(const AlgebraSpec& a, const Matrix& iso);

}  // namespace pybx

#endif
