#include "homcsa/homcore.hpp"

#include <vector>

#include "homcsa/errors.hpp"

namespace homcsa {

namespace {

// Products of basis vectors and twist images, computed once per check.
struct Tables {
  std::size_t n;
  std::vector<Vector> prod;   // prod[i*n+j] = e_i e_j
  std::vector<Vector> alpha;  // alpha[i] = α(e_i)

  explicit Tables(const HomAlgebra& A) : n(A.dim()), prod(n * n), alpha(n) {
    for (std::size_t i = 0; i < n; ++i) {
      alpha[i] = A.twist().column(i);
      for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = A.basis_product(i, j);
    }
  }
  const Vector& p(std::size_t i, std::size_t j) const { return prod[i * n + j]; }
};

Vector associator(const HomAlgebra& A, const Tables& t, std::size_t i, std::size_t j,
                  std::size_t k) {
  return A.product(t.p(i, j), t.alpha[k]) - A.product(t.alpha[i], t.p(j, k));
}

Vector jacobiator(const HomAlgebra& A, const Tables& t, std::size_t i, std::size_t j,
                  std::size_t k) {
  return A.product(t.alpha[i], t.p(j, k)) + A.product(t.alpha[j], t.p(k, i)) +
         A.product(t.alpha[k], t.p(i, j));
}

bool multiplicative_at(const HomAlgebra& A, const Tables& t, std::size_t i, std::size_t j,
                       AxiomReport* rep) {
  Vector lhs = A.twist().apply(t.p(i, j));
  Vector rhs = A.product(t.alpha[i], t.alpha[j]);
  if (rep) return rep->expect("multiplicative", {i, j}, lhs, rhs);
  return lhs == rhs;
}

}  // namespace

HomAlgebra::HomAlgebra(BilinearTensor mul, LinearMap twist)
    : mul_(std::move(mul)), twist_(std::move(twist)) {
  const std::size_t n = twist_.rows();
  if (!twist_.square()) throw InputError("twist must be square");
  if (mul_.dim_left() != n || mul_.dim_right() != n || mul_.dim_out() != n)
    throw InputError("product tensor shape does not match twist dimension " + std::to_string(n));
}

Vector HomAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = mul_.at(i, j, k);
  return v;
}

AxiomReport check_multiplicative(const HomAlgebra& A) {
  AxiomReport rep("multiplicative");
  rep.evaluate("multiplicative");
  Tables t(A);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) multiplicative_at(A, t, i, j, &rep);
  return rep;
}

Vector alpha_associator(const HomAlgebra& A, const Vector& x, const Vector& y, const Vector& z) {
  if (x.size() != A.dim() || y.size() != A.dim() || z.size() != A.dim())
    throw InputError("alpha_associator: vector length mismatch");
  const LinearMap& a = A.twist();
  return A.product(A.product(x, y), a(z)) - A.product(a(x), A.product(y, z));
}

AxiomReport check_center_symmetric(const HomAlgebra& A) {
  AxiomReport rep("center-symmetric");
  rep.absorb(check_multiplicative(A), "");
  rep.evaluate("center-symmetric");
  Tables t(A);
  // (e_i,e_j,e_k) and (e_k,e_j,e_i) give the same equation; keep i < k.
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = i + 1; k < t.n; ++k)
        rep.expect("center-symmetric", {i, j, k}, associator(A, t, i, j, k),
                   associator(A, t, k, j, i));
  return rep;
}

ActionTensor left_rep(const HomAlgebra& A) {
  const std::size_t n = A.dim();
  ActionTensor out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i].at(k, j) = A.mul().at(i, j, k);
  return out;
}

ActionTensor right_rep(const HomAlgebra& A) {
  const std::size_t n = A.dim();
  ActionTensor out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i].at(k, j) = A.mul().at(j, i, k);
  return out;
}

ActionTensor ad_rep(const HomAlgebra& A) { return left_rep(A) - right_rep(A); }

HomAlgebra commutator_algebra(const HomAlgebra& A) {
  const std::size_t n = A.dim();
  BilinearTensor br(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) br.at(i, j, k) = A.mul().at(i, j, k) - A.mul().at(j, i, k);
  return HomAlgebra(std::move(br), A.twist());
}

AxiomReport check_skew(const HomAlgebra& A) {
  AxiomReport rep("skew");
  rep.evaluate("skew");
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector lhs = A.basis_product(i, j);
      Vector rhs = Scalar(-1) * A.basis_product(j, i);
      rep.expect("skew", {i, j}, lhs, rhs);
    }
  return rep;
}

AxiomReport check_hom_jacobi(const HomAlgebra& A) {
  AxiomReport rep("hom-jacobi");
  rep.absorb(check_skew(A), "");
  rep.absorb(check_multiplicative(A), "");
  rep.evaluate("hom-jacobi");
  Tables t(A);
  const Vector zero(t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k)
        rep.expect("hom-jacobi", {i, j, k}, jacobiator(A, t, i, j, k), zero);
  return rep;
}

AxiomReport check_homomorphism(const LinearMap& f, const HomAlgebra& A1, const HomAlgebra& A2) {
  if (f.cols() != A1.dim() || f.rows() != A2.dim())
    throw InputError("homomorphism shape does not match the two algebras");
  AxiomReport rep("homomorphism");
  rep.evaluate("product");
  for (std::size_t i = 0; i < A1.dim(); ++i)
    for (std::size_t j = 0; j < A1.dim(); ++j)
      rep.expect("product", {i, j}, f(A1.basis_product(i, j)),
                 A2.product(f.column(i), f.column(j)));
  rep.expect("twist", {}, mat_compose(f, A1.twist()), mat_compose(A2.twist(), f));
  return rep;
}

bool is_hom_csa(const HomAlgebra& A) {
  Tables t(A);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      if (!multiplicative_at(A, t, i, j, nullptr)) return false;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = i + 1; k < t.n; ++k)
        if (associator(A, t, i, j, k) != associator(A, t, k, j, i)) return false;
  return true;
}

bool is_hom_lie(const HomAlgebra& A) {
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (A.mul().at(i, j, k) != -A.mul().at(j, i, k)) return false;
  Tables t(A);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!multiplicative_at(A, t, i, j, nullptr)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(jacobiator(A, t, i, j, k))) return false;
  return true;
}

bool is_involution(const LinearMap& m) {
  return m.square() && mat_compose(m, m) == LinearMap::identity(m.rows());
}

}  // namespace homcsa
