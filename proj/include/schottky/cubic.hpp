#pragma once

#include <vector>

#include "schottky/errors.hpp"
#include "schottky/types.hpp"

namespace schottky {

// Homogeneous cubic form in n variables, dense coefficients over the
// canonical multi-index list (descending lexicographic, e.g. for n = 3:
// 300, 210, 201, 120, 111, 102, 030, 021, 012, 003).
class CubicForm {
  public:
    explicit CubicForm(int n);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(coeffs_.size()); }

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::vector<cplx>& coeffs() { return coeffs_; }

    cplx& at(const std::vector<int>& alpha);
    cplx at(const std::vector<int>& alpha) const;

    cplx eval(const VectorXcd& x) const;
    double norm2() const;  // coefficient 2-norm
    double max_abs() const;

    // Canonical multi-index list for n variables (shared, cached).
    static const std::vector<std::vector<int>>& index_table(int n);
    static int index_of(int n, const std::vector<int>& alpha);

    // Symmetric coefficient tensor T with f(x) = sum_{ijk} T_ijk x_i x_j x_k,
    // T_ijk = c_alpha * alpha! / 3!.
    cplx tensor(int i, int j, int k) const;
    static CubicForm from_tensor(int n, const std::vector<cplx>& t);  // t[(i*n+j)*n+k], symmetric

  private:
    int n_;
    std::vector<cplx> coeffs_;
};

// x^3 + y^3 + z^3 + 6 m xyz
CubicForm hesse_cubic(cplx m);

// Degree-4 and degree-6 generators of the invariant ring of ternary cubics,
// normalized so that on the Hesse pencil S = m - m^4 and T = 1 - 20m^3 - 8m^6.
cplx aronhold_S(const CubicForm& f);
cplx aronhold_T(const CubicForm& f);

// delta = T^2 + 64 S^3
cplx discriminant3(const CubicForm& f);

// j = S^3 / delta; throws SingularCubic when |delta| <= 1e-12 * scale^6 with
// scale = max|c|.
cplx j_invariant(const CubicForm& f);

// (g . f)(x) = f(g^{-1} x). Under substitution f -> f o A the invariants scale
// as S(f o A) = det(A)^4 S(f), T(f o A) = det(A)^6 T(f).
CubicForm act_gl(const MatrixXcd& g, const CubicForm& f);

// Smallest singular value of the matrix of partial-derivative coefficient
// rows, over the largest; 0 iff f is (a limit of) a cone.
double cone_defect(const CubicForm& f);

}  // namespace schottky
