#include "schottky/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>

namespace schottky {

namespace {

void build_indices(int n, int degree, std::vector<int>& cur, int pos, int left,
                   std::vector<std::vector<int>>& out) {
    if (pos == n - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur[pos] = k;
        build_indices(n, degree, cur, pos + 1, left - k, out);
    }
}

// Descending lexicographic |alpha| = degree multi-indices over n variables.
std::vector<std::vector<int>> degree_indices(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    build_indices(n, degree, cur, 0, degree, out);
    return out;
}

double factorial_multi(const std::vector<int>& alpha) {
    double f = 1.0;
    for (int a : alpha)
        for (int k = 2; k <= a; ++k) f *= k;
    return f;
}

}  // namespace

CubicForm::CubicForm(int n) : n_(n) {
    if (n < 1) throw BadInput("cubic form needs at least one variable");
    coeffs_.assign(index_table(n).size(), cplx(0.0, 0.0));
}

const std::vector<std::vector<int>>& CubicForm::index_table(int n) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, degree_indices(n, 3)).first->second;
}

int CubicForm::index_of(int n, const std::vector<int>& alpha) {
    const auto& table = index_table(n);
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == alpha) return static_cast<int>(i);
    throw BadInput("multi-index is not a degree-3 exponent vector");
}

cplx& CubicForm::at(const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != n_) throw BadInput("multi-index arity mismatch");
    return coeffs_[index_of(n_, alpha)];
}

cplx CubicForm::at(const std::vector<int>& alpha) const {
    if (static_cast<int>(alpha.size()) != n_) throw BadInput("multi-index arity mismatch");
    return coeffs_[index_of(n_, alpha)];
}

cplx CubicForm::eval(const VectorXcd& x) const {
    if (x.size() != n_) throw BadInput("evaluation point arity mismatch");
    const auto& table = index_table(n_);
    cplx s = 0.0;
    for (size_t i = 0; i < table.size(); ++i) {
        cplx m = coeffs_[i];
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < table[i][j]; ++k) m *= x[j];
        s += m;
    }
    return s;
}

double CubicForm::norm2() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

double CubicForm::max_abs() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s = std::max(s, std::abs(c));
    return s;
}

cplx CubicForm::tensor(int i, int j, int k) const {
    std::vector<int> alpha(n_, 0);
    ++alpha[i];
    ++alpha[j];
    ++alpha[k];
    return coeffs_[index_of(n_, alpha)] * (factorial_multi(alpha) / 6.0);
}

CubicForm CubicForm::from_tensor(int n, const std::vector<cplx>& t) {
    if (static_cast<int>(t.size()) != n * n * n) throw BadInput("tensor size mismatch");
    CubicForm f(n);
    const auto& table = index_table(n);
    for (size_t idx = 0; idx < table.size(); ++idx) {
        const auto& alpha = table[idx];
        int rep[3], r = 0;
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < alpha[j]; ++c) rep[r++] = j;
        const cplx tv = t[(static_cast<size_t>(rep[0]) * n + rep[1]) * n + rep[2]];
        f.coeffs_[idx] = tv * (6.0 / factorial_multi(alpha));
    }
    return f;
}

CubicForm hesse_cubic(cplx m) {
    CubicForm f(3);
    f.at({3, 0, 0}) = 1.0;
    f.at({0, 3, 0}) = 1.0;
    f.at({0, 0, 3}) = 1.0;
    f.at({1, 1, 1}) = 6.0 * m;
    return f;
}

namespace {

void require_ternary(const CubicForm& f) {
    if (f.n() != 3) throw WrongArity("ternary invariant evaluated on n = " + std::to_string(f.n()));
}

}  // namespace

// Degree-4 invariant, normalized so that S(hesse_cubic(m)) = m - m^4.
cplx aronhold_S(const CubicForm& f) {
    require_ternary(f);
    const auto& c = f.coeffs();
    const cplx c300 = c[0], c210 = c[1], c201 = c[2], c120 = c[3], c111 = c[4], c102 = c[5],
               c030 = c[6], c021 = c[7], c012 = c[8], c003 = c[9];
    const cplx S =
        -1.0/9.0*c300*c120*c021*c003
        +1.0/27.0*c300*c120*c012*c012
        +1.0/6.0*c300*c111*c030*c003
        -1.0/54.0*c300*c111*c021*c012
        -1.0/9.0*c300*c102*c030*c012
        +1.0/27.0*c300*c102*c021*c021
        +1.0/27.0*c210*c210*c021*c003
        -1.0/81.0*c210*c210*c012*c012
        -1.0/9.0*c210*c201*c030*c003
        +1.0/81.0*c210*c201*c021*c012
        -1.0/54.0*c210*c120*c111*c003
        +1.0/81.0*c210*c120*c102*c012
        +1.0/162.0*c210*c111*c111*c012
        -1.0/54.0*c210*c111*c102*c021
        +1.0/27.0*c210*c102*c102*c030
        +1.0/27.0*c201*c201*c030*c012
        -1.0/81.0*c201*c201*c021*c021
        +1.0/27.0*c201*c120*c120*c003
        -1.0/54.0*c201*c120*c111*c012
        +1.0/81.0*c201*c120*c102*c021
        +1.0/162.0*c201*c111*c111*c021
        -1.0/54.0*c201*c111*c102*c030
        -1.0/81.0*c120*c120*c102*c102
        +1.0/162.0*c120*c111*c111*c102
        -1.0/1296.0*c111*c111*c111*c111;
    return S;
}

// Degree-6 invariant, normalized so that T(hesse_cubic(m)) = 1 - 20m^3 - 8m^6.
cplx aronhold_T(const CubicForm& f) {
    require_ternary(f);
    const auto& c = f.coeffs();
    const cplx c300 = c[0], c210 = c[1], c201 = c[2], c120 = c[3], c111 = c[4], c102 = c[5],
               c030 = c[6], c021 = c[7], c012 = c[8], c003 = c[9];
    const cplx T =
        +1.0*c300*c300*c030*c030*c003*c003
        -2.0/3.0*c300*c300*c030*c021*c012*c003
        +4.0/27.0*c300*c300*c030*c012*c012*c012
        +4.0/27.0*c300*c300*c021*c021*c021*c003
        -1.0/27.0*c300*c300*c021*c021*c012*c012
        -2.0/3.0*c300*c210*c120*c030*c003*c003
        +2.0/9.0*c300*c210*c120*c021*c012*c003
        -4.0/81.0*c300*c210*c120*c012*c012*c012
        +2.0/9.0*c300*c210*c111*c030*c012*c003
        -4.0/27.0*c300*c210*c111*c021*c021*c003
        +2.0/81.0*c300*c210*c111*c021*c012*c012
        +2.0/9.0*c300*c210*c102*c030*c021*c003
        -4.0/27.0*c300*c210*c102*c030*c012*c012
        +2.0/81.0*c300*c210*c102*c021*c021*c012
        +2.0/9.0*c300*c201*c120*c030*c012*c003
        -4.0/27.0*c300*c201*c120*c021*c021*c003
        +2.0/81.0*c300*c201*c120*c021*c012*c012
        +2.0/9.0*c300*c201*c111*c030*c021*c003
        -4.0/27.0*c300*c201*c111*c030*c012*c012
        +2.0/81.0*c300*c201*c111*c021*c021*c012
        -2.0/3.0*c300*c201*c102*c030*c030*c003
        +2.0/9.0*c300*c201*c102*c030*c021*c012
        -4.0/81.0*c300*c201*c102*c021*c021*c021
        +4.0/27.0*c300*c120*c120*c120*c003*c003
        -4.0/27.0*c300*c120*c120*c111*c012*c003
        -4.0/27.0*c300*c120*c120*c102*c021*c003
        +8.0/81.0*c300*c120*c120*c102*c012*c012
        +1.0/9.0*c300*c120*c111*c111*c021*c003
        +1.0/81.0*c300*c120*c111*c111*c012*c012
        +2.0/9.0*c300*c120*c111*c102*c030*c003
        -10.0/81.0*c300*c120*c111*c102*c021*c012
        -4.0/27.0*c300*c120*c102*c102*c030*c012
        +8.0/81.0*c300*c120*c102*c102*c021*c021
        -5.0/54.0*c300*c111*c111*c111*c030*c003
        -1.0/162.0*c300*c111*c111*c111*c021*c012
        +1.0/9.0*c300*c111*c111*c102*c030*c012
        +1.0/81.0*c300*c111*c111*c102*c021*c021
        -4.0/27.0*c300*c111*c102*c102*c030*c021
        +4.0/27.0*c300*c102*c102*c102*c030*c030
        +4.0/27.0*c210*c210*c210*c030*c003*c003
        -4.0/81.0*c210*c210*c210*c021*c012*c003
        +8.0/729.0*c210*c210*c210*c012*c012*c012
        -4.0/27.0*c210*c210*c201*c030*c012*c003
        +8.0/81.0*c210*c210*c201*c021*c021*c003
        -4.0/243.0*c210*c210*c201*c021*c012*c012
        -1.0/27.0*c210*c210*c120*c120*c003*c003
        +2.0/81.0*c210*c210*c120*c111*c012*c003
        +2.0/81.0*c210*c210*c120*c102*c021*c003
        -4.0/243.0*c210*c210*c120*c102*c012*c012
        +1.0/81.0*c210*c210*c111*c111*c021*c003
        -2.0/243.0*c210*c210*c111*c111*c012*c012
        -4.0/27.0*c210*c210*c111*c102*c030*c003
        +2.0/81.0*c210*c210*c111*c102*c021*c012
        +8.0/81.0*c210*c210*c102*c102*c030*c012
        -1.0/27.0*c210*c210*c102*c102*c021*c021
        -4.0/27.0*c210*c201*c201*c030*c021*c003
        +8.0/81.0*c210*c201*c201*c030*c012*c012
        -4.0/243.0*c210*c201*c201*c021*c021*c012
        +2.0/81.0*c210*c201*c120*c120*c012*c003
        -10.0/81.0*c210*c201*c120*c111*c021*c003
        +2.0/81.0*c210*c201*c120*c111*c012*c012
        +2.0/9.0*c210*c201*c120*c102*c030*c003
        -2.0/243.0*c210*c201*c120*c102*c021*c012
        +1.0/9.0*c210*c201*c111*c111*c030*c003
        -1.0/243.0*c210*c201*c111*c111*c021*c012
        -10.0/81.0*c210*c201*c111*c102*c030*c012
        +2.0/81.0*c210*c201*c111*c102*c021*c021
        +2.0/81.0*c210*c201*c102*c102*c030*c021
        +2.0/81.0*c210*c120*c120*c111*c102*c003
        -4.0/243.0*c210*c120*c120*c102*c102*c012
        -1.0/162.0*c210*c120*c111*c111*c111*c003
        -1.0/243.0*c210*c120*c111*c111*c102*c012
        +2.0/81.0*c210*c120*c111*c102*c102*c021
        -4.0/81.0*c210*c120*c102*c102*c102*c030
        +1.0/486.0*c210*c111*c111*c111*c111*c012
        -1.0/162.0*c210*c111*c111*c111*c102*c021
        +1.0/81.0*c210*c111*c111*c102*c102*c030
        +4.0/27.0*c201*c201*c201*c030*c030*c003
        -4.0/81.0*c201*c201*c201*c030*c021*c012
        +8.0/729.0*c201*c201*c201*c021*c021*c021
        +8.0/81.0*c201*c201*c120*c120*c021*c003
        -1.0/27.0*c201*c201*c120*c120*c012*c012
        -4.0/27.0*c201*c201*c120*c111*c030*c003
        +2.0/81.0*c201*c201*c120*c111*c021*c012
        +2.0/81.0*c201*c201*c120*c102*c030*c012
        -4.0/243.0*c201*c201*c120*c102*c021*c021
        +1.0/81.0*c201*c201*c111*c111*c030*c012
        -2.0/243.0*c201*c201*c111*c111*c021*c021
        +2.0/81.0*c201*c201*c111*c102*c030*c021
        -1.0/27.0*c201*c201*c102*c102*c030*c030
        -4.0/81.0*c201*c120*c120*c120*c102*c003
        +1.0/81.0*c201*c120*c120*c111*c111*c003
        +2.0/81.0*c201*c120*c120*c111*c102*c012
        -4.0/243.0*c201*c120*c120*c102*c102*c021
        -1.0/162.0*c201*c120*c111*c111*c111*c012
        -1.0/243.0*c201*c120*c111*c111*c102*c021
        +2.0/81.0*c201*c120*c111*c102*c102*c030
        +1.0/486.0*c201*c111*c111*c111*c111*c021
        -1.0/162.0*c201*c111*c111*c111*c102*c030
        +8.0/729.0*c120*c120*c120*c102*c102*c102
        -2.0/243.0*c120*c120*c111*c111*c102*c102
        +1.0/486.0*c120*c111*c111*c111*c111*c102
        -1.0/5832.0*c111*c111*c111*c111*c111*c111;
    return T;
}

cplx discriminant3(const CubicForm& f) {
    require_ternary(f);
    const cplx s = aronhold_S(f);
    const cplx t = aronhold_T(f);
    return t * t + 64.0 * s * s * s;
}

cplx j_invariant(const CubicForm& f) {
    require_ternary(f);
    const cplx s = aronhold_S(f);
    const cplx d = discriminant3(f);
    const double scale = f.max_abs();
    if (std::abs(d) <= 1e-12 * std::pow(scale, 6))
        throw SingularCubic("discriminant below threshold");
    return s * s * s / d;
}

CubicForm act_gl(const MatrixXcd& g, const CubicForm& f) {
    const int n = f.n();
    if (g.rows() != n || g.cols() != n) throw BadInput("matrix arity mismatch");
    if (std::abs(g.determinant()) <= 1e-12) throw SingularMatrix("|det| below 1e-12");
    const MatrixXcd a = g.inverse();

    std::vector<cplx> t(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t[(static_cast<size_t>(i) * n + j) * n + k] = f.tensor(i, j, k);

    // pullback along a: T'_pqr = sum T_ijk a_ip a_jq a_kr, one axis at a time
    auto contract = [&](const std::vector<cplx>& src, int axis) {
        std::vector<cplx> dst(src.size(), cplx(0.0, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const cplx v = src[(static_cast<size_t>(i) * n + j) * n + k];
                    if (v == cplx(0.0, 0.0)) continue;
                    for (int p = 0; p < n; ++p) {
                        size_t di, factor_row;
                        if (axis == 0) {
                            di = (static_cast<size_t>(p) * n + j) * n + k;
                            factor_row = i;
                        } else if (axis == 1) {
                            di = (static_cast<size_t>(i) * n + p) * n + k;
                            factor_row = j;
                        } else {
                            di = (static_cast<size_t>(i) * n + j) * n + p;
                            factor_row = k;
                        }
                        dst[di] += v * a(factor_row, p);
                    }
                }
        return dst;
    };
    t = contract(t, 0);
    t = contract(t, 1);
    t = contract(t, 2);
    return CubicForm::from_tensor(n, t);
}

double cone_defect(const CubicForm& f) {
    const int n = f.n();
    const auto quad = degree_indices(n, 2);
    const auto& cub = CubicForm::index_table(n);
    MatrixXcd d = MatrixXcd::Zero(n, static_cast<int>(quad.size()));
    for (size_t ci = 0; ci < cub.size(); ++ci) {
        const cplx c = f.coeffs()[ci];
        if (c == cplx(0.0, 0.0)) continue;
        for (int i = 0; i < n; ++i) {
            if (cub[ci][i] == 0) continue;
            std::vector<int> beta = cub[ci];
            --beta[i];
            const auto it = std::find(quad.begin(), quad.end(), beta);
            d(i, static_cast<int>(it - quad.begin())) += c * static_cast<double>(cub[ci][i]);
        }
    }
    Eigen::JacobiSVD<MatrixXcd> svd(d);
    const double smax = svd.singularValues().maxCoeff();
    if (smax == 0.0) return 0.0;
    return svd.singularValues().minCoeff() / smax;
}

}  // namespace schottky
