#include "ellbc/linalg.hpp"

#include <numeric>

namespace ellbc {

Real inf_norm(const CMatrix& a)
{
    Real best = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Real s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += abs(a(i, j));
        if (s > best) best = s;
    }
    return best;
}

SolveResult lu_solve(CMatrix a, std::vector<Complex> b, bool want_condition)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("lu_solve: shape mismatch");
    Real anorm = want_condition ? inf_norm(a) : Real(0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        Real best = norm2(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            Real v = norm2(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0) throw SingularError("lu_solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(perm[k], perm[piv]);
        }
        Complex inv_piv = inv(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Complex f = a(i, k) * inv_piv;
            a(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    auto solve = [&](std::vector<Complex> rhs) {
        std::vector<Complex> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = rhs[perm[i]];
            for (std::size_t j = 0; j < i; ++j) s -= a(i, j) * y[j];
            y[i] = std::move(s);
        }
        for (std::size_t i = n; i-- > 0;) {
            Complex s = y[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * y[j];
            y[i] = s / a(i, i);
        }
        return y;
    };
    SolveResult res;
    res.x = solve(std::move(b));
    if (want_condition) {
        Real inv_norm = 0;
        std::vector<Real> rowsum(n, Real(0));
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Complex> e(n);
            e[c] = Complex(1);
            auto col = solve(std::move(e));
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += abs(col[i]);
        }
        for (const auto& s : rowsum)
            if (s > inv_norm) inv_norm = s;
        res.condition = anorm * inv_norm;
    }
    return res;
}

}  // namespace ellbc
