#include "plectic/linalg.hpp"

#include <algorithm>
#include <optional>

#include "plectic/errors.hpp"

namespace plectic {

std::vector<RationalFunction> RFMatrix::apply(const std::vector<RationalFunction>& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<RationalFunction> out(rows_, RationalFunction::constant(vars_, Rational(0)));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
    return out;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Clears denominators row-wise and strips content so entries stay small.
PolyMatrix to_poly_rows(const RFMatrix& m, const std::vector<RationalFunction>* b) {
    const std::size_t extra = b ? 1 : 0;
    PolyMatrix out(m.rows(), std::vector<Polynomial>(m.cols() + extra));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Polynomial mult = Polynomial::constant(m.vars(), Rational(1));
        for (std::size_t c = 0; c < m.cols(); ++c) mult *= m.at(r, c).den();
        if (b) mult *= (*b)[r].den();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const RationalFunction& e = m.at(r, c);
            out[r][c] = e.num() * *mult.divide_exact(e.den());
        }
        if (b) out[r][m.cols()] = (*b)[r].num() * *mult.divide_exact((*b)[r].den());
        Rational g(0);
        for (const auto& p : out[r]) g = rat_gcd(g, p.content());
        if (!g.is_zero() && !g.is_one()) {
            const Rational inv = g.inv();
            for (auto& p : out[r]) p = p * inv;
        }
    }
    return out;
}

struct Echelon {
    PolyMatrix a;                    // eliminated augmented matrix
    std::vector<std::size_t> col;   // col[j]: original index of working column j
    std::size_t rank = 0;
    int swap_sign = 1;              // parity of all row and column swaps
};

// Fraction-free Bareiss with full pivoting over the first `ncols` columns.
// After step k every entry is a (k+1)-minor of the input, so division by the
// previous pivot is exact.
Echelon eliminate(PolyMatrix a, std::size_t ncols, const std::vector<std::string>& vars) {
    Echelon e;
    e.col.resize(ncols);
    for (std::size_t j = 0; j < ncols; ++j) e.col[j] = j;
    const std::size_t nrows = a.size();
    const std::size_t width = nrows == 0 ? 0 : a[0].size();
    Polynomial prev = Polynomial::constant(vars, Rational(1));
    std::size_t k = 0;
    while (k < nrows && k < ncols) {
        // Least-total-degree nonzero pivot; ties by row then column.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        int best_deg = 0;
        for (std::size_t i = k; i < nrows; ++i) {
            for (std::size_t j = k; j < ncols; ++j) {
                if (a[i][j].is_zero()) continue;
                const int deg = a[i][j].degree();
                if (!best || deg < best_deg) {
                    best = {i, j};
                    best_deg = deg;
                }
            }
        }
        if (!best) break;
        const auto [pr, pc] = *best;
        if (pr != k) {
            std::swap(a[pr], a[k]);
            e.swap_sign = -e.swap_sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < nrows; ++i) std::swap(a[i][pc], a[i][k]);
            std::swap(e.col[pc], e.col[k]);
            e.swap_sign = -e.swap_sign;
        }
        const Polynomial pivot = a[k][k];
        for (std::size_t i = k + 1; i < nrows; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                Polynomial t = a[i][j] * pivot - a[i][k] * a[k][j];
                auto q = t.divide_exact(prev);
                a[i][j] = q ? *q : t;  // division is always exact here
            }
            a[i][k] = Polynomial(vars);
        }
        prev = pivot;
        ++k;
    }
    e.a = std::move(a);
    e.rank = k;
    return e;
}

RationalFunction rf_of(const Polynomial& p) { return RationalFunction(p); }

}  // namespace

SolveResult solve_linear(const RFMatrix& m, const std::vector<RationalFunction>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side size mismatch");
    const auto& vars = m.vars();
    const std::size_t n = m.cols();
    Echelon e = eliminate(to_poly_rows(m, &b), n, vars);
    const std::size_t r = e.rank;

    SolveResult out;
    bool inconsistent = false;
    for (std::size_t i = r; i < e.a.size(); ++i) {
        if (!e.a[i][n].is_zero()) {
            inconsistent = true;
            break;
        }
    }

    const RationalFunction zero = RationalFunction::constant(vars, Rational(0));
    // Back-substitution in working column order; `assign` maps working
    // column -> value, free columns preset, pivot columns solved bottom-up.
    auto back_solve = [&](const std::vector<RationalFunction>& free_vals,
                          bool homogeneous) {
        std::vector<RationalFunction> x(n, zero);
        for (std::size_t j = r; j < n; ++j) x[j] = free_vals[j - r];
        for (std::size_t i = r; i-- > 0;) {
            RationalFunction acc = homogeneous ? zero : rf_of(e.a[i][n]);
            for (std::size_t j = i + 1; j < n; ++j) acc -= rf_of(e.a[i][j]) * x[j];
            x[i] = acc / rf_of(e.a[i][i]);
        }
        std::vector<RationalFunction> orig(n, zero);
        for (std::size_t j = 0; j < n; ++j) orig[e.col[j]] = x[j];
        return orig;
    };

    const std::size_t nfree = n - r;
    std::vector<RationalFunction> zeros(nfree, zero);
    out.particular = n == 0 ? std::vector<RationalFunction>{} : back_solve(zeros, false);
    for (std::size_t f = 0; f < nfree; ++f) {
        std::vector<RationalFunction> unit(nfree, zero);
        unit[f] = RationalFunction::constant(vars, Rational(1));
        out.kernel.push_back(back_solve(unit, true));
    }

    if (inconsistent) {
        out.kind = SolveResult::Kind::Inconsistent;
    } else if (nfree > 0) {
        out.kind = SolveResult::Kind::Affine;
    } else {
        out.kind = SolveResult::Kind::Unique;
    }
    return out;
}

std::size_t rank(const RFMatrix& m) {
    return eliminate(to_poly_rows(m, nullptr), m.cols(), m.vars()).rank;
}

RationalFunction det(const RFMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const auto& vars = m.vars();
    if (m.rows() == 0) return RationalFunction::constant(vars, Rational(1));
    // Track the scaling introduced by clearing denominators: each row of the
    // polynomial matrix is `mult_r` times the original row, and content
    // stripping contributes a further rational factor per row.
    PolyMatrix a(m.rows(), std::vector<Polynomial>(m.cols()));
    RationalFunction scale = RationalFunction::constant(vars, Rational(1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Polynomial mult = Polynomial::constant(vars, Rational(1));
        for (std::size_t c = 0; c < m.cols(); ++c) mult *= m.at(r, c).den();
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m.at(r, c).num() * *mult.divide_exact(m.at(r, c).den());
        scale = scale * RationalFunction(Polynomial::constant(vars, Rational(1)), mult);
    }
    Echelon e = eliminate(std::move(a), m.cols(), vars);
    if (e.rank < m.cols()) return RationalFunction::constant(vars, Rational(0));
    // Bareiss leaves the determinant of the swapped matrix as the last
    // pivot; undo the transposition parity.
    return rf_of(e.a[m.cols() - 1][m.cols() - 1]) / scale * Rational(e.swap_sign);
}

}  // namespace plectic
