#pragma once

#include <cstddef>
#include <vector>

#include "plectic/rational_function.hpp"

namespace plectic {

// Dense matrix over the rational-function field. Row-major.
class RFMatrix {
public:
    RFMatrix(std::vector<std::string> vars, std::size_t rows, std::size_t cols)
        : vars_(std::move(vars)),
          rows_(rows),
          cols_(cols),
          data_(rows * cols, RationalFunction::constant(vars_, Rational(0))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::string>& vars() const { return vars_; }

    RationalFunction& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RationalFunction& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<RationalFunction> apply(const std::vector<RationalFunction>& x) const;

private:
    std::vector<std::string> vars_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RationalFunction> data_;
};

// Outcome of an exact linear solve M x = b.
//  Unique:       exactly one solution; `particular` holds it, kernel empty.
//  Affine:       solutions form particular + span(kernel); kernel nonempty.
//  Inconsistent: no solution; `particular` is the best-effort solve of the
//                consistent rows (free variables zero), so M*particular - b
//                is a nonzero residual certificate.
struct SolveResult {
    enum class Kind { Unique, Affine, Inconsistent };
    Kind kind = Kind::Unique;
    std::vector<RationalFunction> particular;
    std::vector<std::vector<RationalFunction>> kernel;
};

// Exact solve by fraction-free Bareiss elimination after clearing row
// denominators. Full pivoting picks the nonzero candidate of least total
// degree (numerator + denominator), ties broken by row then column index.
SolveResult solve_linear(const RFMatrix& m, const std::vector<RationalFunction>& b);

// Rank over the rational-function field (generic rank).
std::size_t rank(const RFMatrix& m);

// Determinant of a square matrix.
RationalFunction det(const RFMatrix& m);

}  // namespace plectic
