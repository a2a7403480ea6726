#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plectic/chart.hpp"
#include "plectic/rational_function.hpp"

namespace plectic {

// Strictly increasing list of coordinate indices naming a wedge basis
// element; the empty tuple is the degree-0 basis.
using IndexTuple = std::vector<int>;

// Sorts an arbitrary index list into a strictly increasing tuple, returning
// the permutation sign, or nullopt when an index repeats.
std::optional<std::pair<IndexTuple, int>> normalize_indices(IndexTuple indices);

// Differential form with rational-function coefficients on a chart. The
// degree records arity; forms of degree above the chart dimension are
// necessarily zero and simply store no terms. Zero coefficients are never
// stored.
class DifferentialForm {
public:
    DifferentialForm(ChartPtr chart, int degree);

    static DifferentialForm zero(ChartPtr chart, int degree) {
        return DifferentialForm(std::move(chart), degree);
    }
    // The coefficient function f as a 0-form.
    static DifferentialForm function(ChartPtr chart, RationalFunction f);
    // c * dx_{i1} ^ ... ^ dx_{ik} for an arbitrary index list (sign-normalized).
    static DifferentialForm term(ChartPtr chart, const IndexTuple& indices,
                                 const RationalFunction& c);

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of a strictly increasing tuple (zero if absent).
    RationalFunction coefficient(const IndexTuple& indices) const;
    // Adds c * dx_I with I an arbitrary index list; repeated indices drop out.
    void add_term(const IndexTuple& indices, const RationalFunction& c);

    // True when every coefficient is a polynomial (constant denominator).
    bool has_polynomial_coeffs() const;

    DifferentialForm operator-() const;
    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm& operator-=(const DifferentialForm& o);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) {
        return a += b;
    }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) {
        return a -= b;
    }
    DifferentialForm operator*(const RationalFunction& f) const;
    DifferentialForm operator*(const Rational& c) const;

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);
    friend bool operator!=(const DifferentialForm& a, const DifferentialForm& b) {
        return !(a == b);
    }

    // Grammar-compatible text, e.g. "x^2*dx^dy - dz"; "0" when zero.
    std::string str() const;

private:
    ChartPtr chart_;
    int degree_;
    std::map<IndexTuple, RationalFunction> terms_;
};

inline DifferentialForm operator*(const RationalFunction& f, const DifferentialForm& a) {
    return a * f;
}
inline DifferentialForm operator*(const Rational& c, const DifferentialForm& a) { return a * c; }

// Vector field on a chart: one rational-function component per coordinate.
class VectorField {
public:
    explicit VectorField(ChartPtr chart);
    VectorField(ChartPtr chart, std::vector<RationalFunction> components);

    static VectorField basis(ChartPtr chart, std::size_t index);

    const ChartPtr& chart() const { return chart_; }
    const std::vector<RationalFunction>& components() const { return comps_; }
    RationalFunction& component(std::size_t i) { return comps_[i]; }
    const RationalFunction& component(std::size_t i) const { return comps_[i]; }
    bool is_zero() const;

    // Directional derivative v(f).
    RationalFunction apply(const RationalFunction& f) const;

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    VectorField operator*(const RationalFunction& f) const;
    VectorField operator*(const Rational& c) const;

    friend bool operator==(const VectorField& a, const VectorField& b);
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    // Grammar-compatible text, e.g. "x*@y - @z"; "0" when zero.
    std::string str() const;

private:
    ChartPtr chart_;
    std::vector<RationalFunction> comps_;
};

inline VectorField operator*(const RationalFunction& f, const VectorField& v) { return v * f; }
inline VectorField operator*(const Rational& c, const VectorField& v) { return v * c; }

}  // namespace plectic
