#pragma once

#include "plectic/exterior.hpp"
#include "plectic/form.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Section of the split model: a vector field plus a one-form on the same
// chart.
struct GeneralizedSection {
    VectorField v;
    DifferentialForm alpha;

    GeneralizedSection(VectorField vf, DifferentialForm a);

    static GeneralizedSection zero(const ChartPtr& chart);
    static GeneralizedSection from_field(VectorField vf);
    static GeneralizedSection from_form(DifferentialForm a);

    const ChartPtr& chart() const { return v.chart(); }
    bool is_zero() const { return v.is_zero() && alpha.is_zero(); }

    GeneralizedSection operator-() const;
    GeneralizedSection operator+(const GeneralizedSection& o) const;
    GeneralizedSection operator-(const GeneralizedSection& o) const;
    GeneralizedSection operator*(const RationalFunction& f) const;
    GeneralizedSection operator*(const Rational& c) const;

    friend bool operator==(const GeneralizedSection& a, const GeneralizedSection& b) {
        return a.v == b.v && a.alpha == b.alpha;
    }
    friend bool operator!=(const GeneralizedSection& a, const GeneralizedSection& b) {
        return !(a == b);
    }

    // "(v, alpha)" with grammar-compatible halves.
    std::string str() const;
};

// Split model of fields plus one-forms, twisted by a closed three-form.
// The zero twist gives the standard bracket.
class SplitCourantModel {
public:
    explicit SplitCourantModel(ChartPtr chart);           // zero twist
    SplitCourantModel(ChartPtr chart, DifferentialForm twist);

    const ChartPtr& chart() const { return chart_; }
    const DifferentialForm& twist() const { return twist_; }

private:
    ChartPtr chart_;
    DifferentialForm twist_;
};

// Symmetric pairing <v1 + a1, v2 + a2> = i(v1)a2 + i(v2)a1.
RationalFunction pairing_plus(const GeneralizedSection& e1, const GeneralizedSection& e2);
// Skew pairing <v1 + a1, v2 + a2> = i(v1)a2 - i(v2)a1.
RationalFunction pairing_minus(const GeneralizedSection& e1, const GeneralizedSection& e2);

// Projection onto the field summand.
const VectorField& anchor(const GeneralizedSection& e);

// D f = (0, df), the pairing-dual of the anchor: <Df, e> = anchor(e)(f).
GeneralizedSection D_func(const ChartPtr& chart, const RationalFunction& f);

// Skew bracket: ([v1,v2], L(v1)a2 - L(v2)a1 - 1/2 d<e1,e2>_- - i(v2)i(v1)twist).
GeneralizedSection courant_bracket(const SplitCourantModel& M, const GeneralizedSection& e1,
                                   const GeneralizedSection& e2);

// Non-skew bracket: ([v1,v2], L(v1)a2 - i(v2)d(a1) - i(v2)i(v1)twist).
GeneralizedSection dorfman_bracket(const SplitCourantModel& M, const GeneralizedSection& e1,
                                   const GeneralizedSection& e2);

// Fully symmetrized defect T = 1/6 (<[e1,e2],e3> + <[e3,e1],e2> + <[e2,e3],e1>).
RationalFunction T_tri(const SplitCourantModel& M, const GeneralizedSection& e1,
                       const GeneralizedSection& e2, const GeneralizedSection& e3);

// <[s(v1), s(v2)], s(v3)> for the field-summand splitting s; recovers the
// twist with a sign: curvature(v1,v2,v3) = -twist(v1,v2,v3).
RationalFunction curvature(const SplitCourantModel& M, const VectorField& v1,
                           const VectorField& v2, const VectorField& v3);

// Rewrite a section from the B-shifted splitting into the base one:
// (v, a) -> (v, a - i(v)B). Intertwines the brackets of the two models:
//   bracket_M(G e1, G e2) = G(bracket_{shifted_twist(M, B)}(e1, e2)).
GeneralizedSection change_splitting(const GeneralizedSection& e, const DifferentialForm& B);

// The model seen by the B-shifted splitting: twist + dB.
SplitCourantModel shifted_twist(const SplitCourantModel& M, const DifferentialForm& B);

// Obstruction d(alpha) + i(v)twist to the bracket preserving the field
// summand's complement through e; zero exactly when e preserves it.
DifferentialForm splitting_residual(const SplitCourantModel& M, const GeneralizedSection& e);
bool preserves_splitting(const SplitCourantModel& M, const GeneralizedSection& e);

// All bracket axioms on a triple of sections and two functions: five for the
// skew bracket, five for the non-skew bracket, and the interchange law.
Report verify_courant_axioms(const SplitCourantModel& M, const GeneralizedSection& e1,
                             const GeneralizedSection& e2, const GeneralizedSection& e3,
                             const RationalFunction& f, const RationalFunction& g);

}  // namespace plectic
