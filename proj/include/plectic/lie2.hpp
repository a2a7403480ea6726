#pragma once

#include <functional>
#include <string>
#include <variant>

#include "plectic/courant.hpp"
#include "plectic/nplectic.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Element of a two-term graded algebra: degree 0 or 1 plus a payload whose
// concrete type is fixed per algebra and per degree.
struct Lie2Element {
    using Payload =
        std::variant<DifferentialForm, VectorField, GeneralizedSection, RationalFunction,
                     Rational>;
    int degree = 0;
    Payload payload = Rational(0);

    bool is_zero() const;
    std::string str() const;

    Lie2Element operator-() const;
    Lie2Element operator+(const Lie2Element& o) const;
    Lie2Element operator-(const Lie2Element& o) const;

    friend bool operator==(const Lie2Element& a, const Lie2Element& b) {
        return (a - b).is_zero();
    }
};

// Two-term algebra presented through its operations: a differential from
// degree 1 to degree 0, a graded bracket, and the trilinear homotopy
// correcting the bracket's Jacobi defect.
struct Lie2Algebra {
    std::string name;
    Lie2Element zero0, zero1;
    std::function<Lie2Element(const Lie2Element&)> d;  // degree 1 -> degree 0
    std::function<Lie2Element(const Lie2Element&, const Lie2Element&)> bracket;
    // Degree-0 arguments, degree-1 value.
    std::function<Lie2Element(const Lie2Element&, const Lie2Element&, const Lie2Element&)>
        jacobiator;
    // Optional membership predicate for degree 0 (null = everything).
    std::function<bool(const Lie2Element&)> contains0;
};

// All axioms on degree-0 elements x, y, z, w and a degree-1 element f:
// skewness, the chain rule, both graded Jacobi identities, alternation of
// the homotopy, and the pentagon-style coherence of the homotopy.
Report check_L2A_axioms(const Lie2Algebra& L, const Lie2Element& x, const Lie2Element& y,
                        const Lie2Element& z, const Lie2Element& w, const Lie2Element& f);

// Weak map between two-term algebras: degreewise maps plus a bilinear
// degree-1 corrector for the bracket defect.
struct Lie2Morphism {
    std::function<Lie2Element(const Lie2Element&)> phi0, phi1;
    std::function<Lie2Element(const Lie2Element&, const Lie2Element&)> Phi;
};

// Structure laws of a weak map on x, y, z (degree 0) and f (degree 1).
Report check_morphism(const Lie2Morphism& m, const Lie2Algebra& src, const Lie2Algebra& tgt,
                      const Lie2Element& x, const Lie2Element& y, const Lie2Element& z,
                      const Lie2Element& f);

// --- Instances ----------------------------------------------------------

// Degree 0: compatible (n-1)-forms; degree 1: (n-2)-forms. Differential is
// the exterior derivative, bracket the semi-bracket (mixed parts zero).
Lie2Algebra lie2_of_plectic(const PlecticStructure& P);

// Degree 0: sections; degree 1: functions. Differential is D, bracket the
// skew bracket with [e, f] = 1/2 anchor(e)(f), homotopy -T.
Lie2Algebra lie2_of_courant(const SplitCourantModel& M);

// Same operations restricted to sections preserving the splitting.
Lie2Algebra lie2_of_preserving(const SplitCourantModel& M);

// Degree 0: fields of compatible forms with the field bracket; degree 1
// collapsed to zero.
Lie2Algebra lie2_trivial_fields(const PlecticStructure& P);

// Degree 0: closed (n-1)-forms; degree 1: (n-2)-forms. All brackets and the
// homotopy vanish.
Lie2Algebra lie2_abelian(const PlecticStructure& P);

// Degree 0: fields of compatible forms; degree 1: constants. Zero
// differential, field bracket, homotopy = full contraction evaluated at the
// base point.
Lie2Algebra lie2_fields_at(const PlecticStructure& P, std::vector<Rational> point);

// The embedding of the structure algebra into the section algebra:
// phi0(a) = (v_a, a), phi1 = identity on coefficients,
// Phi(a, b) = -1/2 <v_a + a, v_b + b>_-. Requires the model's twist to be
// the structure form and n = 2.
Lie2Morphism main_morphism(const PlecticStructure& P, const SplitCourantModel& M);

// Inverse direction on the image: a preserving section is (v_a, a) for a
// unique compatible a. Throws when the section does not preserve the
// splitting or its field half mismatches.
DifferentialForm form_of_preserving_section(const PlecticStructure& P,
                                            const SplitCourantModel& M,
                                            const GeneralizedSection& e);

}  // namespace plectic
