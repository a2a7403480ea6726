#pragma once

#include "plectic/form.hpp"

namespace plectic {

// Raised when an operation that needs a closed form receives one that is
// not; carries the nonzero residual d(a) as a certificate.
struct NotClosedError : Error {
    explicit NotClosedError(DifferentialForm r)
        : Error("form is not closed; d(a) = " + r.str()), residual(std::move(r)) {}
    DifferentialForm residual;
};

// Exterior product. Degrees add; graded-commutative.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

// Exterior derivative of a form (quotient rule on coefficients).
DifferentialForm d(const DifferentialForm& a);
// Exterior derivative of a function, as a 1-form.
DifferentialForm d(ChartPtr chart, const RationalFunction& f);

// Interior product contracting the FIRST slot:
//   (iota(v, a))(u1, ..., u_{k-1}) = a(v, u1, ..., u_{k-1}).
// Iterating therefore fills slots left to right:
//   iota(v1, iota(v2, ... iota(vk, a))) = a(vk, ..., v2, v1).
DifferentialForm iota(const VectorField& v, const DifferentialForm& a);

// Lie derivative via the homotopy formula L_v = iota(v, d a) + d(iota(v, a));
// on 0-forms this is v applied to the coefficient.
DifferentialForm lie_derivative(const VectorField& v, const DifferentialForm& a);

// Jacobi-Lie bracket of vector fields: [v, w]^i = v(w^i) - w(v^i).
VectorField vf_bracket(const VectorField& v, const VectorField& w);

// Full contraction a(v1, ..., vk) as a function. Equals iota iterated with
// the last field contracted first (see iota's slot convention).
RationalFunction form_eval(const DifferentialForm& a, const std::vector<VectorField>& fields);

// Primitive of a closed polynomial form of degree >= 1 by the radial
// homotopy: for a = sum_I f_I dx_I, each monomial c x^e of f_I contributes
// c/(k+|e|) x^e x_{i_j} (-1)^{j-1} dx_{I minus i_j}. Satisfies d(result) = a.
// Throws NotClosedError when d(a) != 0 and RationalCoefficientUnsupported
// when a coefficient is not polynomial.
DifferentialForm poincare_potential(const DifferentialForm& a);

}  // namespace plectic
