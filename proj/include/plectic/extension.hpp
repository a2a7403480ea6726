#pragma once

#include <functional>

#include "plectic/lie2.hpp"
#include "plectic/nplectic.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Alternating multilinear functional on vector fields with constant values,
// presented through an evaluator.
struct CECochain {
    int arity = 0;
    std::function<Rational(const std::vector<VectorField>&)> eval;

    Rational operator()(const std::vector<VectorField>& fields) const;
};

// The full contraction at a base point as a 3-cochain:
// (v1, v2, v3) -> i(v1) i(v2) i(v3) w |_x.
CECochain full_contraction_at(const PlecticStructure& P, std::vector<Rational> x);

// Boundary: (delta c)(v_1..v_{k+1}) = sum_{i<j} (-1)^{i+j}
// c([v_i, v_j], v_1, .., no i, .., no j, ..).
CECochain ce_delta(const CECochain& c);

// Straight-segment transgression 2-cochain from x to y:
// (v, w) -> integral over the segment of the one-form i(w) i(v) omega.
// Requires polynomial coefficients along the way.
CECochain path_cochain(const PlecticStructure& P, std::vector<Rational> x,
                       std::vector<Rational> y);

// Weak map from the structure algebra to the pointwise field algebra:
// phi0 = the compatible field, phi1 = evaluation at x, Phi = 0.
Lie2Morphism ev_morphism(const PlecticStructure& P, std::vector<Rational> x);

// A primitive of the structure form itself; witnesses that the form's class
// is trivial over the chart.
DifferentialForm bu1_witness(const PlecticStructure& P);

// The extension suite at base points x and y on three compatible fields:
// compatibility of the fields, the 4-field cocycle law of the full
// contraction, the two-point coboundary relation through the transgression
// cochain, the evaluation map's morphism laws, centrality of closed forms,
// and the primitive witness.
Report verify_extension(const PlecticStructure& P, const std::vector<Rational>& x,
                        const std::vector<Rational>& y, const VectorField& v1,
                        const VectorField& v2, const VectorField& v3);

}  // namespace plectic
