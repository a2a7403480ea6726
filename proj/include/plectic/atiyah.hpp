#pragma once

#include "plectic/nplectic.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Pair (v, f) of a vector field and a function: an invariant-field model
// section over a chart carrying a nondegenerate closed two-form.
struct AtiyahSection {
    VectorField v;
    RationalFunction f;

    AtiyahSection(VectorField vf, RationalFunction fn);

    const ChartPtr& chart() const { return v.chart(); }
    bool is_zero() const { return v.is_zero() && f.is_zero(); }

    AtiyahSection operator-() const;
    AtiyahSection operator+(const AtiyahSection& o) const;
    AtiyahSection operator-(const AtiyahSection& o) const;
    AtiyahSection operator*(const RationalFunction& g) const;

    friend bool operator==(const AtiyahSection& a, const AtiyahSection& b) {
        return a.v == b.v && a.f == b.f;
    }
    friend bool operator!=(const AtiyahSection& a, const AtiyahSection& b) {
        return !(a == b);
    }

    std::string str() const;
};

// Throws unless the structure form is a two-form (the n = 1 case).
void require_symplectic(const PlecticStructure& P);

// The field of a function: d f = -i(v_f) w.
VectorField sympl_hamiltonian_vf(const PlecticStructure& P, const RationalFunction& f);

// {f, g} = w(v_f, v_g).
RationalFunction poisson(const PlecticStructure& P, const RationalFunction& f,
                         const RationalFunction& g);

// ([v1,v2], v1(f2) - v2(f1) - w(v1,v2)).
AtiyahSection atiyah_bracket(const PlecticStructure& P, const AtiyahSection& a,
                             const AtiyahSection& b);

// f -> (v_f, f), a strict bracket morphism from the Poisson algebra.
AtiyahSection atiyah_lift(const PlecticStructure& P, const RationalFunction& f);

// Bracket laws on sections and the lift's morphism law, on three functions
// and three arbitrary sections.
Report verify_atiyah(const PlecticStructure& P, const RationalFunction& f,
                     const RationalFunction& g, const RationalFunction& h,
                     const AtiyahSection& a, const AtiyahSection& b, const AtiyahSection& c);

// Pointwise pairing defect c(v1, v2) = -w(v1, v2)|_x.
Rational ks_cocycle(const PlecticStructure& P, const std::vector<Rational>& x,
                    const VectorField& v1, const VectorField& v2);

// Boundary -c([v1,v2],v3) + c([v1,v3],v2) - c([v2,v3],v1) at x; vanishes
// when every field preserves the form. Throws NotHamiltonianError otherwise.
Rational ks_delta(const PlecticStructure& P, const std::vector<Rational>& x,
                  const VectorField& v1, const VectorField& v2, const VectorField& v3);

}  // namespace plectic
