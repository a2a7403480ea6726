#include "plectic/atiyah.hpp"

#include "plectic/exterior.hpp"

namespace plectic {

namespace {

RationalFunction eval_on(const PlecticStructure& P, const VectorField& v1,
                         const VectorField& v2) {
    return form_eval(P.omega(), {v1, v2});
}

Rational at_point(const RationalFunction& f, const std::vector<Rational>& x) {
    const auto val = f.eval(x);
    if (!val) throw Error("function undefined at the base point");
    return *val;
}

std::string residual_str(const AtiyahSection& e) { return e.is_zero() ? "" : e.str(); }
std::string residual_str(const RationalFunction& f) { return f.is_zero() ? "" : f.str(); }

}  // namespace

AtiyahSection::AtiyahSection(VectorField vf, RationalFunction fn)
    : v(std::move(vf)), f(std::move(fn)) {}

AtiyahSection AtiyahSection::operator-() const { return {-v, -f}; }

AtiyahSection AtiyahSection::operator+(const AtiyahSection& o) const {
    return {v + o.v, f + o.f};
}

AtiyahSection AtiyahSection::operator-(const AtiyahSection& o) const {
    return {v - o.v, f - o.f};
}

AtiyahSection AtiyahSection::operator*(const RationalFunction& g) const {
    return {v * g, f * g};
}

std::string AtiyahSection::str() const { return "(" + v.str() + ", " + f.str() + ")"; }

void require_symplectic(const PlecticStructure& P) {
    if (P.n() != 1) throw DimensionMismatch("structure form must be a two-form");
}

VectorField sympl_hamiltonian_vf(const PlecticStructure& P, const RationalFunction& f) {
    require_symplectic(P);
    return hamiltonian_vf(P, DifferentialForm::function(P.chart(), f));
}

RationalFunction poisson(const PlecticStructure& P, const RationalFunction& f,
                         const RationalFunction& g) {
    require_symplectic(P);
    return eval_on(P, sympl_hamiltonian_vf(P, f), sympl_hamiltonian_vf(P, g));
}

AtiyahSection atiyah_bracket(const PlecticStructure& P, const AtiyahSection& a,
                             const AtiyahSection& b) {
    require_symplectic(P);
    require_same_chart(P.chart(), a.chart());
    require_same_chart(P.chart(), b.chart());
    return {vf_bracket(a.v, b.v), a.v.apply(b.f) - b.v.apply(a.f) - eval_on(P, a.v, b.v)};
}

AtiyahSection atiyah_lift(const PlecticStructure& P, const RationalFunction& f) {
    return {sympl_hamiltonian_vf(P, f), f};
}

Report verify_atiyah(const PlecticStructure& P, const RationalFunction& f,
                     const RationalFunction& g, const RationalFunction& h,
                     const AtiyahSection& a, const AtiyahSection& b, const AtiyahSection& c) {
    require_symplectic(P);
    Report rep;
    auto br = [&](const AtiyahSection& s, const AtiyahSection& t) {
        return atiyah_bracket(P, s, t);
    };

    {
        Stopwatch sw;
        const AtiyahSection res = br(a, b) + br(b, a);
        rep.add("atiyah.skew", "[a,b] = -[b,a]", res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const AtiyahSection res = br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c));
        rep.add("atiyah.jacobi", "[a,[b,c]] = [[a,b],c] + [b,[a,c]]", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const AtiyahSection res = br(a, b * g) - (br(a, b) * g + b * a.v.apply(g));
        rep.add("atiyah.leibniz", "[a, g b] = g [a,b] + v_a(g) b", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const VectorField res = vf_bracket(a.v, b.v) - br(a, b).v;
        rep.add("atiyah.anchor", "anchor [a,b] = [v_a, v_b]", res.is_zero(),
                res.is_zero() ? "" : res.str(), sw.ms());
    }
    {
        Stopwatch sw;
        const RationalFunction res =
            poisson(P, f, poisson(P, g, h)) - poisson(P, poisson(P, f, g), h) -
            poisson(P, g, poisson(P, f, h));
        rep.add("atiyah.poisson-jacobi", "{f,{g,h}} = {{f,g},h} + {g,{f,h}}", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const AtiyahSection res =
            atiyah_lift(P, poisson(P, f, g)) -
            br(atiyah_lift(P, f), atiyah_lift(P, g));
        rep.add("atiyah.lift", "lift{f,g} = [lift f, lift g]", res.is_zero(),
                residual_str(res), sw.ms());
    }
    return rep;
}

Rational ks_cocycle(const PlecticStructure& P, const std::vector<Rational>& x,
                    const VectorField& v1, const VectorField& v2) {
    require_symplectic(P);
    return -at_point(eval_on(P, v1, v2), x);
}

Rational ks_delta(const PlecticStructure& P, const std::vector<Rational>& x,
                  const VectorField& v1, const VectorField& v2, const VectorField& v3) {
    require_symplectic(P);
    for (const auto* v : {&v1, &v2, &v3}) {
        const DifferentialForm res = d(iota(*v, P.omega()));
        if (!res.is_zero()) throw NotHamiltonianError(res);
    }
    return -ks_cocycle(P, x, vf_bracket(v1, v2), v3) + ks_cocycle(P, x, vf_bracket(v1, v3), v2) -
           ks_cocycle(P, x, vf_bracket(v2, v3), v1);
}

}  // namespace plectic
