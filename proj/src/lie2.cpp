#include "plectic/lie2.hpp"

namespace plectic {

namespace {

template <class Op>
Lie2Element zip(const Lie2Element& a, const Lie2Element& b, Op op) {
    if (a.degree != b.degree)
        throw DimensionMismatch("graded elements of different degree");
    return std::visit(
        [&](const auto& x, const auto& y) -> Lie2Element {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Y>) {
                return {a.degree, op(x, y)};
            } else {
                throw DimensionMismatch("graded elements of different payload kind");
            }
        },
        a.payload, b.payload);
}

std::string residual_str(const Lie2Element& e) { return e.is_zero() ? "" : e.str(); }

}  // namespace

bool Lie2Element::is_zero() const {
    return std::visit([](const auto& p) { return p.is_zero(); }, payload);
}

std::string Lie2Element::str() const {
    return std::visit([](const auto& p) { return p.str(); }, payload);
}

Lie2Element Lie2Element::operator-() const {
    return {degree, std::visit([](const auto& p) -> Payload { return -p; }, payload)};
}

Lie2Element Lie2Element::operator+(const Lie2Element& o) const {
    return zip(*this, o, [](const auto& x, const auto& y) { return x + y; });
}

Lie2Element Lie2Element::operator-(const Lie2Element& o) const {
    return zip(*this, o, [](const auto& x, const auto& y) { return x - y; });
}

Report check_L2A_axioms(const Lie2Algebra& L, const Lie2Element& x, const Lie2Element& y,
                        const Lie2Element& z, const Lie2Element& w, const Lie2Element& f) {
    Report rep;
    auto br = L.bracket;
    auto J = L.jacobiator;

    {
        Stopwatch sw;
        const Lie2Element res = br(x, y) + br(y, x);
        rep.add("lie2.skew", "[x,y] + [y,x] = 0", res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res = br(x, f) + br(f, x);
        rep.add("lie2.skew-mixed", "[x,f] + [f,x] = 0", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res = L.d(br(x, f)) - br(x, L.d(f));
        rep.add("lie2.chain", "d[x,f] = [x,df]", res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res =
            br(x, br(y, z)) - br(br(x, y), z) - br(y, br(x, z)) - L.d(J(x, y, z));
        rep.add("lie2.jacobi", "[x,[y,z]] - [[x,y],z] - [y,[x,z]] = dJ(x,y,z)", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res =
            br(x, br(y, f)) - br(br(x, y), f) - br(y, br(x, f)) - J(x, y, L.d(f));
        rep.add("lie2.jacobi-mixed", "[x,[y,f]] - [[x,y],f] - [y,[x,f]] = J(x,y,df)",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res = J(x, y, z) + J(y, x, z);
        rep.add("lie2.alt12", "J(x,y,z) = -J(y,x,z)", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res = J(x, y, z) + J(x, z, y);
        rep.add("lie2.alt23", "J(x,y,z) = -J(x,z,y)", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element lhs = br(x, J(y, z, w)) + J(x, br(y, z), w) + J(x, z, br(y, w)) +
                                br(J(x, y, z), w) + br(z, J(x, y, w));
        const Lie2Element rhs = J(x, y, br(z, w)) + J(br(x, y), z, w) + br(y, J(x, z, w)) +
                                J(y, br(x, z), w) + J(y, z, br(x, w));
        const Lie2Element res = lhs - rhs;
        rep.add("lie2.coherence",
                "[x,J(y,z,w)] + J(x,[y,z],w) + J(x,z,[y,w]) + [J(x,y,z),w] + [z,J(x,y,w)] = "
                "J(x,y,[z,w]) + J([x,y],z,w) + [y,J(x,z,w)] + J(y,[x,z],w) + J(y,z,[x,w])",
                res.is_zero(), residual_str(res), sw.ms());
    }
    if (L.contains0) {
        Stopwatch sw;
        const bool b_ok = L.contains0(br(x, y));
        const bool d_ok = L.contains0(L.d(f));
        std::string res;
        if (!b_ok) res = "[x,y] leaves the subspace";
        if (!d_ok) res += std::string(res.empty() ? "" : "; ") + "df leaves the subspace";
        rep.add("lie2.closure", "[x,y] and df stay in the subspace", b_ok && d_ok, res,
                sw.ms());
    }
    return rep;
}

Report check_morphism(const Lie2Morphism& m, const Lie2Algebra& src, const Lie2Algebra& tgt,
                      const Lie2Element& x, const Lie2Element& y, const Lie2Element& z,
                      const Lie2Element& f) {
    Report rep;
    auto br = src.bracket;
    auto BR = tgt.bracket;

    {
        Stopwatch sw;
        const Lie2Element res = m.phi0(src.d(f)) - tgt.d(m.phi1(f));
        rep.add("morphism.chain", "phi0(df) = d'(phi1 f)", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res =
            m.phi0(br(x, y)) - BR(m.phi0(x), m.phi0(y)) - tgt.d(m.Phi(x, y));
        rep.add("morphism.bracket", "phi0[x,y] - [phi0 x, phi0 y]' = d'Phi(x,y)", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res =
            m.phi1(br(x, f)) - BR(m.phi0(x), m.phi1(f)) - m.Phi(x, src.d(f));
        rep.add("morphism.mixed-left", "phi1[x,f] - [phi0 x, phi1 f]' = Phi(x,df)",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res =
            m.phi1(br(f, x)) - BR(m.phi1(f), m.phi0(x)) + m.Phi(x, src.d(f));
        rep.add("morphism.mixed-right", "phi1[f,x] - [phi1 f, phi0 x]' = -Phi(x,df)",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element res = m.Phi(x, y) + m.Phi(y, x);
        rep.add("morphism.phi-skew", "Phi(x,y) = -Phi(y,x)", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const Lie2Element lhs = m.phi1(src.jacobiator(x, y, z)) -
                                tgt.jacobiator(m.phi0(x), m.phi0(y), m.phi0(z));
        const Lie2Element rhs = m.Phi(x, br(y, z)) - m.Phi(br(x, y), z) - m.Phi(y, br(x, z)) -
                                BR(m.Phi(x, y), m.phi0(z)) + BR(m.phi0(x), m.Phi(y, z)) -
                                BR(m.phi0(y), m.Phi(x, z));
        const Lie2Element res = lhs - rhs;
        rep.add("morphism.coherence",
                "phi1 J(x,y,z) - J'(phi0 x, phi0 y, phi0 z) = Phi(x,[y,z]) - Phi([x,y],z) - "
                "Phi(y,[x,z]) - [Phi(x,y),phi0 z]' + [phi0 x,Phi(y,z)]' - [phi0 y,Phi(x,z)]'",
                res.is_zero(), residual_str(res), sw.ms());
    }
    return rep;
}

// --- Instances ----------------------------------------------------------

Lie2Algebra lie2_of_plectic(const PlecticStructure& P) {
    Lie2Algebra L;
    const auto chart = P.chart();
    const int n = P.n();
    L.name = "structure-forms";
    L.zero0 = {0, DifferentialForm::zero(chart, n - 1)};
    L.zero1 = {1, DifferentialForm::zero(chart, n - 2)};
    L.d = [](const Lie2Element& f) -> Lie2Element {
        return {0, d(std::get<DifferentialForm>(f.payload))};
    };
    L.bracket = [P, z1 = L.zero1](const Lie2Element& a, const Lie2Element& b) -> Lie2Element {
        if (a.degree + b.degree > 0) return z1;
        return {0, semi_bracket(P, std::get<DifferentialForm>(a.payload),
                                std::get<DifferentialForm>(b.payload))};
    };
    L.jacobiator = [P](const Lie2Element& a, const Lie2Element& b,
                       const Lie2Element& c) -> Lie2Element {
        return {1, jacobiator_J(P, std::get<DifferentialForm>(a.payload),
                                std::get<DifferentialForm>(b.payload),
                                std::get<DifferentialForm>(c.payload))};
    };
    return L;
}

namespace {

Lie2Algebra lie2_sections(const SplitCourantModel& M, bool restrict_to_preserving) {
    Lie2Algebra L;
    const auto chart = M.chart();
    const auto zero_fn = RationalFunction::constant(chart->coords, Rational(0));
    L.name = restrict_to_preserving ? "preserving-sections" : "sections";
    L.zero0 = {0, GeneralizedSection::zero(chart)};
    L.zero1 = {1, zero_fn};
    L.d = [chart](const Lie2Element& f) -> Lie2Element {
        return {0, D_func(chart, std::get<RationalFunction>(f.payload))};
    };
    L.bracket = [M](const Lie2Element& a, const Lie2Element& b) -> Lie2Element {
        if (a.degree == 0 && b.degree == 0)
            return {0, courant_bracket(M, std::get<GeneralizedSection>(a.payload),
                                       std::get<GeneralizedSection>(b.payload))};
        if (a.degree == 0)
            return {1, anchor(std::get<GeneralizedSection>(a.payload))
                               .apply(std::get<RationalFunction>(b.payload)) *
                           Rational(1, 2)};
        return {1, anchor(std::get<GeneralizedSection>(b.payload))
                           .apply(std::get<RationalFunction>(a.payload)) *
                       Rational(-1, 2)};
    };
    L.jacobiator = [M](const Lie2Element& a, const Lie2Element& b,
                       const Lie2Element& c) -> Lie2Element {
        return {1, -T_tri(M, std::get<GeneralizedSection>(a.payload),
                          std::get<GeneralizedSection>(b.payload),
                          std::get<GeneralizedSection>(c.payload))};
    };
    if (restrict_to_preserving)
        L.contains0 = [M](const Lie2Element& e) {
            return preserves_splitting(M, std::get<GeneralizedSection>(e.payload));
        };
    return L;
}

}  // namespace

Lie2Algebra lie2_of_courant(const SplitCourantModel& M) { return lie2_sections(M, false); }

Lie2Algebra lie2_of_preserving(const SplitCourantModel& M) { return lie2_sections(M, true); }

Lie2Algebra lie2_trivial_fields(const PlecticStructure& P) {
    Lie2Algebra L;
    const auto chart = P.chart();
    L.name = "fields";
    L.zero0 = {0, VectorField(chart)};
    L.zero1 = {1, Rational(0)};
    L.d = [z0 = L.zero0](const Lie2Element&) { return z0; };
    L.bracket = [z1 = L.zero1](const Lie2Element& a, const Lie2Element& b) -> Lie2Element {
        if (a.degree + b.degree > 0) return z1;
        return {0, vf_bracket(std::get<VectorField>(a.payload),
                              std::get<VectorField>(b.payload))};
    };
    L.jacobiator = [z1 = L.zero1](const Lie2Element&, const Lie2Element&,
                                  const Lie2Element&) { return z1; };
    L.contains0 = [P](const Lie2Element& e) {
        return d(iota(std::get<VectorField>(e.payload), P.omega())).is_zero();
    };
    return L;
}

Lie2Algebra lie2_abelian(const PlecticStructure& P) {
    Lie2Algebra L;
    const auto chart = P.chart();
    const int n = P.n();
    L.name = "abelian-closed-forms";
    L.zero0 = {0, DifferentialForm::zero(chart, n - 1)};
    L.zero1 = {1, DifferentialForm::zero(chart, n - 2)};
    L.d = [](const Lie2Element& f) -> Lie2Element {
        return {0, d(std::get<DifferentialForm>(f.payload))};
    };
    L.bracket = [z0 = L.zero0, z1 = L.zero1](const Lie2Element& a,
                                             const Lie2Element& b) -> Lie2Element {
        return a.degree + b.degree > 0 ? z1 : z0;
    };
    L.jacobiator = [z1 = L.zero1](const Lie2Element&, const Lie2Element&,
                                  const Lie2Element&) { return z1; };
    L.contains0 = [](const Lie2Element& e) {
        return d(std::get<DifferentialForm>(e.payload)).is_zero();
    };
    return L;
}

Lie2Algebra lie2_fields_at(const PlecticStructure& P, std::vector<Rational> point) {
    Lie2Algebra L;
    const auto chart = P.chart();
    if (point.size() != chart->dim())
        throw DimensionMismatch("base point arity must match the chart");
    L.name = "fields-at-point";
    L.zero0 = {0, VectorField(chart)};
    L.zero1 = {1, Rational(0)};
    L.d = [z0 = L.zero0](const Lie2Element&) { return z0; };
    L.bracket = [z1 = L.zero1](const Lie2Element& a, const Lie2Element& b) -> Lie2Element {
        if (a.degree + b.degree > 0) return z1;
        return {0, vf_bracket(std::get<VectorField>(a.payload),
                              std::get<VectorField>(b.payload))};
    };
    L.jacobiator = [P, pt = std::move(point)](const Lie2Element& a, const Lie2Element& b,
                                              const Lie2Element& c) -> Lie2Element {
        const RationalFunction full =
            form_eval(P.omega(), {std::get<VectorField>(c.payload),
                                  std::get<VectorField>(b.payload),
                                  std::get<VectorField>(a.payload)});
        const auto val = full.eval(pt);
        if (!val) throw Error("contraction undefined at the base point");
        return {1, *val};
    };
    L.contains0 = [P](const Lie2Element& e) {
        return d(iota(std::get<VectorField>(e.payload), P.omega())).is_zero();
    };
    return L;
}

Lie2Morphism main_morphism(const PlecticStructure& P, const SplitCourantModel& M) {
    require_same_chart(P.chart(), M.chart());
    if (P.n() != 2) throw DimensionMismatch("section embedding requires a two-plectic form");
    if (!(M.twist() == P.omega()))
        throw Error("model twist must equal the structure form");
    Lie2Morphism m;
    m.phi0 = [P](const Lie2Element& a) -> Lie2Element {
        const auto& alpha = std::get<DifferentialForm>(a.payload);
        return {0, GeneralizedSection(hamiltonian_vf(P, alpha), alpha)};
    };
    m.phi1 = [](const Lie2Element& f) -> Lie2Element {
        return {1, std::get<DifferentialForm>(f.payload).coefficient({})};
    };
    m.Phi = [P](const Lie2Element& a, const Lie2Element& b) -> Lie2Element {
        const auto& alpha = std::get<DifferentialForm>(a.payload);
        const auto& beta = std::get<DifferentialForm>(b.payload);
        const VectorField va = hamiltonian_vf(P, alpha);
        const VectorField vb = hamiltonian_vf(P, beta);
        const RationalFunction pm =
            iota(va, beta).coefficient({}) - iota(vb, alpha).coefficient({});
        return {1, pm * Rational(-1, 2)};
    };
    return m;
}

DifferentialForm form_of_preserving_section(const PlecticStructure& P,
                                            const SplitCourantModel& M,
                                            const GeneralizedSection& e) {
    const DifferentialForm res = splitting_residual(M, e);
    if (!res.is_zero())
        throw Error("section does not preserve the splitting; residual = " + res.str());
    if (!(hamiltonian_vf(P, e.alpha) == e.v))
        throw Error("field half is not the compatible field of the form half");
    return e.alpha;
}

}  // namespace plectic
