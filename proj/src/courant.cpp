#include "plectic/courant.hpp"

namespace plectic {

namespace {

// i(v)a for a one-form a, as a function.
RationalFunction contract(const VectorField& v, const DifferentialForm& a) {
    return iota(v, a).coefficient({});
}

std::string residual_str(const GeneralizedSection& e) { return e.is_zero() ? "" : e.str(); }
std::string residual_str(const RationalFunction& f) { return f.is_zero() ? "" : f.str(); }

}  // namespace

GeneralizedSection::GeneralizedSection(VectorField vf, DifferentialForm a)
    : v(std::move(vf)), alpha(std::move(a)) {
    require_same_chart(v.chart(), alpha.chart());
    if (alpha.degree() != 1)
        throw DimensionMismatch("section form part must have degree 1");
}

GeneralizedSection GeneralizedSection::zero(const ChartPtr& chart) {
    return {VectorField(chart), DifferentialForm::zero(chart, 1)};
}

GeneralizedSection GeneralizedSection::from_field(VectorField vf) {
    auto chart = vf.chart();
    return {std::move(vf), DifferentialForm::zero(chart, 1)};
}

GeneralizedSection GeneralizedSection::from_form(DifferentialForm a) {
    auto chart = a.chart();
    return {VectorField(chart), std::move(a)};
}

GeneralizedSection GeneralizedSection::operator-() const { return {-v, -alpha}; }

GeneralizedSection GeneralizedSection::operator+(const GeneralizedSection& o) const {
    return {v + o.v, alpha + o.alpha};
}

GeneralizedSection GeneralizedSection::operator-(const GeneralizedSection& o) const {
    return {v - o.v, alpha - o.alpha};
}

GeneralizedSection GeneralizedSection::operator*(const RationalFunction& f) const {
    return {v * f, alpha * f};
}

GeneralizedSection GeneralizedSection::operator*(const Rational& c) const {
    return {v * c, alpha * c};
}

std::string GeneralizedSection::str() const {
    return "(" + v.str() + ", " + alpha.str() + ")";
}

SplitCourantModel::SplitCourantModel(ChartPtr chart)
    : chart_(std::move(chart)), twist_(DifferentialForm::zero(chart_, 3)) {}

SplitCourantModel::SplitCourantModel(ChartPtr chart, DifferentialForm twist)
    : chart_(std::move(chart)), twist_(std::move(twist)) {
    require_same_chart(chart_, twist_.chart());
    if (twist_.degree() != 3) throw DimensionMismatch("twist must be a three-form");
    const DifferentialForm dt = d(twist_);
    if (!dt.is_zero()) throw NotClosedError(dt);
}

RationalFunction pairing_plus(const GeneralizedSection& e1, const GeneralizedSection& e2) {
    return contract(e1.v, e2.alpha) + contract(e2.v, e1.alpha);
}

RationalFunction pairing_minus(const GeneralizedSection& e1, const GeneralizedSection& e2) {
    return contract(e1.v, e2.alpha) - contract(e2.v, e1.alpha);
}

const VectorField& anchor(const GeneralizedSection& e) { return e.v; }

GeneralizedSection D_func(const ChartPtr& chart, const RationalFunction& f) {
    return {VectorField(chart), d(chart, f)};
}

GeneralizedSection courant_bracket(const SplitCourantModel& M, const GeneralizedSection& e1,
                                   const GeneralizedSection& e2) {
    require_same_chart(M.chart(), e1.chart());
    require_same_chart(M.chart(), e2.chart());
    const DifferentialForm form_part =
        lie_derivative(e1.v, e2.alpha) - lie_derivative(e2.v, e1.alpha) -
        d(M.chart(), pairing_minus(e1, e2)) * Rational(1, 2) -
        iota(e2.v, iota(e1.v, M.twist()));
    return {vf_bracket(e1.v, e2.v), form_part};
}

GeneralizedSection dorfman_bracket(const SplitCourantModel& M, const GeneralizedSection& e1,
                                   const GeneralizedSection& e2) {
    require_same_chart(M.chart(), e1.chart());
    require_same_chart(M.chart(), e2.chart());
    const DifferentialForm form_part = lie_derivative(e1.v, e2.alpha) -
                                       iota(e2.v, d(e1.alpha)) -
                                       iota(e2.v, iota(e1.v, M.twist()));
    return {vf_bracket(e1.v, e2.v), form_part};
}

RationalFunction T_tri(const SplitCourantModel& M, const GeneralizedSection& e1,
                       const GeneralizedSection& e2, const GeneralizedSection& e3) {
    const RationalFunction sum = pairing_plus(courant_bracket(M, e1, e2), e3) +
                                 pairing_plus(courant_bracket(M, e3, e1), e2) +
                                 pairing_plus(courant_bracket(M, e2, e3), e1);
    return sum * Rational(1, 6);
}

RationalFunction curvature(const SplitCourantModel& M, const VectorField& v1,
                           const VectorField& v2, const VectorField& v3) {
    return pairing_plus(
        courant_bracket(M, GeneralizedSection::from_field(v1), GeneralizedSection::from_field(v2)),
        GeneralizedSection::from_field(v3));
}

GeneralizedSection change_splitting(const GeneralizedSection& e, const DifferentialForm& B) {
    require_same_chart(e.chart(), B.chart());
    if (B.degree() != 2) throw DimensionMismatch("gauge form must have degree 2");
    return {e.v, e.alpha - iota(e.v, B)};
}

SplitCourantModel shifted_twist(const SplitCourantModel& M, const DifferentialForm& B) {
    require_same_chart(M.chart(), B.chart());
    if (B.degree() != 2) throw DimensionMismatch("gauge form must have degree 2");
    return {M.chart(), M.twist() + d(B)};
}

DifferentialForm splitting_residual(const SplitCourantModel& M, const GeneralizedSection& e) {
    require_same_chart(M.chart(), e.chart());
    return d(e.alpha) + iota(e.v, M.twist());
}

bool preserves_splitting(const SplitCourantModel& M, const GeneralizedSection& e) {
    return splitting_residual(M, e).is_zero();
}

Report verify_courant_axioms(const SplitCourantModel& M, const GeneralizedSection& e1,
                             const GeneralizedSection& e2, const GeneralizedSection& e3,
                             const RationalFunction& f, const RationalFunction& g) {
    Report rep;
    const auto& chart = M.chart();
    auto cb = [&](const GeneralizedSection& a, const GeneralizedSection& b) {
        return courant_bracket(M, a, b);
    };
    auto db = [&](const GeneralizedSection& a, const GeneralizedSection& b) {
        return dorfman_bracket(M, a, b);
    };

    {
        Stopwatch sw;
        const GeneralizedSection lhs =
            cb(e1, cb(e2, e3)) - cb(cb(e1, e2), e3) - cb(e2, cb(e1, e3));
        const GeneralizedSection res = lhs + D_func(chart, T_tri(M, e1, e2, e3));
        rep.add("courant.c1", "[e1,[e2,e3]] - [[e1,e2],e3] - [e2,[e1,e3]] = -D T(e1,e2,e3)",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const VectorField res = anchor(cb(e1, e2)) - vf_bracket(anchor(e1), anchor(e2));
        rep.add("courant.c2", "rho([e1,e2]) = [rho e1, rho e2]", res.is_zero(),
                res.is_zero() ? "" : res.str(), sw.ms());
    }
    {
        Stopwatch sw;
        const GeneralizedSection lhs = cb(e1, e2 * f);
        const GeneralizedSection rhs = cb(e1, e2) * f + e2 * anchor(e1).apply(f) -
                                       D_func(chart, f) * (pairing_plus(e1, e2) * Rational(1, 2));
        const GeneralizedSection res = lhs - rhs;
        rep.add("courant.c3", "[e1, f e2] = f [e1,e2] + rho(e1)(f) e2 - 1/2 <e1,e2> D f",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const RationalFunction res = pairing_plus(D_func(chart, f), D_func(chart, g));
        rep.add("courant.c4", "<D f, D g> = 0", res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const RationalFunction lhs = anchor(e1).apply(pairing_plus(e2, e3));
        auto adj = [&](const GeneralizedSection& a, const GeneralizedSection& b) {
            return cb(a, b) + D_func(chart, pairing_plus(a, b) * Rational(1, 2));
        };
        const RationalFunction rhs =
            pairing_plus(adj(e1, e2), e3) + pairing_plus(e2, adj(e1, e3));
        const RationalFunction res = lhs - rhs;
        rep.add("courant.c5",
                "rho(e1)<e2,e3> = <[e1,e2] + 1/2 D<e1,e2>, e3> + <e2, [e1,e3] + 1/2 D<e1,e3>>",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const GeneralizedSection res =
            db(e1, db(e2, e3)) - db(db(e1, e2), e3) - db(e2, db(e1, e3));
        rep.add("courant.d1", "[[e1,[[e2,e3]]]] = [[[[e1,e2]],e3]] + [[e2,[[e1,e3]]]]",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const VectorField res = anchor(db(e1, e2)) - vf_bracket(anchor(e1), anchor(e2));
        rep.add("courant.d2", "rho([[e1,e2]]) = [rho e1, rho e2]", res.is_zero(),
                res.is_zero() ? "" : res.str(), sw.ms());
    }
    {
        Stopwatch sw;
        const GeneralizedSection res =
            db(e1, e2 * f) - (db(e1, e2) * f + e2 * anchor(e1).apply(f));
        rep.add("courant.d3", "[[e1, f e2]] = f [[e1,e2]] + rho(e1)(f) e2", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const GeneralizedSection res =
            db(e1, e1) - D_func(chart, pairing_plus(e1, e1) * Rational(1, 2));
        rep.add("courant.d4", "[[e1,e1]] = 1/2 D<e1,e1>", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const RationalFunction res =
            anchor(e1).apply(pairing_plus(e2, e3)) -
            (pairing_plus(db(e1, e2), e3) + pairing_plus(e2, db(e1, e3)));
        rep.add("courant.d5", "rho(e1)<e2,e3> = <[[e1,e2]],e3> + <e2,[[e1,e3]]>", res.is_zero(),
                residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const GeneralizedSection res =
            db(e1, e2) - (cb(e1, e2) + D_func(chart, pairing_plus(e1, e2) * Rational(1, 2)));
        rep.add("courant.interchange", "[[e1,e2]] = [e1,e2] + 1/2 D<e1,e2>", res.is_zero(),
                residual_str(res), sw.ms());
    }
    return rep;
}

}  // namespace plectic
