#include "plectic/exterior.hpp"

namespace plectic {

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    require_same_chart(a.chart(), b.chart());
    DifferentialForm out(a.chart(), a.degree() + b.degree());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            IndexTuple joined = ka;
            joined.insert(joined.end(), kb.begin(), kb.end());
            out.add_term(joined, ca * cb);
        }
    }
    return out;
}

DifferentialForm d(const DifferentialForm& a) {
    DifferentialForm out(a.chart(), a.degree() + 1);
    const std::size_t n = a.chart()->dim();
    for (const auto& [k, c] : a.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            const RationalFunction dc = c.diff(i);
            if (dc.is_zero()) continue;
            IndexTuple joined;
            joined.reserve(k.size() + 1);
            joined.push_back(static_cast<int>(i));
            joined.insert(joined.end(), k.begin(), k.end());
            out.add_term(joined, dc);
        }
    }
    return out;
}

DifferentialForm d(ChartPtr chart, const RationalFunction& f) {
    return d(DifferentialForm::function(std::move(chart), f));
}

DifferentialForm iota(const VectorField& v, const DifferentialForm& a) {
    require_same_chart(v.chart(), a.chart());
    if (a.degree() == 0) throw DimensionMismatch("interior product of a 0-form");
    DifferentialForm out(a.chart(), a.degree() - 1);
    for (const auto& [k, c] : a.terms()) {
        for (std::size_t j = 0; j < k.size(); ++j) {
            const RationalFunction& comp = v.component(static_cast<std::size_t>(k[j]));
            if (comp.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(k.size() - 1);
            for (std::size_t t = 0; t < k.size(); ++t)
                if (t != j) rest.push_back(k[t]);
            RationalFunction coeff = c * comp;
            if (j % 2 == 1) coeff = -coeff;
            out.add_term(rest, coeff);
        }
    }
    return out;
}

DifferentialForm lie_derivative(const VectorField& v, const DifferentialForm& a) {
    require_same_chart(v.chart(), a.chart());
    if (a.degree() == 0) {
        RationalFunction f = a.coefficient({});
        return DifferentialForm::function(a.chart(), v.apply(f));
    }
    return iota(v, d(a)) + d(iota(v, a));
}

VectorField vf_bracket(const VectorField& v, const VectorField& w) {
    require_same_chart(v.chart(), w.chart());
    VectorField out(v.chart());
    for (std::size_t i = 0; i < v.chart()->dim(); ++i)
        out.component(i) = v.apply(w.component(i)) - w.apply(v.component(i));
    return out;
}

RationalFunction form_eval(const DifferentialForm& a, const std::vector<VectorField>& fields) {
    if (fields.size() != static_cast<std::size_t>(a.degree()))
        throw DimensionMismatch("contraction arity differs from form degree");
    DifferentialForm acc = a;
    // fields[0] fills the first slot, so it is contracted first.
    for (const auto& v : fields) acc = iota(v, acc);
    return acc.coefficient({});
}

DifferentialForm poincare_potential(const DifferentialForm& a) {
    const int k = a.degree();
    if (k < 1) throw DimensionMismatch("potential of a 0-form");
    if (!a.has_polynomial_coeffs())
        throw RationalCoefficientUnsupported(
            "radial homotopy needs polynomial coefficients");
    const DifferentialForm da = d(a);
    if (!da.is_zero()) throw NotClosedError(da);

    const auto& vars = a.chart()->coords;
    DifferentialForm out(a.chart(), k - 1);
    for (const auto& [idx, c] : a.terms()) {
        const Polynomial p = *c.as_polynomial();
        for (const auto& [mono, coef] : p.terms()) {
            const Rational scaled = coef / Rational(static_cast<long>(k + mono_degree(mono)));
            for (std::size_t j = 0; j < idx.size(); ++j) {
                Monomial m = mono;
                m[static_cast<std::size_t>(idx[j])] += 1;
                Polynomial term(vars);
                term.add_term(m, j % 2 == 0 ? scaled : -scaled);
                IndexTuple rest;
                for (std::size_t t = 0; t < idx.size(); ++t)
                    if (t != j) rest.push_back(idx[t]);
                out.add_term(rest, RationalFunction(term));
            }
        }
    }
    return out;
}

}  // namespace plectic
