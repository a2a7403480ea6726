#include "plectic/nplectic.hpp"

#include <random>
#include <sstream>

#include "plectic/linalg.hpp"

namespace plectic {

namespace {

// All strictly increasing k-tuples over {0..dim-1} in lexicographic order.
std::vector<IndexTuple> increasing_tuples(std::size_t dim, int k) {
    std::vector<IndexTuple> out;
    IndexTuple cur;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= static_cast<int>(dim) - remaining; ++i) {
            cur.push_back(i);
            self(self, i + 1, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

// Matrix of v -> iota(v, omega) in wedge-basis coordinates: one row per
// strictly increasing n-tuple, one column per coordinate direction.
struct ContractionMatrix {
    std::vector<IndexTuple> rows;
    RFMatrix m;
};

ContractionMatrix contraction_matrix(const DifferentialForm& omega) {
    const auto& chart = omega.chart();
    const std::size_t dim = chart->dim();
    const int n = omega.degree() - 1;
    auto rows = increasing_tuples(dim, n);
    RFMatrix m(chart->coords, rows.size(), dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const DifferentialForm col = iota(VectorField::basis(chart, c), omega);
        for (std::size_t r = 0; r < rows.size(); ++r) m.at(r, c) = col.coefficient(rows[r]);
    }
    return {std::move(rows), std::move(m)};
}

// Coefficient vector of an n-form over the same row ordering.
std::vector<RationalFunction> form_coords(const DifferentialForm& a,
                                          const std::vector<IndexTuple>& rows) {
    std::vector<RationalFunction> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(a.coefficient(r));
    return out;
}

}  // namespace

std::string NondegeneracyVerdict::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::CertifiedEverywhere: {
            os << "certified-everywhere (constant minor on rows";
            for (auto r : witness_rows) os << " " << r;
            os << ")";
            break;
        }
        case Kind::GenericOnly:
            os << "generic-only (full rank over the function field, no constant minor)";
            break;
        case Kind::DegenerateAt: {
            os << "degenerate-at (point";
            for (const auto& c : degenerate->point) os << " " << c.str();
            os << "; kernel";
            for (const auto& c : degenerate->kernel_vector) os << " " << c.str();
            os << ")";
            break;
        }
    }
    return os.str();
}

NondegeneracyVerdict check_nondegenerate(const DifferentialForm& omega, std::uint64_t seed) {
    const auto& chart = omega.chart();
    const std::size_t dim = chart->dim();
    NondegeneracyVerdict v;

    auto cm = contraction_matrix(omega);
    const std::size_t nrows = cm.m.rows();

    // 1. Look for a full-size minor that is a nonzero constant.
    if (nrows >= dim) {
        for (const auto& rows : increasing_tuples(nrows, static_cast<int>(dim))) {
            RFMatrix sub(chart->coords, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    sub.at(i, j) = cm.m.at(static_cast<std::size_t>(rows[i]), j);
            const RationalFunction dd = det(sub);
            if (dd.is_constant() && !dd.is_zero()) {
                v.kind = NondegeneracyVerdict::Kind::CertifiedEverywhere;
                v.witness_rows.assign(rows.begin(), rows.end());
                return v;
            }
        }
    }

    // 2. Sample rational points hunting for a kernel vector. When the
    // generic rank is already deficient every defined point has one, so keep
    // sampling (widening the range) until a defined point turns up.
    const bool deficient = rank(cm.m) < dim;
    std::mt19937_64 eng(seed);
    auto sample = [&](long range) {
        std::uniform_int_distribution<long> num(-range, range), den(1, 2);
        std::vector<Rational> p;
        for (std::size_t i = 0; i < dim; ++i) p.emplace_back(num(eng), den(eng));
        return p;
    };
    auto kernel_at = [&](const std::vector<Rational>& pt)
        -> std::optional<std::vector<Rational>> {
        RFMatrix at_pt(chart->coords, nrows, dim);
        for (std::size_t r = 0; r < nrows; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                const auto val = cm.m.at(r, c).eval(pt);
                if (!val) return std::nullopt;  // undefined point: report as no kernel
                at_pt.at(r, c) = RationalFunction::constant(chart->coords, *val);
            }
        }
        auto sol = solve_linear(
            at_pt, std::vector<RationalFunction>(
                       nrows, RationalFunction::constant(chart->coords, Rational(0))));
        if (sol.kernel.empty()) return std::vector<Rational>{};
        std::vector<Rational> kv;
        for (const auto& entry : sol.kernel.front())
            kv.push_back(entry.is_zero() ? Rational(0) : entry.constant_value());
        return kv;
    };
    const int attempts = deficient ? 500 : 25;
    for (int t = 0; t < attempts; ++t) {
        const auto pt = t == 0 ? std::vector<Rational>(dim, Rational(0))
                               : sample(t < 25 ? 3 : 3 + t / 25);
        const auto kv = kernel_at(pt);
        if (!kv) continue;  // a denominator vanished here
        if (!kv->empty()) {
            v.kind = NondegeneracyVerdict::Kind::DegenerateAt;
            v.degenerate = DegeneratePoint{pt, *kv};
            return v;
        }
        if (deficient) continue;  // keep hunting: a kernel is guaranteed somewhere
    }
    if (deficient)
        throw Error("rank-deficient structure, but no defined rational sample point found");

    v.kind = NondegeneracyVerdict::Kind::GenericOnly;
    return v;
}

PlecticStructure::PlecticStructure(DifferentialForm omega, std::uint64_t seed)
    : omega_(std::move(omega)) {
    if (omega_.degree() < 2)
        throw DimensionMismatch("structure form must have degree at least 2");
    const DifferentialForm dw = d(omega_);
    if (!dw.is_zero()) throw NotClosedError(dw);
    verdict_ = check_nondegenerate(omega_, seed);
}

void PlecticStructure::require_solvable() const {
    if (verdict_.kind == NondegeneracyVerdict::Kind::DegenerateAt)
        throw DegenerateStructure("structure is degenerate: " + verdict_.describe());
}

VectorField hamiltonian_vf(const PlecticStructure& P, const DifferentialForm& alpha) {
    P.require_solvable();
    if (alpha.degree() != P.n() - 1)
        throw DimensionMismatch("form degree must be one below the structure arity");
    require_same_chart(P.chart(), alpha.chart());

    auto cm = contraction_matrix(P.omega());
    const DifferentialForm da = d(alpha);
    std::vector<RationalFunction> b = form_coords(-da, cm.rows);
    auto sol = solve_linear(cm.m, b);
    if (sol.kind == SolveResult::Kind::Inconsistent) {
        VectorField best(P.chart(), sol.particular);
        throw NotHamiltonianError(da + iota(best, P.omega()));
    }
    if (sol.kind == SolveResult::Kind::Affine)
        throw DegenerateStructure("contraction map has a kernel over the function field");
    return VectorField(P.chart(), sol.particular);
}

DifferentialForm hamiltonian_form_of(const PlecticStructure& P, const VectorField& v) {
    require_same_chart(P.chart(), v.chart());
    const DifferentialForm beta = -iota(v, P.omega());
    const DifferentialForm obstruction = d(beta);
    if (!obstruction.is_zero()) throw NoPrimitiveError(obstruction);
    return poincare_potential(beta);
}

DifferentialForm semi_bracket(const PlecticStructure& P, const DifferentialForm& a,
                              const DifferentialForm& b) {
    const VectorField va = hamiltonian_vf(P, a);
    const VectorField vb = hamiltonian_vf(P, b);
    return iota(vb, iota(va, P.omega()));
}

DifferentialForm jacobiator_J(const PlecticStructure& P, const DifferentialForm& a,
                              const DifferentialForm& b, const DifferentialForm& c) {
    const VectorField va = hamiltonian_vf(P, a);
    const VectorField vb = hamiltonian_vf(P, b);
    const VectorField vc = hamiltonian_vf(P, c);
    return iota(va, iota(vb, iota(vc, P.omega())));
}

namespace {

// <v_a + a, v_b + b>_- = iota(v_a, b) - iota(v_b, a), an (n-2)-form.
DifferentialForm minus_pair(const VectorField& va, const DifferentialForm& a,
                            const VectorField& vb, const DifferentialForm& b) {
    return iota(va, b) - iota(vb, a);
}

std::string residual_str(const DifferentialForm& r) { return r.is_zero() ? "" : r.str(); }

}  // namespace

Report verify_prop35(const PlecticStructure& P, const DifferentialForm& a,
                     const DifferentialForm& b, const DifferentialForm& c) {
    Report rep;
    const VectorField va = hamiltonian_vf(P, a);
    const VectorField vb = hamiltonian_vf(P, b);

    {
        Stopwatch sw;
        const DifferentialForm lhs = d(semi_bracket(P, a, b));
        const DifferentialForm rhs = -iota(vf_bracket(va, vb), P.omega());
        const DifferentialForm res = lhs - rhs;
        rep.add("prop35.1", "d{a,b} = -i([va,vb])w", res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const DifferentialForm res = semi_bracket(P, a, b) + semi_bracket(P, b, a);
        rep.add("prop35.2", "{a,b} = -{b,a}", res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const DifferentialForm lhs = semi_bracket(P, a, semi_bracket(P, b, c)) -
                                     semi_bracket(P, semi_bracket(P, a, b), c) -
                                     semi_bracket(P, b, semi_bracket(P, a, c));
        const DifferentialForm rhs = d(jacobiator_J(P, a, b, c));
        const DifferentialForm res = lhs - rhs;
        rep.add("prop35.3", "{a,{b,c}} - {{a,b},c} - {b,{a,c}} = d(iva ivb ivc w)",
                res.is_zero(), residual_str(res), sw.ms());
    }
    return rep;
}

Report verify_lemmas(const PlecticStructure& P, const DifferentialForm& a,
                     const DifferentialForm& b, const DifferentialForm& c) {
    Report rep;
    const VectorField va = hamiltonian_vf(P, a);
    const VectorField vb = hamiltonian_vf(P, b);
    const VectorField vc = hamiltonian_vf(P, c);

    {
        Stopwatch sw;
        const DifferentialForm res =
            lie_derivative(va, b) - (semi_bracket(P, a, b) + d(iota(va, b)));
        rep.add("lemmas.calc1", "L(va)b = {a,b} + d(i(va)b)", res.is_zero(), residual_str(res),
                sw.ms());
    }
    {
        Stopwatch sw;
        const DifferentialForm lhs = iota(vf_bracket(va, vb), c) + iota(vf_bracket(vc, va), b) +
                                     iota(vf_bracket(vb, vc), a);
        const DifferentialForm rhs =
            jacobiator_J(P, a, b, c) * Rational(-3) +
            iota(va, d(minus_pair(vb, b, vc, c))) + iota(vc, d(minus_pair(va, a, vb, b))) +
            iota(vb, d(minus_pair(vc, c, va, a)));
        const DifferentialForm res = lhs - rhs;
        rep.add("lemmas.calc2",
                "i([va,vb])c + cyc = -3 i(va)i(vb)i(vc)w + i(va)d<b,c>- + i(vc)d<a,b>- + "
                "i(vb)d<c,a>-",
                res.is_zero(), residual_str(res), sw.ms());
    }
    {
        Stopwatch sw;
        const DifferentialForm res =
            lie_derivative(va, b) - lie_derivative(vb, a) -
            (semi_bracket(P, a, b) * Rational(2) + d(minus_pair(va, a, vb, b)));
        rep.add("lemmas.calc3", "L(va)b - L(vb)a = 2{a,b} + d<a,b>-", res.is_zero(),
                residual_str(res), sw.ms());
    }
    return rep;
}

}  // namespace plectic
