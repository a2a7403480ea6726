#include "plectic/cocycle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"

namespace plectic {

namespace {

std::string idx2(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

std::optional<Rational> constant_of(const RationalFunction& f) {
    if (!f.is_constant()) return std::nullopt;
    return f.constant_value();
}

// First-failure aggregator: one report line per law, the earliest offending
// item named in the residual.
class Law {
public:
    void fail(std::string what) {
        if (ok_) {
            ok_ = false;
            residual_ = std::move(what);
        }
    }
    void emit(Report& rep, const std::string& id, const std::string& anchor,
              const Stopwatch& sw) const {
        rep.add(id, anchor, ok_, residual_, sw.ms());
    }
    bool ok() const { return ok_; }

private:
    bool ok_ = true;
    std::string residual_;
};

void require_structure_form(const DifferentialForm& omega, const BoxCover& cover, int degree) {
    require_same_chart(omega.chart(), cover.chart());
    if (omega.degree() != degree) throw DimensionMismatch("structure form has the wrong degree");
    const auto residual = d(omega);
    if (!residual.is_zero()) throw NotClosedError(residual);
}

}  // namespace

BoxCover::BoxCover(ChartPtr chart, std::vector<Box> boxes)
    : chart_(std::move(chart)), boxes_(std::move(boxes)) {
    if (boxes_.empty()) throw Error("a cover needs at least one box");
    const std::size_t dim = chart_->coords.size();
    for (const auto& b : boxes_) {
        if (b.lo.size() != dim || b.hi.size() != dim)
            throw DimensionMismatch("box corner size does not match the chart");
        for (std::size_t k = 0; k < dim; ++k)
            if (!(b.lo[k] < b.hi[k])) throw Error("box has an empty side");
    }
}

bool BoxCover::overlap(std::size_t i, std::size_t j) const {
    const Box& a = boxes_.at(i);
    const Box& b = boxes_.at(j);
    for (std::size_t k = 0; k < a.lo.size(); ++k) {
        const Rational lo = std::max(a.lo[k], b.lo[k]);
        const Rational hi = std::min(a.hi[k], b.hi[k]);
        if (!(lo < hi)) return false;
    }
    return true;
}

bool BoxCover::overlap3(std::size_t i, std::size_t j, std::size_t k) const {
    const Box& a = boxes_.at(i);
    const Box& b = boxes_.at(j);
    const Box& c = boxes_.at(k);
    for (std::size_t t = 0; t < a.lo.size(); ++t) {
        const Rational lo = std::max({a.lo[t], b.lo[t], c.lo[t]});
        const Rational hi = std::min({a.hi[t], b.hi[t], c.hi[t]});
        if (!(lo < hi)) return false;
    }
    return true;
}

bool BoxCover::overlap4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    const Box& a = boxes_.at(i);
    const Box& b = boxes_.at(j);
    const Box& c = boxes_.at(k);
    const Box& e = boxes_.at(l);
    for (std::size_t t = 0; t < a.lo.size(); ++t) {
        const Rational lo = std::max({a.lo[t], b.lo[t], c.lo[t], e.lo[t]});
        const Rational hi = std::min({a.hi[t], b.hi[t], c.hi[t], e.hi[t]});
        if (!(lo < hi)) return false;
    }
    return true;
}

RationalFunction atiyah_shear_residual(const PlecticStructure& P, const DifferentialForm& sigma,
                                       const AtiyahSection& a, const AtiyahSection& b) {
    require_same_chart(P.chart(), sigma.chart());
    if (sigma.degree() != 1) throw DimensionMismatch("shear datum must be a one-form");
    const auto shear = [&](const AtiyahSection& e) {
        return AtiyahSection(e.v, e.f - iota(e.v, sigma).coefficient({}));
    };
    const AtiyahSection lhs = atiyah_bracket(P, shear(a), shear(b));
    const AtiyahSection rhs = shear(atiyah_bracket(P, a, b));
    return lhs.f - rhs.f;
}

DifferentialForm courant_shear_residual(const SplitCourantModel& M, const DifferentialForm& S,
                                        const GeneralizedSection& e1,
                                        const GeneralizedSection& e2) {
    require_same_chart(M.chart(), S.chart());
    if (S.degree() != 2) throw DimensionMismatch("shear datum must be a two-form");
    const GeneralizedSection lhs = courant_bracket(M, change_splitting(e1, S), change_splitting(e2, S));
    const GeneralizedSection rhs = change_splitting(courant_bracket(M, e1, e2), S);
    return lhs.alpha - rhs.alpha;
}

Report verify_triv_2form(const DifferentialForm& omega, const BoxCover& cover,
                         const LocalData1& data, Periodicity mode) {
    require_structure_form(omega, cover, 2);
    const ChartPtr& chart = cover.chart();
    const std::size_t n = cover.size();
    Report rep;

    Stopwatch sw_data;
    Law shape;
    if (data.theta.size() != n) {
        std::ostringstream os;
        os << "cover has " << n << " boxes but " << data.theta.size() << " potentials";
        shape.fail(os.str());
    }
    for (std::size_t i = 0; i < data.theta.size(); ++i) {
        if (!same_chart(data.theta[i].chart(), chart)) {
            shape.fail("potential " + std::to_string(i) + " lives on a different chart");
        } else if (data.theta[i].degree() != 1) {
            shape.fail("potential " + std::to_string(i) + " is not a one-form");
        }
    }
    for (const auto& [key, fn] : data.h) {
        (void)fn;
        const auto [i, j] = key;
        if (!(i < j) || j >= n)
            shape.fail("transition " + idx2(i, j) + " has bad indices");
        else if (!cover.overlap(i, j))
            shape.fail("transition " + idx2(i, j) + " declared on disjoint boxes");
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cover.overlap(i, j) && !data.h.count({i, j}))
                shape.fail("missing transition " + idx2(i, j));
    shape.emit(rep, "cocycle2.data", "one potential per box, one transition per overlap", sw_data);

    Stopwatch sw_curl;
    Law curl;
    for (std::size_t i = 0; i < std::min(n, data.theta.size()); ++i) {
        const DifferentialForm r = d(data.theta[i]) - omega;
        if (!r.is_zero()) curl.fail("box " + std::to_string(i) + ": " + r.str());
    }
    curl.emit(rep, "cocycle2.curl", "d theta_i = w", sw_curl);

    const auto have = [&](std::size_t i, std::size_t j) {
        return i < j && j < data.theta.size() && j < n && data.h.count({i, j}) > 0;
    };

    Stopwatch sw_tr;
    Law tr;
    for (const auto& [key, fn] : data.h) {
        const auto [i, j] = key;
        if (!have(i, j)) continue;
        const DifferentialForm r = (data.theta[j] - data.theta[i]) - d(chart, fn);
        if (!r.is_zero()) tr.fail("overlap " + idx2(i, j) + ": " + r.str());
    }
    tr.emit(rep, "cocycle2.transition", "theta_j - theta_i = d h_ij", sw_tr);

    Stopwatch sw_cc;
    Law cc;
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!cover.overlap3(i, j, k)) continue;
                if (!have(i, j) || !have(i, k) || !have(j, k)) continue;
                const RationalFunction c =
                    data.h.at({j, k}) - data.h.at({i, k}) + data.h.at({i, j});
                const auto value = constant_of(c);
                if (!value) {
                    cc.fail("triple " + idx3(i, j, k) + ": " + c.str() + " is not constant");
                } else if (mode == Periodicity::Circle && !value->is_integer()) {
                    cc.fail("triple " + idx3(i, j, k) + ": " + value->str() +
                            " is not an integer");
                }
            }
    cc.emit(rep, "cocycle2.cocycle",
            mode == Periodicity::Circle ? "h_jk - h_ik + h_ij an integer on triple overlaps"
                                        : "h_jk - h_ik + h_ij constant on triple overlaps",
            sw_cc);

    Stopwatch sw_eq;
    Law eq;
    const PlecticStructure P(omega);
    const std::size_t dim = chart->coords.size();
    for (std::size_t i = 0; i + 1 < std::min(n, data.theta.size()); ++i)
        for (std::size_t j = i + 1; j < std::min(n, data.theta.size()); ++j) {
            if (!cover.overlap(i, j)) continue;
            const DifferentialForm sigma = data.theta[j] - data.theta[i];
            for (std::size_t p = 0; p + 1 < dim && eq.ok(); ++p)
                for (std::size_t q = p + 1; q < dim; ++q) {
                    const AtiyahSection a(
                        VectorField::basis(chart, p),
                        RationalFunction(Polynomial::variable(chart->coords, p)));
                    const AtiyahSection b(
                        VectorField::basis(chart, q),
                        RationalFunction(Polynomial::variable(chart->coords, q)));
                    const RationalFunction r = atiyah_shear_residual(P, sigma, a, b);
                    if (!r.is_zero())
                        eq.fail("overlap " + idx2(i, j) + ": residual " + r.str());
                }
        }
    eq.emit(rep, "cocycle2.equivariance", "transition shears preserve the invariant-field bracket",
            sw_eq);

    return rep;
}

Report verify_triv_3form(const DifferentialForm& omega, const BoxCover& cover,
                         const LocalData2& data, Periodicity mode) {
    require_structure_form(omega, cover, 3);
    const ChartPtr& chart = cover.chart();
    const std::size_t n = cover.size();
    Report rep;

    Stopwatch sw_data;
    Law shape;
    if (data.B.size() != n) {
        std::ostringstream os;
        os << "cover has " << n << " boxes but " << data.B.size() << " potentials";
        shape.fail(os.str());
    }
    for (std::size_t i = 0; i < data.B.size(); ++i) {
        if (!same_chart(data.B[i].chart(), chart)) {
            shape.fail("potential " + std::to_string(i) + " lives on a different chart");
        } else if (data.B[i].degree() != 2) {
            shape.fail("potential " + std::to_string(i) + " is not a two-form");
        }
    }
    for (const auto& [key, form] : data.A) {
        const auto [i, j] = key;
        if (!(i < j) || j >= n)
            shape.fail("transition " + idx2(i, j) + " has bad indices");
        else if (!cover.overlap(i, j))
            shape.fail("transition " + idx2(i, j) + " declared on disjoint boxes");
        else if (!same_chart(form.chart(), chart) || form.degree() != 1)
            shape.fail("transition " + idx2(i, j) + " is not a one-form on the chart");
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cover.overlap(i, j) && !data.A.count({i, j}))
                shape.fail("missing transition " + idx2(i, j));
    for (const auto& [key, fn] : data.h) {
        (void)fn;
        const auto [i, j, k] = key;
        if (!(i < j && j < k) || k >= n)
            shape.fail("function " + idx3(i, j, k) + " has bad indices");
        else if (!cover.overlap3(i, j, k))
            shape.fail("function " + idx3(i, j, k) + " declared on a disjoint triple");
    }
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (cover.overlap3(i, j, k) && !data.h.count({i, j, k}))
                    shape.fail("missing function " + idx3(i, j, k));
    shape.emit(rep, "cocycle3.data",
               "potential per box, transition per overlap, function per triple", sw_data);

    Stopwatch sw_curl;
    Law curl;
    for (std::size_t i = 0; i < std::min(n, data.B.size()); ++i) {
        const DifferentialForm r = d(data.B[i]) - omega;
        if (!r.is_zero()) curl.fail("box " + std::to_string(i) + ": " + r.str());
    }
    curl.emit(rep, "cocycle3.curl", "d B_i = w", sw_curl);

    const auto haveA = [&](std::size_t i, std::size_t j) {
        if (!(i < j) || j >= std::min(n, data.B.size())) return false;
        const auto it = data.A.find({i, j});
        return it != data.A.end() && same_chart(it->second.chart(), chart) &&
               it->second.degree() == 1;
    };

    Stopwatch sw_tr;
    Law tr;
    for (const auto& [key, form] : data.A) {
        const auto [i, j] = key;
        if (!haveA(i, j)) continue;
        const DifferentialForm r = (data.B[j] - data.B[i]) - d(form);
        if (!r.is_zero()) tr.fail("overlap " + idx2(i, j) + ": " + r.str());
    }
    tr.emit(rep, "cocycle3.transition", "B_j - B_i = d A_ij", sw_tr);

    Stopwatch sw_tri;
    Law tri;
    for (const auto& [key, fn] : data.h) {
        const auto [i, j, k] = key;
        if (!(i < j && j < k) || k >= n) continue;
        if (!haveA(i, j) || !haveA(i, k) || !haveA(j, k)) continue;
        const DifferentialForm r =
            (data.A.at({j, k}) - data.A.at({i, k}) + data.A.at({i, j})) - d(chart, fn);
        if (!r.is_zero()) tri.fail("triple " + idx3(i, j, k) + ": " + r.str());
    }
    tri.emit(rep, "cocycle3.triple", "A_jk - A_ik + A_ij = d h_ijk", sw_tri);

    const auto haveH = [&](std::size_t i, std::size_t j, std::size_t k) {
        return data.h.count({i, j, k}) > 0;
    };

    Stopwatch sw_cc;
    Law cc;
    for (std::size_t i = 0; i + 3 < n; ++i)
        for (std::size_t j = i + 1; j + 2 < n; ++j)
            for (std::size_t k = j + 1; k + 1 < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (!cover.overlap4(i, j, k, l)) continue;
                    if (!haveH(j, k, l) || !haveH(i, k, l) || !haveH(i, j, l) ||
                        !haveH(i, j, k))
                        continue;
                    const RationalFunction c = data.h.at({j, k, l}) - data.h.at({i, k, l}) +
                                               data.h.at({i, j, l}) - data.h.at({i, j, k});
                    const auto value = constant_of(c);
                    std::ostringstream os;
                    os << "quadruple (" << i << "," << j << "," << k << "," << l << "): ";
                    if (!value) {
                        cc.fail(os.str() + c.str() + " is not constant");
                    } else if (mode == Periodicity::Circle && !value->is_integer()) {
                        cc.fail(os.str() + value->str() + " is not an integer");
                    }
                }
    cc.emit(rep, "cocycle3.cocycle",
            mode == Periodicity::Circle
                ? "alternating sum of h an integer on quadruple overlaps"
                : "alternating sum of h constant on quadruple overlaps",
            sw_cc);

    Stopwatch sw_eq;
    Law eq;
    const SplitCourantModel M0(chart);
    const std::size_t dim = chart->coords.size();
    for (std::size_t i = 0; i + 1 < std::min(n, data.B.size()); ++i)
        for (std::size_t j = i + 1; j < std::min(n, data.B.size()); ++j) {
            if (!cover.overlap(i, j)) continue;
            const DifferentialForm S = data.B[j] - data.B[i];
            for (std::size_t p = 0; p + 1 < dim && eq.ok(); ++p)
                for (std::size_t q = p + 1; q < dim; ++q) {
                    const RationalFunction xp(Polynomial::variable(chart->coords, p));
                    const RationalFunction xq(Polynomial::variable(chart->coords, q));
                    const GeneralizedSection e1(
                        VectorField::basis(chart, p),
                        DifferentialForm::term(chart, {static_cast<int>((p + 1) % dim)}, xp));
                    const GeneralizedSection e2(
                        VectorField::basis(chart, q),
                        DifferentialForm::term(chart, {static_cast<int>((q + 1) % dim)}, xq));
                    const DifferentialForm r = courant_shear_residual(M0, S, e1, e2);
                    if (!r.is_zero())
                        eq.fail("overlap " + idx2(i, j) + ": residual " + r.str());
                }
        }
    eq.emit(rep, "cocycle3.equivariance", "transition shears preserve the split bracket", sw_eq);

    return rep;
}

}  // namespace plectic
