#include "plectic/form.hpp"

#include <algorithm>
#include <sstream>

namespace plectic {

std::optional<std::pair<IndexTuple, int>> normalize_indices(IndexTuple indices) {
    int sign = 1;
    // Insertion sort, counting transpositions; a duplicate kills the term.
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j]) return std::nullopt;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    return std::make_pair(std::move(indices), sign);
}

DifferentialForm::DifferentialForm(ChartPtr chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0) throw DimensionMismatch("negative form degree");
}

DifferentialForm DifferentialForm::function(ChartPtr chart, RationalFunction f) {
    DifferentialForm out(std::move(chart), 0);
    out.add_term({}, f);
    return out;
}

DifferentialForm DifferentialForm::term(ChartPtr chart, const IndexTuple& indices,
                                        const RationalFunction& c) {
    DifferentialForm out(std::move(chart), static_cast<int>(indices.size()));
    out.add_term(indices, c);
    return out;
}

RationalFunction DifferentialForm::coefficient(const IndexTuple& indices) const {
    auto it = terms_.find(indices);
    if (it == terms_.end()) return RationalFunction::constant(chart_->coords, Rational(0));
    return it->second;
}

void DifferentialForm::add_term(const IndexTuple& indices, const RationalFunction& c) {
    if (static_cast<int>(indices.size()) != degree_)
        throw DimensionMismatch("index tuple arity differs from form degree");
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(chart_->dim()))
            throw DimensionMismatch("coordinate index out of range");
    }
    if (c.is_zero()) return;
    auto norm = normalize_indices(indices);
    if (!norm) return;
    const auto& [key, sign] = *norm;
    const RationalFunction v = sign > 0 ? c : -c;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool DifferentialForm::has_polynomial_coeffs() const {
    for (const auto& [k, c] : terms_) {
        (void)k;
        if (!c.is_polynomial()) return false;
    }
    return true;
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm out(chart_, degree_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw DimensionMismatch("adding forms of different degree");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw DimensionMismatch("subtracting forms of different degree");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

DifferentialForm DifferentialForm::operator*(const RationalFunction& f) const {
    DifferentialForm out(chart_, degree_);
    if (f.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * f);
    return out;
}

DifferentialForm DifferentialForm::operator*(const Rational& c) const {
    DifferentialForm out(chart_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return same_chart(a.chart_, b.chart_) && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string DifferentialForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        // Pull the sign out of polynomial coefficients for readable output.
        RationalFunction coeff = c;
        bool neg = false;
        if (coeff.is_polynomial() && coeff.num().leading_coeff().sign() < 0) {
            neg = true;
            coeff = -coeff;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string basis;
        for (int i : k) {
            if (!basis.empty()) basis += "^";
            basis += "d" + chart_->coords[static_cast<std::size_t>(i)];
        }
        const bool unit = coeff.is_constant() && coeff.constant_value().is_one();
        if (basis.empty()) {
            os << coeff.str();
        } else if (unit) {
            os << basis;
        } else {
            const bool simple =
                coeff.is_polynomial() && coeff.as_polynomial()->terms().size() == 1;
            if (simple) {
                os << coeff.str() << "*" << basis;
            } else {
                os << "(" << coeff.str() << ")*" << basis;
            }
        }
    }
    return os.str();
}

VectorField::VectorField(ChartPtr chart)
    : chart_(std::move(chart)),
      comps_(chart_->dim(), RationalFunction::constant(chart_->coords, Rational(0))) {}

VectorField::VectorField(ChartPtr chart, std::vector<RationalFunction> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
    if (comps_.size() != chart_->dim())
        throw DimensionMismatch("vector field component count differs from chart dimension");
}

VectorField VectorField::basis(ChartPtr chart, std::size_t index) {
    VectorField v(std::move(chart));
    if (index >= v.chart_->dim()) throw DimensionMismatch("basis index out of range");
    v.comps_[index] = RationalFunction::constant(v.chart_->coords, Rational(1));
    return v;
}

bool VectorField::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
    RationalFunction acc = RationalFunction::constant(chart_->coords, Rational(0));
    for (std::size_t i = 0; i < comps_.size(); ++i) acc += comps_[i] * f.diff(i);
    return acc;
}

VectorField VectorField::operator-() const {
    VectorField out(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = -comps_[i];
    return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_same_chart(chart_, o.chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_same_chart(chart_, o.chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

VectorField VectorField::operator*(const RationalFunction& f) const {
    VectorField out(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i] * f;
    return out;
}

VectorField VectorField::operator*(const Rational& c) const {
    VectorField out(chart_);
    for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i] * c;
    return out;
}

bool operator==(const VectorField& a, const VectorField& b) {
    if (!same_chart(a.chart_, b.chart_)) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        if (a.comps_[i] != b.comps_[i]) return false;
    return true;
}

std::string VectorField::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        RationalFunction coeff = comps_[i];
        bool neg = false;
        if (coeff.is_polynomial() && coeff.num().leading_coeff().sign() < 0) {
            neg = true;
            coeff = -coeff;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const std::string basis = "@" + chart_->coords[i];
        if (coeff.is_constant() && coeff.constant_value().is_one()) {
            os << basis;
        } else if (coeff.is_polynomial() && coeff.as_polynomial()->terms().size() == 1) {
            os << coeff.str() << "*" << basis;
        } else {
            os << "(" << coeff.str() << ")*" << basis;
        }
    }
    return os.str();
}

}  // namespace plectic
