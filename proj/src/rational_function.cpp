#include "plectic/rational_function.hpp"

#include <algorithm>

#include "plectic/errors.hpp"

namespace plectic {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars())
        throw ChartMismatch("rational function with mismatched variable lists");
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars(), Rational(1));
        return;
    }
    // Cancel a common monomial factor x^m with m the componentwise minimum
    // exponent over all terms of both numerator and denominator.
    Monomial common;
    bool start = true;
    auto fold_min = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (start) {
                common = m;
                start = false;
            } else {
                for (std::size_t i = 0; i < common.size(); ++i)
                    common[i] = std::min(common[i], m[i]);
            }
        }
    };
    fold_min(num_);
    fold_min(den_);
    if (!start && mono_degree(common) > 0) {
        Polynomial factor(num_.vars());
        factor.add_term(common, Rational(1));
        num_ = *num_.divide_exact(factor);
        den_ = *den_.divide_exact(factor);
    }
    // Cancel exact polynomial divisibility in either direction.
    if (den_.degree() > 0) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = *q;
            den_ = Polynomial::constant(num_.vars(), Rational(1));
        } else if (auto r = den_.divide_exact(num_)) {
            // num/den == 1/r.
            den_ = *r;
            num_ = Polynomial::constant(num_.vars(), Rational(1));
        }
    }
    // Denominator content 1 with positive leading coefficient.
    Rational scale = den_.content();
    if (den_.leading_coeff().sign() < 0) scale = -scale;
    den_ = den_ * scale.inv();
    num_ = num_ * scale.inv();
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    if (!den_.is_constant()) return std::nullopt;
    return num_ * den_.constant_value().inv();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
    RationalFunction out = *this;
    out.num_ = out.num_ * c;
    if (c.is_zero()) out.normalize();
    return out;
}

std::optional<Rational> RationalFunction::eval(const std::vector<Rational>& point) const {
    const Rational d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) / d;
}

RationalFunction RationalFunction::diff(std::size_t var_index) const {
    return RationalFunction(num_.diff(var_index) * den_ - num_ * den_.diff(var_index),
                            den_ * den_);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return as_polynomial()->str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace plectic
