#pragma once

#include <optional>
#include <string>

#include "plectic/polynomial.hpp"

namespace plectic {

// Quotient of polynomials. Canonical form: a zero numerator forces
// denominator 1; a common monomial factor is cancelled; exact polynomial
// divisibility of one side by the other is cancelled; the denominator is
// scaled to content 1 with positive leading coefficient. Full gcd reduction
// is deliberately not attempted, so equality is by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num) : num_(std::move(num)) {
        den_ = Polynomial::constant(num_.vars(), Rational(1));
        normalize();
    }
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(std::vector<std::string> vars, const Rational& c) {
        return RationalFunction(Polynomial::constant(std::move(vars), c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    // True when the denominator is a (nonzero) constant.
    bool is_polynomial() const { return den_.is_constant(); }
    // The polynomial this function equals, when the denominator is constant.
    std::optional<Polynomial> as_polynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction operator*(const Rational& c) const;

    // Mathematical equality (cross-multiplied), not representation equality.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // Value at a point; nullopt when the denominator vanishes there.
    std::optional<Rational> eval(const std::vector<Rational>& point) const;
    // Partial derivative by the quotient rule.
    RationalFunction diff(std::size_t var_index) const;

    std::string str() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction operator*(const Rational& c, const RationalFunction& f) { return f * c; }

}  // namespace plectic
