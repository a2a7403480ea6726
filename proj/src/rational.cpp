#include "plectic/rational.hpp"

#include <cctype>

namespace plectic {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text)));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw DivisionByZero("rational literal with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + text);
    }
}

Rational Rational::pow(unsigned e) const {
    Rational out(1);
    Rational base = *this;
    while (e != 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, gl;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    mpq_class g(gn, gl);
    g.canonicalize();
    return Rational(g);
}

}  // namespace plectic
