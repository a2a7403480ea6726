#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

// Exponent multi-index; entry i is the power of variable i.
using Monomial = std::vector<std::uint32_t>;

inline unsigned mono_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Descending graded-lex order: higher total degree first, ties by
// lexicographic comparison of exponent vectors. map::begin() is the
// leading term.
struct MonoGrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = mono_degree(a);
        const unsigned db = mono_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Rational. Carries its ordered variable
// list; binary operations require identical lists. Zero coefficients are
// never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonoGrlexDesc>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    static Polynomial variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value; zero polynomial gives 0. Requires is_constant().
    Rational constant_value() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;

    // Leading coefficient under the fixed monomial order (0 for zero poly).
    Rational leading_coeff() const;
    // Positive gcd of all coefficients; 0 for the zero polynomial.
    Rational content() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational eval(const std::vector<Rational>& point) const;
    Polynomial diff(std::size_t var_index) const;

    // Exact division: returns p such that p * d == *this, if one exists.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;

    // Coefficients (ascending in t) of this polynomial restricted to the
    // line x = start + t * dir. Used for exact path integrals.
    std::vector<Rational> restrict_to_line(const std::vector<Rational>& start,
                                           const std::vector<Rational>& dir) const;

    // Grammar-compatible text: terms in descending order, "+"/"-"/"*"/"^".
    std::string str() const;

private:
    void check_same_vars(const Polynomial& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace plectic
