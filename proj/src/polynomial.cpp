#include "plectic/polynomial.hpp"

#include <sstream>

#include "plectic/errors.hpp"

namespace plectic {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw DimensionMismatch("variable index out of range");
    Polynomial p(std::move(vars));
    Monomial m(p.nvars(), 0);
    m[index] = 1;
    p.add_term(m, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(mono_degree(terms_.begin()->first));
}

Rational Polynomial::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

Rational Polynomial::content() const {
    Rational g(0);
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars()) throw DimensionMismatch("monomial arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (vars_ != o.vars_) throw ChartMismatch("polynomials on different variable lists");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial out(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(vars_, Rational(1));
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1u) out *= base;
        if (e >>= 1u) base *= base;
    }
    return out;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw DimensionMismatch("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) t *= point[i].pow(m[i]);
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::diff(std::size_t var_index) const {
    if (var_index >= nvars()) throw DimensionMismatch("diff variable out of range");
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var_index] == 0) continue;
        Monomial d(m);
        d[var_index] -= 1;
        out.add_term(d, c * Rational(static_cast<long>(m[var_index])));
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    check_same_vars(d);
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial q(vars_);
    Polynomial r = *this;
    const Monomial& lead = d.terms_.begin()->first;
    const Rational lc = d.terms_.begin()->second;
    while (!r.is_zero()) {
        const Monomial& rm = r.terms_.begin()->first;
        Monomial qm(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < lead[i]) return std::nullopt;
            qm[i] = rm[i] - lead[i];
        }
        const Rational qc = r.terms_.begin()->second / lc;
        Polynomial step(vars_);
        step.add_term(qm, qc);
        q += step;
        r -= step * d;
    }
    return q;
}

std::vector<Rational> Polynomial::restrict_to_line(const std::vector<Rational>& start,
                                                   const std::vector<Rational>& dir) const {
    if (start.size() != nvars() || dir.size() != nvars())
        throw DimensionMismatch("line arity mismatch");
    // Univariate polynomials in t as dense coefficient vectors.
    auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    std::vector<Rational> acc{Rational(0)};
    for (const auto& [m, c] : terms_) {
        std::vector<Rational> term{c};
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::vector<Rational> lin{start[i], dir[i]};
            for (std::uint32_t e = 0; e < m[i]; ++e) term = mul(term, lin);
        }
        if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
        for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars_[i];
            if (m[i] > 1) factors += "^" + std::to_string(m[i]);
        }
        if (factors.empty()) {
            os << a.str();
        } else if (a.is_one()) {
            os << factors;
        } else {
            os << a.str() << "*" << factors;
        }
    }
    return os.str();
}

}  // namespace plectic
