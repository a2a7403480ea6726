#include "plectic/parser.hpp"

#include <cctype>
#include <cstring>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"

namespace plectic {

namespace {

struct Tok {
    enum Kind { Ident, Number, Sym, End };
    Kind kind = End;
    std::string text;
    int line = 0, col = 0;
};

[[noreturn]] void fail(const Tok& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.col);
}

std::vector<Tok> lex_line(const std::string& s, int line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), line, col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), line, col});
            i = j;
        } else if (std::strchr("()=,^*/+-@{}", c) != nullptr) {
            out.push_back({Tok::Sym, std::string(1, c), line, col});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }
    out.push_back({Tok::End, "", line, static_cast<int>(s.size()) + 1});
    return out;
}

using Value = std::variant<RationalFunction, DifferentialForm, VectorField>;

const char* kind_name(const Value& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "form";
        default: return "field";
    }
}

// Recursive-descent evaluator over one token line. Precedence, loosest to
// tightest: + -, * /, unary -, ^ (scalar power / wedge).
class ExprParser {
public:
    ExprParser(const std::vector<Tok>& toks, std::size_t pos, const Document& doc)
        : toks_(toks), pos_(pos), doc_(doc) {}

    Value parse_expr() {
        Value v = parse_term();
        while (is_sym("+") || is_sym("-")) {
            const Tok at = next();
            Value w = parse_term();
            v = combine(std::move(v), std::move(w), at, at.text == "+");
        }
        return v;
    }

    std::size_t pos() const { return pos_; }

    const Tok& peek() const { return toks_[pos_]; }

private:
    bool is_sym(const char* s) const {
        return peek().kind == Tok::Sym && peek().text == s;
    }

    const Tok& next() { return toks_[pos_++]; }

    Value parse_term() {
        Value v = parse_unary();
        while (is_sym("*") || is_sym("/")) {
            const Tok at = next();
            Value w = parse_unary();
            v = at.text == "*" ? multiply(std::move(v), std::move(w), at)
                               : divide(std::move(v), std::move(w), at);
        }
        return v;
    }

    Value parse_unary() {
        if (is_sym("-")) {
            const Tok at = next();
            Value v = parse_unary();
            return std::visit([](auto x) -> Value { return -x; }, std::move(v));
        }
        return parse_power();
    }

    Value parse_power() {
        Value v = parse_atom();
        while (is_sym("^")) {
            const Tok at = next();
            Value w = parse_atom();
            v = power_or_wedge(std::move(v), std::move(w), at);
        }
        return v;
    }

    Value parse_atom() {
        const Tok at = next();
        if (at.kind == Tok::Number)
            return RationalFunction::constant(doc_.chart->coords, Rational::parse(at.text));
        if (at.kind == Tok::Sym && at.text == "(") {
            Value v = parse_expr();
            if (!is_sym(")")) fail(peek(), "expected ')'");
            next();
            return v;
        }
        if (at.kind == Tok::Sym && at.text == "@") {
            const Tok name = next();
            const auto idx = coord_index(name.kind == Tok::Ident ? name.text : "");
            if (!idx) fail(name, "'@' must be followed by a coordinate name");
            return VectorField::basis(doc_.chart, *idx);
        }
        if (at.kind == Tok::Ident) return resolve(at);
        fail(at, "expected a value");
    }

    std::optional<std::size_t> coord_index(const std::string& name) const {
        for (std::size_t i = 0; i < doc_.chart->coords.size(); ++i)
            if (doc_.chart->coords[i] == name) return i;
        return std::nullopt;
    }

    Value resolve(const Tok& at) {
        if (const auto i = coord_index(at.text))
            return RationalFunction(Polynomial::variable(doc_.chart->coords, *i));
        if (at.text.size() > 1 && at.text[0] == 'd') {
            if (const auto i = coord_index(at.text.substr(1)))
                return DifferentialForm::term(
                    doc_.chart, {static_cast<int>(*i)},
                    RationalFunction::constant(doc_.chart->coords, Rational(1)));
        }
        if (const auto it = doc_.forms.find(at.text); it != doc_.forms.end()) return it->second;
        if (const auto it = doc_.fields.find(at.text); it != doc_.fields.end()) return it->second;
        if (doc_.sections.count(at.text) || doc_.points.count(at.text) ||
            doc_.covers.count(at.text))
            fail(at, "'" + at.text + "' cannot appear inside an expression");
        fail(at, "unknown identifier '" + at.text + "'");
    }

    Value combine(Value a, Value b, const Tok& at, bool plus) {
        if (a.index() != b.index())
            fail(at, std::string("cannot ") + (plus ? "add" : "subtract") + " a " +
                         kind_name(b) + " to a " + kind_name(a));
        try {
            return std::visit(
                [&](auto x) -> Value {
                    using T = std::decay_t<decltype(x)>;
                    const T& y = std::get<T>(b);
                    return plus ? T(x + y) : T(x - y);
                },
                std::move(a));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(at, e.what());
        }
    }

    Value multiply(Value a, Value b, const Tok& at) {
        // Scalars act on everything; all other products need '^'.
        if (b.index() == 0 && a.index() != 0) std::swap(a, b);
        if (a.index() != 0) {
            if (a.index() == 1 && b.index() == 1)
                fail(at, "use '^' for the product of forms");
            fail(at, std::string("cannot multiply a ") + kind_name(a) + " by a " + kind_name(b));
        }
        const RationalFunction s = std::get<RationalFunction>(a);
        try {
            if (b.index() == 0) return RationalFunction(s * std::get<RationalFunction>(b));
            if (b.index() == 1) return std::get<DifferentialForm>(b) * s;
            return std::get<VectorField>(b) * s;
        } catch (const Error& e) {
            fail(at, e.what());
        }
    }

    Value divide(Value a, Value b, const Tok& at) {
        if (a.index() != 0 || b.index() != 0)
            fail(at, "'/' divides scalars only");
        try {
            return RationalFunction(std::get<RationalFunction>(a) /
                                    std::get<RationalFunction>(b));
        } catch (const Error& e) {
            fail(at, e.what());
        }
    }

    Value power_or_wedge(Value a, Value b, const Tok& at) {
        if (a.index() == 1 && b.index() == 1) {
            try {
                return wedge(std::get<DifferentialForm>(a), std::get<DifferentialForm>(b));
            } catch (const Error& e) {
                fail(at, e.what());
            }
        }
        if (a.index() == 0 && b.index() == 0) {
            const RationalFunction& e = std::get<RationalFunction>(b);
            if (!e.is_constant() || !e.constant_value().is_integer() ||
                e.constant_value().sign() < 0)
                fail(at, "exponent must be a non-negative integer");
            const mpz_class n = e.constant_value().num();
            if (!n.fits_ulong_p() || n.get_ui() > 64) fail(at, "exponent too large");
            RationalFunction out = RationalFunction::constant(doc_.chart->coords, Rational(1));
            const RationalFunction& base = std::get<RationalFunction>(a);
            for (unsigned long k = 0; k < n.get_ui(); ++k) out = out * base;
            return out;
        }
        fail(at, std::string("cannot raise a ") + kind_name(a) + " to a " + kind_name(b));
    }

    const std::vector<Tok>& toks_;
    std::size_t pos_;
    const Document& doc_;
};

const std::set<std::string> kCommandHeads = {
    "check-nplectic", "hamiltonian", "bracket", "jacobiator",
    "curvature",      "preserves",   "verify"};

// Streaming document builder: one statement per line, plus cover blocks.
class DocParser {
public:
    explicit DocParser(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            statement(line, lineno);
        }
        if (in_cover_) throw ParseError("unterminated cover block", cover_line_, 1);
        if (doc_.chart == nullptr && !(doc_.order.empty() && doc_.commands.empty()))
            throw ParseError("document never declared a chart", 1, 1);
    }

    Document take() { return std::move(doc_); }

private:
    static std::string first_word(const std::string& line) {
        std::istringstream ws(line);
        std::string w;
        ws >> w;
        return w;
    }

    void statement(const std::string& line, int lineno) {
        std::string head = first_word(line);
        if (!head.empty() && head[0] == '#') head.clear();
        if (head.empty()) return;
        if (in_cover_) {
            cover_statement(head, line, lineno);
            return;
        }
        if (kCommandHeads.count(head) != 0) {
            command(line, lineno);
            return;
        }
        const std::vector<Tok> toks = lex_line(line, lineno);
        if (head == "chart") {
            chart_decl(toks);
        } else if (head == "form" || head == "field") {
            value_decl(head, toks);
        } else if (head == "section") {
            section_decl(toks);
        } else if (head == "point") {
            point_decl(toks);
        } else if (head == "cover") {
            cover_open(toks);
        } else {
            fail(toks[0], "unknown declaration or command '" + head + "'");
        }
    }

    // --- declaration pieces ---------------------------------------------

    const Tok& expect(const std::vector<Tok>& toks, std::size_t& i, Tok::Kind kind,
                      const char* what) {
        const Tok& t = toks[i];
        if (t.kind != kind) fail(t, std::string("expected ") + what);
        ++i;
        return t;
    }

    void expect_sym(const std::vector<Tok>& toks, std::size_t& i, const char* s) {
        const Tok& t = toks[i];
        if (t.kind != Tok::Sym || t.text != s) fail(t, std::string("expected '") + s + "'");
        ++i;
    }

    void expect_end(const std::vector<Tok>& toks, std::size_t i) {
        if (toks[i].kind != Tok::End) fail(toks[i], "trailing input after statement");
    }

    void require_chart(const Tok& at) {
        if (doc_.chart == nullptr) fail(at, "a chart must be declared first");
    }

    bool reserved(const std::string& name) const {
        if (doc_.chart == nullptr) return false;
        for (const auto& c : doc_.chart->coords)
            if (name == c || name == "d" + c) return true;
        return false;
    }

    bool declared(const std::string& name) const {
        return doc_.forms.count(name) || doc_.fields.count(name) ||
               doc_.sections.count(name) || doc_.points.count(name) ||
               doc_.covers.count(name);
    }

    std::string fresh_name(const std::vector<Tok>& toks, std::size_t& i) {
        const Tok& t = expect(toks, i, Tok::Ident, "a name");
        if (reserved(t.text)) fail(t, "'" + t.text + "' is reserved by the chart");
        if (declared(t.text)) fail(t, "'" + t.text + "' is already declared");
        return t.text;
    }

    void chart_decl(const std::vector<Tok>& toks) {
        std::size_t i = 1;
        if (doc_.chart != nullptr) fail(toks[0], "chart already declared");
        const Tok& name = expect(toks, i, Tok::Ident, "a chart name");
        expect_sym(toks, i, "(");
        std::vector<std::string> coords;
        while (true) {
            const Tok& c = expect(toks, i, Tok::Ident, "a coordinate name");
            for (const auto& prev : coords)
                if (prev == c.text) fail(c, "duplicate coordinate '" + c.text + "'");
            coords.push_back(c.text);
            if (toks[i].kind == Tok::Sym && toks[i].text == ",") {
                ++i;
                continue;
            }
            break;
        }
        expect_sym(toks, i, ")");
        expect_end(toks, i);
        doc_.chart_name = name.text;
        doc_.chart = make_chart(coords);
    }

    Value eval(const std::vector<Tok>& toks, std::size_t& i) {
        ExprParser p(toks, i, doc_);
        Value v = p.parse_expr();
        i = p.pos();
        return v;
    }

    Value eval_to_end(const std::vector<Tok>& toks, std::size_t i) {
        Value v = eval(toks, i);
        expect_end(toks, i);
        return v;
    }

    void value_decl(const std::string& kind, const std::vector<Tok>& toks) {
        require_chart(toks[0]);
        std::size_t i = 1;
        const std::string name = fresh_name(toks, i);
        expect_sym(toks, i, "=");
        const Tok& at = toks[i];
        Value v = eval_to_end(toks, i);
        if (kind == "form") {
            if (v.index() == 2) fail(at, "expected a form, got a field");
            DifferentialForm a = v.index() == 0
                                     ? DifferentialForm::function(
                                           doc_.chart, std::get<RationalFunction>(v))
                                     : std::get<DifferentialForm>(std::move(v));
            if (a.degree() > static_cast<int>(doc_.chart->dim()))
                fail(at, "form degree exceeds the chart dimension");
            doc_.forms.emplace(name, std::move(a));
        } else {
            if (v.index() != 2) fail(at, std::string("expected a field, got a ") + kind_name(v));
            doc_.fields.emplace(name, std::get<VectorField>(std::move(v)));
        }
        doc_.order.push_back({kind, name});
    }

    void section_decl(const std::vector<Tok>& toks) {
        require_chart(toks[0]);
        std::size_t i = 1;
        const std::string name = fresh_name(toks, i);
        expect_sym(toks, i, "=");
        expect_sym(toks, i, "(");
        const Tok& at_v = toks[i];
        Value v = eval(toks, i);
        expect_sym(toks, i, ",");
        const Tok& at_a = toks[i];
        Value a = eval(toks, i);
        expect_sym(toks, i, ")");
        expect_end(toks, i);
        if (v.index() != 2) fail(at_v, "a section's first entry must be a field");
        if (a.index() != 1 || std::get<DifferentialForm>(a).degree() != 1)
            fail(at_a, "a section's second entry must be a one-form");
        try {
            doc_.sections.emplace(name,
                                  GeneralizedSection(std::get<VectorField>(std::move(v)),
                                                     std::get<DifferentialForm>(std::move(a))));
        } catch (const Error& e) {
            fail(at_v, e.what());
        }
        doc_.order.push_back({"section", name});
    }

    Rational constant_entry(const std::vector<Tok>& toks, std::size_t& i) {
        const Tok& at = toks[i];
        Value v = eval(toks, i);
        if (v.index() != 0 || !std::get<RationalFunction>(v).is_constant())
            fail(at, "expected a rational constant");
        return std::get<RationalFunction>(v).constant_value();
    }

    std::vector<Rational> tuple(const std::vector<Tok>& toks, std::size_t& i) {
        expect_sym(toks, i, "(");
        std::vector<Rational> out;
        while (true) {
            out.push_back(constant_entry(toks, i));
            if (toks[i].kind == Tok::Sym && toks[i].text == ",") {
                ++i;
                continue;
            }
            break;
        }
        expect_sym(toks, i, ")");
        return out;
    }

    void point_decl(const std::vector<Tok>& toks) {
        require_chart(toks[0]);
        std::size_t i = 1;
        const std::string name = fresh_name(toks, i);
        expect_sym(toks, i, "=");
        const Tok& at = toks[i];
        std::vector<Rational> coords = tuple(toks, i);
        expect_end(toks, i);
        if (coords.size() != doc_.chart->dim())
            fail(at, "point size does not match the chart");
        doc_.points.emplace(name, std::move(coords));
        doc_.order.push_back({"point", name});
    }

    // --- cover blocks -----------------------------------------------------

    void cover_open(const std::vector<Tok>& toks) {
        require_chart(toks[0]);
        std::size_t i = 1;
        cover_name_ = fresh_name(toks, i);
        expect_sym(toks, i, "{");
        expect_end(toks, i);
        in_cover_ = true;
        cover_line_ = toks[0].line;
        cover_ = Document::CoverData{};
        cover_theta_.clear();
        cover_B_.clear();
    }

    std::size_t index_entry(const std::vector<Tok>& toks, std::size_t& i) {
        const Tok& t = expect(toks, i, Tok::Number, "a box index");
        return static_cast<std::size_t>(std::stoul(t.text));
    }

    void cover_statement(const std::string& head, const std::string& line, int lineno) {
        const std::vector<Tok> toks = lex_line(line, lineno);
        std::size_t i = 0;
        if (head == "}") {
            expect_sym(toks, i, "}");
            expect_end(toks, i);
            cover_close(toks[0]);
            return;
        }
        i = 1;
        if (head == "box") {
            Box b;
            b.lo = tuple(toks, i);
            b.hi = tuple(toks, i);
            expect_end(toks, i);
            cover_.boxes.push_back(std::move(b));
        } else if (head == "mode") {
            const Tok& m = expect(toks, i, Tok::Ident, "'circle' or 'real'");
            if (m.text == "circle")
                cover_.mode = Periodicity::Circle;
            else if (m.text == "real")
                cover_.mode = Periodicity::Real;
            else
                fail(m, "expected 'circle' or 'real'");
            expect_end(toks, i);
        } else if (head == "theta" || head == "B") {
            const Tok& at = toks[0];
            const std::size_t idx = index_entry(toks, i);
            expect_sym(toks, i, "=");
            Value v = eval_to_end(toks, i);
            const int want = head == "theta" ? 1 : 2;
            if (v.index() != 1 || std::get<DifferentialForm>(v).degree() != want)
                fail(at, head == "theta" ? "theta entries must be one-forms"
                                         : "B entries must be two-forms");
            auto& staged = head == "theta" ? cover_theta_ : cover_B_;
            if (!staged.emplace(idx, std::get<DifferentialForm>(std::move(v))).second)
                fail(at, "duplicate index " + std::to_string(idx));
        } else if (head == "A") {
            const Tok& at = toks[0];
            const std::size_t a = index_entry(toks, i);
            const std::size_t b = index_entry(toks, i);
            expect_sym(toks, i, "=");
            Value v = eval_to_end(toks, i);
            if (v.index() != 1 || std::get<DifferentialForm>(v).degree() != 1)
                fail(at, "A entries must be one-forms");
            if (!cover_.A.emplace(std::make_pair(a, b), std::get<DifferentialForm>(std::move(v)))
                     .second)
                fail(at, "duplicate transition");
        } else if (head == "h") {
            const Tok& at = toks[0];
            std::vector<std::size_t> idx;
            while (toks[i].kind == Tok::Number) idx.push_back(index_entry(toks, i));
            expect_sym(toks, i, "=");
            Value v = eval_to_end(toks, i);
            if (v.index() != 0) fail(at, "h entries must be scalar");
            RationalFunction f = std::get<RationalFunction>(std::move(v));
            bool inserted = false;
            if (idx.size() == 2)
                inserted = cover_.h1.emplace(std::make_pair(idx[0], idx[1]), std::move(f)).second;
            else if (idx.size() == 3)
                inserted =
                    cover_.h2.emplace(std::array<std::size_t, 3>{idx[0], idx[1], idx[2]},
                                      std::move(f))
                        .second;
            else
                fail(at, "h takes two or three indices");
            if (!inserted) fail(at, "duplicate h entry");
        } else {
            fail(lex_line(line, lineno)[0], "unknown cover entry '" + head + "'");
        }
    }

    std::vector<DifferentialForm> gapless(const std::map<std::size_t, DifferentialForm>& staged,
                                          const char* what, const Tok& at) {
        std::vector<DifferentialForm> out;
        for (std::size_t k = 0; k < staged.size(); ++k) {
            const auto it = staged.find(k);
            if (it == staged.end())
                fail(at, std::string(what) + " indices must be 0..n-1 without gaps");
            out.push_back(it->second);
        }
        return out;
    }

    void cover_close(const Tok& at) {
        in_cover_ = false;
        cover_.theta = gapless(cover_theta_, "theta", at);
        cover_.B = gapless(cover_B_, "B", at);
        try {
            BoxCover validate(doc_.chart, cover_.boxes);
        } catch (const Error& e) {
            throw ParseError(e.what(), cover_line_, 1);
        }
        doc_.covers.emplace(cover_name_, std::move(cover_));
        doc_.order.push_back({"cover", cover_name_});
    }

    // --- commands --------------------------------------------------------

    void command(const std::string& line, int lineno) {
        require_chart(lex_line(line, lineno)[0]);
        std::string nocomment = line;
        if (const auto hash = nocomment.find('#'); hash != std::string::npos)
            nocomment.resize(hash);
        std::istringstream ws(nocomment);
        std::vector<std::string> words;
        std::string w;
        while (ws >> w) words.push_back(w);

        const auto arg = [&](std::size_t k) -> const std::string& {
            if (k >= words.size())
                throw ParseError("command '" + words[0] + "' is missing arguments", lineno, 1);
            return words[k];
        };
        const auto want = [&](std::size_t n) {
            if (words.size() != n)
                throw ParseError("command '" + words[0] + "' takes " + std::to_string(n - 1) +
                                     " arguments",
                                 lineno, 1);
        };
        const auto form_arg = [&](const std::string& n) {
            if (!doc_.forms.count(n))
                throw ParseError("unknown form '" + n + "'", lineno, 1);
        };
        const auto scalar_arg = [&](const std::string& n) {
            const auto it = doc_.forms.find(n);
            if (it == doc_.forms.end() || it->second.degree() != 0)
                throw ParseError("'" + n + "' must name a degree-zero form", lineno, 1);
        };
        const auto field_arg = [&](const std::string& n) {
            if (!doc_.fields.count(n))
                throw ParseError("unknown field '" + n + "'", lineno, 1);
        };
        const auto section_arg = [&](const std::string& n) {
            if (!doc_.sections.count(n))
                throw ParseError("unknown section '" + n + "'", lineno, 1);
        };
        const auto point_arg = [&](const std::string& n) {
            if (!doc_.points.count(n))
                throw ParseError("unknown point '" + n + "'", lineno, 1);
        };
        const auto cover_arg = [&](const std::string& n) {
            if (!doc_.covers.count(n))
                throw ParseError("unknown cover '" + n + "'", lineno, 1);
        };
        const auto need_omega = [&]() {
            if (!doc_.forms.count("omega"))
                throw ParseError("command '" + words[0] +
                                     "' needs a form named 'omega' in the document",
                                 lineno, 1);
        };

        const std::string& head = words[0];
        if (head == "check-nplectic") {
            want(2);
            form_arg(arg(1));
        } else if (head == "hamiltonian") {
            want(2);
            need_omega();
            form_arg(arg(1));
        } else if (head == "bracket") {
            want(3);
            need_omega();
            form_arg(arg(1));
            form_arg(arg(2));
        } else if (head == "jacobiator") {
            want(4);
            need_omega();
            for (int k = 1; k <= 3; ++k) form_arg(arg(k));
        } else if (head == "curvature") {
            want(4);
            need_omega();
            for (int k = 1; k <= 3; ++k) field_arg(arg(k));
        } else if (head == "preserves") {
            want(2);
            need_omega();
            section_arg(arg(1));
        } else if (head == "verify") {
            const std::string& sub = arg(1);
            need_omega();
            if (sub == "prop35" || sub == "lemmas") {
                want(5);
                for (int k = 2; k <= 4; ++k) form_arg(arg(k));
            } else if (sub == "courant-axioms") {
                want(7);
                for (int k = 2; k <= 4; ++k) section_arg(arg(k));
                scalar_arg(arg(5));
                scalar_arg(arg(6));
            } else if (sub == "morphism") {
                want(6);
                if (arg(2) != "main")
                    throw ParseError("only the 'main' morphism is available", lineno, 1);
                for (int k = 3; k <= 5; ++k) form_arg(arg(k));
            } else if (sub == "extension") {
                want(7);
                point_arg(arg(2));
                point_arg(arg(3));
                for (int k = 4; k <= 6; ++k) field_arg(arg(k));
            } else if (sub == "cocycle2" || sub == "cocycle3") {
                want(3);
                cover_arg(arg(2));
            } else if (sub == "atiyah") {
                want(4);
                scalar_arg(arg(2));
                scalar_arg(arg(3));
            } else {
                throw ParseError("unknown verify target '" + sub + "'", lineno, 1);
            }
        }
        doc_.commands.push_back({std::move(words), lineno});
    }

    Document doc_;
    bool in_cover_ = false;
    int cover_line_ = 0;
    std::string cover_name_;
    Document::CoverData cover_;
    std::map<std::size_t, DifferentialForm> cover_theta_, cover_B_;
};

// --- printing -------------------------------------------------------------

std::string form_expr(const DifferentialForm& a) {
    if (a.is_zero() && a.degree() > 0) {
        // A zero form prints with an explicit basis tuple to keep its degree.
        std::string s = "0*";
        for (int k = 0; k < a.degree(); ++k) {
            if (k > 0) s += "^";
            s += "d" + a.chart()->coords[static_cast<std::size_t>(k)];
        }
        return s;
    }
    return a.str();
}

std::string field_expr(const VectorField& v) {
    if (v.is_zero()) return "0*@" + v.chart()->coords[0];
    return v.str();
}

std::string tuple_expr(const std::vector<Rational>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += ", ";
        s += xs[i].str();
    }
    return s + ")";
}

bool cover_equal(const Document::CoverData& a, const Document::CoverData& b) {
    if (a.boxes.size() != b.boxes.size() || a.mode != b.mode) return false;
    for (std::size_t i = 0; i < a.boxes.size(); ++i)
        if (a.boxes[i].lo != b.boxes[i].lo || a.boxes[i].hi != b.boxes[i].hi) return false;
    return a.theta == b.theta && a.h1 == b.h1 && a.B == b.B && a.A == b.A && a.h2 == b.h2;
}

}  // namespace

Document parse_document(const std::string& text) {
    DocParser p(text);
    return p.take();
}

std::string print_document(const Document& doc) {
    std::ostringstream os;
    if (doc.chart == nullptr) return "";
    os << "chart " << doc.chart_name << " (";
    for (std::size_t i = 0; i < doc.chart->coords.size(); ++i) {
        if (i > 0) os << ", ";
        os << doc.chart->coords[i];
    }
    os << ")\n";
    for (const auto& decl : doc.order) {
        if (decl.kind == "form") {
            os << "form " << decl.name << " = " << form_expr(doc.forms.at(decl.name)) << "\n";
        } else if (decl.kind == "field") {
            os << "field " << decl.name << " = " << field_expr(doc.fields.at(decl.name)) << "\n";
        } else if (decl.kind == "section") {
            const auto& e = doc.sections.at(decl.name);
            os << "section " << decl.name << " = (" << field_expr(e.v) << ", "
               << form_expr(e.alpha) << ")\n";
        } else if (decl.kind == "point") {
            os << "point " << decl.name << " = " << tuple_expr(doc.points.at(decl.name)) << "\n";
        } else if (decl.kind == "cover") {
            const auto& c = doc.covers.at(decl.name);
            os << "cover " << decl.name << " {\n";
            for (const auto& b : c.boxes)
                os << "  box " << tuple_expr(b.lo) << " " << tuple_expr(b.hi) << "\n";
            os << "  mode " << (c.mode == Periodicity::Circle ? "circle" : "real") << "\n";
            for (std::size_t i = 0; i < c.theta.size(); ++i)
                os << "  theta " << i << " = " << form_expr(c.theta[i]) << "\n";
            for (const auto& [key, f] : c.h1)
                os << "  h " << key.first << " " << key.second << " = " << f.str() << "\n";
            for (std::size_t i = 0; i < c.B.size(); ++i)
                os << "  B " << i << " = " << form_expr(c.B[i]) << "\n";
            for (const auto& [key, a] : c.A)
                os << "  A " << key.first << " " << key.second << " = " << form_expr(a) << "\n";
            for (const auto& [key, f] : c.h2)
                os << "  h " << key[0] << " " << key[1] << " " << key[2] << " = " << f.str()
                   << "\n";
            os << "}\n";
        }
    }
    for (const auto& cmd : doc.commands) {
        for (std::size_t i = 0; i < cmd.words.size(); ++i) {
            if (i > 0) os << " ";
            os << cmd.words[i];
        }
        os << "\n";
    }
    return os.str();
}

bool documents_equal(const Document& a, const Document& b) {
    if (a.chart_name != b.chart_name) return false;
    if ((a.chart == nullptr) != (b.chart == nullptr)) return false;
    if (a.chart != nullptr && a.chart->coords != b.chart->coords) return false;
    if (a.forms != b.forms || a.fields != b.fields || a.sections != b.sections ||
        a.points != b.points)
        return false;
    if (a.covers.size() != b.covers.size()) return false;
    for (const auto& [name, c] : a.covers) {
        const auto it = b.covers.find(name);
        if (it == b.covers.end() || !cover_equal(c, it->second)) return false;
    }
    if (a.order.size() != b.order.size()) return false;
    for (std::size_t i = 0; i < a.order.size(); ++i)
        if (a.order[i].kind != b.order[i].kind || a.order[i].name != b.order[i].name)
            return false;
    if (a.commands.size() != b.commands.size()) return false;
    for (std::size_t i = 0; i < a.commands.size(); ++i)
        if (a.commands[i].words != b.commands[i].words) return false;
    return true;
}

}  // namespace plectic
