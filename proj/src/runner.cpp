#include "plectic/runner.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>
#include <thread>

#include "plectic/atiyah.hpp"
#include "plectic/cocycle.hpp"
#include "plectic/courant.hpp"
#include "plectic/errors.hpp"
#include "plectic/extension.hpp"
#include "plectic/exterior.hpp"
#include "plectic/lie2.hpp"
#include "plectic/nplectic.hpp"

namespace plectic {

namespace {

int rf_degree(const RationalFunction& f) {
    return std::max(f.num().degree(), f.den().degree());
}

int form_degree_bound(const DifferentialForm& a) {
    int d = -1;
    for (const auto& [idx, c] : a.terms()) d = std::max(d, rf_degree(c));
    return d;
}

int field_degree_bound(const VectorField& v) {
    int d = -1;
    for (const auto& c : v.components()) d = std::max(d, rf_degree(c));
    return d;
}

int document_degree(const Document& doc) {
    int d = -1;
    for (const auto& [n, a] : doc.forms) d = std::max(d, form_degree_bound(a));
    for (const auto& [n, v] : doc.fields) d = std::max(d, field_degree_bound(v));
    for (const auto& [n, e] : doc.sections) {
        d = std::max(d, field_degree_bound(e.v));
        d = std::max(d, form_degree_bound(e.alpha));
    }
    for (const auto& [n, c] : doc.covers) {
        for (const auto& a : c.theta) d = std::max(d, form_degree_bound(a));
        for (const auto& a : c.B) d = std::max(d, form_degree_bound(a));
        for (const auto& [k, a] : c.A) d = std::max(d, form_degree_bound(a));
        for (const auto& [k, f] : c.h1) d = std::max(d, rf_degree(f));
        for (const auto& [k, f] : c.h2) d = std::max(d, rf_degree(f));
    }
    return d;
}

std::string join_args(const std::vector<std::string>& words, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < words.size(); ++i) {
        if (!out.empty()) out += " ";
        out += words[i];
    }
    return out;
}

// One command -> one report. All module errors become FAIL rows.
Report run_command(const Document& doc, const Document::Command& cmd, std::uint64_t seed) {
    Report rep;
    const std::vector<std::string>& w = cmd.words;
    const std::string& head = w[0];
    const bool is_verify = head == "verify";
    const std::string fail_id = is_verify ? "verify-" + w[1] : head;
    const std::string fail_anchor = join_args(w, is_verify ? 2 : 1);

    const auto form = [&](const std::string& n) -> const DifferentialForm& {
        return doc.forms.at(n);
    };
    const auto scalar = [&](const std::string& n) { return doc.forms.at(n).coefficient({}); };
    const auto omega = [&]() -> const DifferentialForm& { return doc.forms.at("omega"); };

    Stopwatch sw;
    try {
        if (head == "check-nplectic") {
            const PlecticStructure P(form(w[1]), seed);
            const auto& v = P.verdict();
            rep.add("check-nplectic", w[1],
                    v.kind == NondegeneracyVerdict::Kind::CertifiedEverywhere, v.describe(),
                    sw.ms());
        } else if (head == "hamiltonian") {
            const PlecticStructure P(omega(), seed);
            try {
                const VectorField v = hamiltonian_vf(P, form(w[1]));
                rep.add("hamiltonian", w[1], true, v.str(), sw.ms());
            } catch (const NotHamiltonianError& e) {
                rep.add("hamiltonian", w[1], false, e.residual.str(), sw.ms());
            }
        } else if (head == "bracket") {
            const PlecticStructure P(omega(), seed);
            const DifferentialForm b = semi_bracket(P, form(w[1]), form(w[2]));
            rep.add("bracket", "{" + w[1] + "," + w[2] + "}", true, b.str(), sw.ms());
        } else if (head == "jacobiator") {
            const PlecticStructure P(omega(), seed);
            const DifferentialForm j = jacobiator_J(P, form(w[1]), form(w[2]), form(w[3]));
            rep.add("jacobiator", "J(" + w[1] + "," + w[2] + "," + w[3] + ")", true, j.str(),
                    sw.ms());
        } else if (head == "curvature") {
            const SplitCourantModel M(doc.chart, omega());
            const RationalFunction c =
                curvature(M, doc.fields.at(w[1]), doc.fields.at(w[2]), doc.fields.at(w[3]));
            rep.add("curvature", "<[s(" + w[1] + "),s(" + w[2] + ")],s(" + w[3] + ")>", true,
                    c.str(), sw.ms());
        } else if (head == "preserves") {
            const SplitCourantModel M(doc.chart, omega());
            const GeneralizedSection& e = doc.sections.at(w[1]);
            const bool ok = preserves_splitting(M, e);
            rep.add("preserves", w[1], ok, ok ? "" : splitting_residual(M, e).str(), sw.ms());
        } else if (w[1] == "prop35") {
            const PlecticStructure P(omega(), seed);
            rep.merge(verify_prop35(P, form(w[2]), form(w[3]), form(w[4])));
        } else if (w[1] == "lemmas") {
            const PlecticStructure P(omega(), seed);
            rep.merge(verify_lemmas(P, form(w[2]), form(w[3]), form(w[4])));
        } else if (w[1] == "courant-axioms") {
            const SplitCourantModel M(doc.chart, omega());
            rep.merge(verify_courant_axioms(M, doc.sections.at(w[2]), doc.sections.at(w[3]),
                                            doc.sections.at(w[4]), scalar(w[5]), scalar(w[6])));
        } else if (w[1] == "morphism") {
            const PlecticStructure P(omega(), seed);
            const SplitCourantModel M(doc.chart, omega());
            const Lie2Morphism m = main_morphism(P, M);
            const Lie2Element x{0, form(w[3])}, y{0, form(w[4])}, z{0, form(w[5])};
            const Lie2Element f{
                1, DifferentialForm::function(
                       doc.chart, RationalFunction(Polynomial::variable(doc.chart->coords, 0)))};
            rep.merge(check_morphism(m, lie2_of_plectic(P), lie2_of_courant(M), x, y, z, f));
        } else if (w[1] == "extension") {
            const PlecticStructure P(omega(), seed);
            rep.merge(verify_extension(P, doc.points.at(w[2]), doc.points.at(w[3]),
                                       doc.fields.at(w[4]), doc.fields.at(w[5]),
                                       doc.fields.at(w[6])));
        } else if (w[1] == "cocycle2") {
            const auto& c = doc.covers.at(w[2]);
            const BoxCover cover(doc.chart, c.boxes);
            rep.merge(verify_triv_2form(omega(), cover, LocalData1{c.theta, c.h1}, c.mode));
        } else if (w[1] == "cocycle3") {
            const auto& c = doc.covers.at(w[2]);
            const BoxCover cover(doc.chart, c.boxes);
            rep.merge(verify_triv_3form(omega(), cover, LocalData2{c.B, c.A, c.h2}, c.mode));
        } else if (w[1] == "atiyah") {
            const PlecticStructure P(omega(), seed);
            const RationalFunction f = scalar(w[2]), g = scalar(w[3]);
            const RationalFunction h = f * g;
            const AtiyahSection a = atiyah_lift(P, f);
            const AtiyahSection b(sympl_hamiltonian_vf(P, g), f);
            const AtiyahSection c(sympl_hamiltonian_vf(P, h), g);
            rep.merge(verify_atiyah(P, f, g, h, a, b, c));
        }
    } catch (const Error& e) {
        rep.add(fail_id, fail_anchor, false, std::string("not computable: ") + e.what(), sw.ms());
    }
    return rep;
}

}  // namespace

Report run_document(const Document& doc, const RunOptions& opt) {
    if (opt.max_degree > 0) {
        const int d = document_degree(doc);
        if (d > opt.max_degree) {
            std::ostringstream os;
            os << "document polynomial degree " << d << " exceeds the bound " << opt.max_degree;
            throw Error(os.str());
        }
    }

    const std::size_t n = doc.commands.size();
    std::vector<Report> parts(n);
    const std::size_t workers =
        std::min<std::size_t>(n, opt.jobs > 1 ? static_cast<std::size_t>(opt.jobs) : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) parts[i] = run_command(doc, doc.commands[i], opt.seed);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> tasks;
        tasks.reserve(workers);
        for (std::size_t k = 0; k < workers; ++k)
            tasks.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                    parts[i] = run_command(doc, doc.commands[i], opt.seed);
            }));
        for (auto& t : tasks) t.get();
    }

    Report rep;
    for (const auto& part : parts) rep.merge(part);
    return rep;
}

}  // namespace plectic
