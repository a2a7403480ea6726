#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plectic/cocycle.hpp"
#include "plectic/courant.hpp"
#include "plectic/form.hpp"

namespace plectic {

// Parsed and fully evaluated input document. Declarations bind names to
// exact objects on one shared chart; commands reference them by name.
struct Document {
    struct CoverData {
        std::vector<Box> boxes;
        Periodicity mode = Periodicity::Circle;
        // One-form trivialization data.
        std::vector<DifferentialForm> theta;
        std::map<std::pair<std::size_t, std::size_t>, RationalFunction> h1;
        // Two-form trivialization data.
        std::vector<DifferentialForm> B;
        std::map<std::pair<std::size_t, std::size_t>, DifferentialForm> A;
        std::map<std::array<std::size_t, 3>, RationalFunction> h2;
    };
    struct Decl {
        std::string kind;  // "form" | "field" | "section" | "point" | "cover"
        std::string name;
    };
    struct Command {
        std::vector<std::string> words;
        int line = 0;
    };

    std::string chart_name;
    ChartPtr chart;
    std::map<std::string, DifferentialForm> forms;
    std::map<std::string, VectorField> fields;
    std::map<std::string, GeneralizedSection> sections;
    std::map<std::string, std::vector<Rational>> points;
    std::map<std::string, CoverData> covers;
    std::vector<Decl> order;  // declaration order, for printing
    std::vector<Command> commands;
};

// Parse a document; every expression is evaluated on the spot. Throws
// ParseError with source location on any syntactic or semantic defect.
Document parse_document(const std::string& text);

// Render a document back to input syntax. Re-parsing the result yields a
// structurally equal document.
std::string print_document(const Document& doc);

// Structural equality: same chart, same named objects, same covers, same
// commands.
bool documents_equal(const Document& a, const Document& b);

}  // namespace plectic
