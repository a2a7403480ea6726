// plecheck: parse a declaration/command document and run every command,
// printing one line per check. Exit 0 when all checks pass, 1 when any
// fails, 2 when the input cannot be parsed or is rejected.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plectic/errors.hpp"
#include "plectic/parser.hpp"
#include "plectic/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification of graded bracket structures on coordinate charts"};
    std::string path;
    bool machine = false;
    plectic::RunOptions opt;
    app.add_option("file", path, "input document")->required()->check(CLI::ExistingFile);
    app.add_option("--seed", opt.seed, "seed for the degenerate-point search");
    app.add_flag("--machine", machine, "tab-separated output, one line per check");
    app.add_option("--jobs", opt.jobs, "worker threads for independent commands")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-degree", opt.max_degree,
                   "reject documents whose coefficients exceed this total degree")
        ->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad invocation is a rejected input
    }

    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();

    plectic::Document doc;
    try {
        doc = plectic::parse_document(buf.str());
    } catch (const plectic::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }

    plectic::Report rep;
    try {
        rep = plectic::run_document(doc, opt);
    } catch (const plectic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (machine) {
        std::cout << rep.machine_text();
    } else {
        std::cout << "document: " << path << "\n";
        if (doc.chart != nullptr) {
            std::cout << "chart: " << doc.chart_name << " (";
            for (std::size_t i = 0; i < doc.chart->coords.size(); ++i)
                std::cout << (i > 0 ? ", " : "") << doc.chart->coords[i];
            std::cout << ")\n";
        }
        std::cout << "seed: " << opt.seed << "\n\n";
        std::cout << rep.human_text();
        std::cout << "\n"
                  << rep.checks().size() << " checks, " << rep.fail_count() << " failures\n";
    }
    return rep.all_pass() ? 0 : 1;
}
