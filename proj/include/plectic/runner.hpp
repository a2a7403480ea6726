#pragma once

#include <cstdint>

#include "plectic/parser.hpp"
#include "plectic/report.hpp"

namespace plectic {

struct RunOptions {
    std::uint64_t seed = 0;  // feeds the degenerate-point search
    int jobs = 1;            // worker threads for independent commands
    int max_degree = 0;      // reject inputs above this total degree; 0 = no bound
};

// Execute every command of the document and merge the per-command reports in
// document order (stable under any jobs count). Commands never throw: a
// failed construction becomes a FAIL row carrying the reason. Throws Error
// only for document-level rejection (the max_degree bound).
Report run_document(const Document& doc, const RunOptions& opt = {});

}  // namespace plectic
