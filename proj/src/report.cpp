#include "plectic/report.hpp"

#include <iomanip>
#include <sstream>

namespace plectic {

void Report::add(std::string id, std::string anchor, bool pass, std::string residual,
                 double ms) {
    checks_.push_back({std::move(id), std::move(anchor), pass, std::move(residual), ms});
}

void Report::merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::all_pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::size_t Report::fail_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

std::string Report::machine_text() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.pass ? "PASS" : "FAIL") << '\t' << c.id << '\t' << c.anchor << '\t'
           << (c.residual.empty() ? "-" : c.residual) << '\n';
    }
    return os.str();
}

std::string Report::human_text() const {
    std::ostringstream os;
    std::size_t idw = 0;
    for (const auto& c : checks_) idw = std::max(idw, c.id.size());
    for (const auto& c : checks_) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(static_cast<int>(idw + 2))
           << c.id << c.anchor;
        if (!c.residual.empty()) os << (c.pass ? "  " : "  residual: ") << c.residual;
        os << "  (" << std::fixed << std::setprecision(2) << c.ms << " ms)\n";
    }
    return os.str();
}

}  // namespace plectic
