#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace plectic {

// One verification check: a stable machine id, a formula tag naming the
// identity verified, the outcome, and (on failure) a residual certificate.
struct CheckResult {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string residual;  // empty when there is nothing to show
    double ms = 0.0;
};

// Ordered collection of check results produced by a verification driver.
class Report {
public:
    void add(std::string id, std::string anchor, bool pass, std::string residual = "",
             double ms = 0.0);
    void merge(const Report& other);

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_pass() const;
    std::size_t fail_count() const;

    // One line per check: STATUS <tab> id <tab> anchor <tab> residual.
    std::string machine_text() const;
    // Aligned human-readable text with timings.
    std::string human_text() const;

private:
    std::vector<CheckResult> checks_;
};

// Millisecond stopwatch for check timings.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace plectic
