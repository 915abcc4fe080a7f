#pragma once

#include <string>
#include <utility>
#include <vector>

namespace flowvol {

struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Outcome of one CLI run: echoed request, named exact results (big integers
// and polynomials as decimal strings), optional per-term tables, and the
// cross-method agreement flag (applicable only when several methods ran).
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> request;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<ReportTable> tables;
    bool agreement_applicable = false;
    bool agreement = true;
    std::vector<std::pair<std::string, double>> timings_ms;
    std::vector<std::string> notes;
};

// Plain-text rendering: request echo, aligned result lines, tables, notes.
std::string render_human(const RunReport& report, bool include_timings);

// JSON rendering under schema "flowvol/1"; numbers that may exceed 64 bits
// are decimal strings. Timings are included only on request to keep output
// byte-for-byte deterministic.
std::string render_json(const RunReport& report, bool include_timings);

}  // namespace flowvol
