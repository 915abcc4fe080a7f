#include "flowvol/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace flowvol {

namespace {

void render_table(std::ostringstream& os, const ReportTable& table) {
    std::vector<std::size_t> widths;
    for (const std::string& column : table.columns) widths.push_back(column.size());
    for (const auto& row : table.rows)
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    os << table.name << ":\n";
    os << "  ";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
        os << "  ";
        for (std::size_t c = 0; c < row.size(); ++c)
            os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
        os << "\n";
    }
}

}  // namespace

std::string render_human(const RunReport& report, bool include_timings) {
    std::ostringstream os;
    os << "command: " << report.command << "\n";
    for (const auto& [key, value] : report.request) os << key << ": " << value << "\n";

    std::size_t width = 0;
    for (const auto& [name, value] : report.results) width = std::max(width, name.size());
    for (const auto& [name, value] : report.results)
        os << std::left << std::setw(static_cast<int>(width) + 2) << (name + ":") << value
           << "\n";

    for (const auto& table : report.tables) render_table(os, table);

    if (report.agreement_applicable)
        os << "agreement: " << (report.agreement ? "yes" : "NO") << "\n";
    if (include_timings)
        for (const auto& [name, ms] : report.timings_ms)
            os << "time[" << name << "]: " << std::fixed << std::setprecision(3) << ms << " ms\n";
    for (const std::string& note : report.notes) os << "note: " << note << "\n";
    return os.str();
}

std::string render_json(const RunReport& report, bool include_timings) {
    nlohmann::json doc;
    doc["schema"] = "flowvol/1";
    doc["command"] = report.command;
    nlohmann::json request = nlohmann::json::object();
    for (const auto& [key, value] : report.request) request[key] = value;
    doc["request"] = std::move(request);
    nlohmann::json results = nlohmann::json::object();
    for (const auto& [name, value] : report.results) results[name] = value;
    doc["results"] = std::move(results);

    nlohmann::json tables = nlohmann::json::array();
    for (const auto& table : report.tables) {
        nlohmann::json item;
        item["name"] = table.name;
        item["columns"] = table.columns;
        item["rows"] = table.rows;
        tables.push_back(std::move(item));
    }
    doc["tables"] = std::move(tables);

    if (report.agreement_applicable) doc["agreement"] = report.agreement;
    if (include_timings) {
        nlohmann::json timings = nlohmann::json::object();
        for (const auto& [name, ms] : report.timings_ms) timings[name] = ms;
        doc["timings_ms"] = std::move(timings);
    }
    doc["notes"] = report.notes;
    return doc.dump(2) + "\n";
}

}  // namespace flowvol
