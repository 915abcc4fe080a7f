#include "flowvol/parse.hpp"

#include "flowvol/error.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace flowvol {

namespace {

std::string trim(const std::string& text) {
    std::size_t first = 0, last = text.size();
    while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
    return text.substr(first, last - first);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream stream(text);
    while (std::getline(stream, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

long long parse_int(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) fail(ErrorKind::ParseError, "expected an integer, found nothing");
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(t, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "not an integer: '" + t + "'");
    }
    if (used != t.size()) fail(ErrorKind::ParseError, "trailing characters in integer: '" + t + "'");
    return value;
}

bool all_digits(const std::string& text) {
    if (text.empty()) return false;
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// "(1,2),(2,3)" form: comma-separated pairs in parentheses.
std::vector<std::pair<int, int>> parse_paren_edges(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() &&
               (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
            ++pos;
        if (pos == text.size()) break;
        if (text[pos] != '(') fail(ErrorKind::ParseError, "expected '(' in edge list");
        const std::size_t close = text.find(')', pos);
        if (close == std::string::npos) fail(ErrorKind::ParseError, "unbalanced '(' in edge list");
        const auto coords = split(text.substr(pos + 1, close - pos - 1), ',');
        if (coords.size() != 2) fail(ErrorKind::ParseError, "edges need exactly two endpoints");
        edges.emplace_back(static_cast<int>(parse_int(coords[0])),
                           static_cast<int>(parse_int(coords[1])));
        pos = close + 1;
    }
    return edges;
}

// "1-2,2-3" form.
std::vector<std::pair<int, int>> parse_dash_edges(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    for (const std::string& token : split(text, ',')) {
        const std::string t = trim(token);
        if (t.empty()) continue;
        const std::size_t dash = t.find('-', 1);  // skip a possible leading sign
        if (dash == std::string::npos)
            fail(ErrorKind::ParseError, "expected 'u-v' edge, found '" + t + "'");
        edges.emplace_back(static_cast<int>(parse_int(t.substr(0, dash))),
                           static_cast<int>(parse_int(t.substr(dash + 1))));
    }
    return edges;
}

MultiDigraph parse_inline(const std::string& spec) {
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    bool have_edges = false;
    for (const std::string& field : split(spec, ';')) {
        const std::string f = trim(field);
        if (f.empty()) continue;
        const std::size_t eq = f.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::ParseError, "expected key=value, found '" + f + "'");
        const std::string key = trim(f.substr(0, eq));
        const std::string value = trim(f.substr(eq + 1));
        if (key == "n") {
            n = parse_int(value);
        } else if (key == "edges") {
            edges = value.find('(') != std::string::npos ? parse_paren_edges(value)
                                                         : parse_dash_edges(value);
            have_edges = true;
        } else {
            fail(ErrorKind::ParseError, "unknown field '" + key + "'");
        }
    }
    if (n < 0) fail(ErrorKind::ParseError, "missing 'n=' field");
    if (!have_edges) fail(ErrorKind::ParseError, "missing 'edges=' field");
    return MultiDigraph(static_cast<int>(n), std::move(edges));
}

MultiDigraph parse_json_graph(const std::string& text, const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        fail(ErrorKind::ParseError, path + ": expected an object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer())
        fail(ErrorKind::ParseError, path + ": \"n\" must be an integer");
    std::vector<std::pair<int, int>> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            fail(ErrorKind::ParseError, path + ": edges must be [u, v] integer pairs");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return MultiDigraph(doc["n"].get<int>(), std::move(edges));
}

MultiDigraph parse_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream content;
    content << stream.rdbuf();
    const std::string text = trim(content.str());
    if (text.empty()) fail(ErrorKind::ParseError, "'" + path + "' is empty");
    if (text.front() == '{') return parse_json_graph(text, path);
    return parse_inline(text);
}

}  // namespace

MultiDigraph parse_graph(const std::string& spec) {
    const std::string s = trim(spec);
    if (s.empty()) fail(ErrorKind::ParseError, "empty graph specification");
    if (s.front() == '@') return parse_file(s.substr(1));
    if (s.size() > 1 && s.front() == 'k' && all_digits(s.substr(1)))
        return family_graph("complete", {parse_int(s.substr(1))});
    if (s.size() > 2 && s.rfind("ps", 0) == 0 && all_digits(s.substr(2)))
        return family_graph("pitman_stanley", {parse_int(s.substr(2))});
    if (s.rfind("pic:", 0) == 0) return family_graph("pi_c", parse_integers(s.substr(4)));
    if (s.find('=') != std::string::npos) return parse_inline(s);
    fail(ErrorKind::ParseError, "unrecognized graph specification '" + s + "'");
}

std::vector<long long> parse_integers(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) fail(ErrorKind::ParseError, "expected a comma-separated integer list");
    std::vector<long long> values;
    for (const std::string& token : split(t, ',')) values.push_back(parse_int(token));
    return values;
}

Netflow parse_netflow(const std::string& text, int n) {
    const std::vector<long long> entries = parse_integers(text);
    if (entries.size() != static_cast<std::size_t>(n)) {
        std::ostringstream os;
        os << "netflow has " << entries.size() << " entries but the graph needs " << n;
        fail(ErrorKind::ParseError, os.str());
    }
    return Netflow(entries);
}

}  // namespace flowvol
