#include "ferrers/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

using json = nlohmann::ordered_json;

json parseJson(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<int> intArray(const json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const json& v : j) {
        if (!v.is_number_integer()) throw ValidationError(std::string(what) + " must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

LabelSet labelArray(const json& j, const char* what) {
    LabelSet out;
    for (int v : intArray(j, what)) {
        if (v < 1 || v > LabelSet::kMaxLabel) {
            throw ValidationError(std::string(what) + " label " + std::to_string(v) + " out of range");
        }
        if (out.contains(v)) throw ValidationError(std::string(what) + " repeats label " + std::to_string(v));
        out.insert(v);
    }
    return out;
}

std::vector<std::string> splitLines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
        if (!line.empty()) lines.emplace_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<int> integers(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + i) {
            throw ValidationError("expected an integer near '" + std::string(text.substr(i, 8)) + "'");
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

// Row text for row r: the row's cells from the leftmost column rightwards.
std::string rowText(const Filling& f, int r) {
    std::string line;
    const std::uint64_t mask = f.geometry().rowMask(r);
    for (int col = f.cols(); col >= 1; --col) {
        if ((mask >> (col - 1)) & 1u) line += f.at(r, col) ? '1' : '0';
    }
    return line;
}

std::vector<std::string> rowTexts(const Filling& f) {
    std::vector<std::string> out;
    for (int r = f.rows(); r >= 1; --r) out.push_back(rowText(f, r));
    return out;
}

Filling fillingFromRows(const FerrersShape& shape, const std::vector<std::string>& lines) {
    if (static_cast<int>(lines.size()) != shape.rows()) {
        throw ValidationError("filling has " + std::to_string(lines.size()) + " rows; shape " +
                              shape.partition().toString() + " has " + std::to_string(shape.rows()));
    }
    Filling f(shape);
    const int k = shape.cols();
    for (int r = shape.rows(); r >= 1; --r) {
        const std::string& line = lines[static_cast<std::size_t>(shape.rows() - r)];
        const int len = shape.rowLength(r);
        if (static_cast<int>(line.size()) != len) {
            throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                                  " entries; expected " + std::to_string(len));
        }
        for (int p = 0; p < len; ++p) {
            const char c = line[static_cast<std::size_t>(p)];
            if (c != '0' && c != '1') throw ValidationError(std::string("filling entry '") + c + "' is not 0 or 1");
            f.set(r, k - p, c == '1');
        }
    }
    return f;
}

std::string millisText(double millis) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", millis);
    return buf;
}

}  // namespace

std::string shapeToJson(const FerrersShape& shape) {
    json j;
    j["partition"] = shape.partition().parts();
    j["semiperimeter"] = shape.semiperimeter();
    j["rowLabels"] = shape.rowLabelVector();
    j["colLabels"] = shape.colLabelsLeftToRight();
    return j.dump();
}

std::string fillingToText(const Filling& f) {
    std::string out;
    for (const std::string& line : rowTexts(f)) {
        if (!out.empty()) out += '\n';
        out += line;
    }
    return out;
}

Filling fillingFromText(const FerrersShape& shape, std::string_view text) {
    return fillingFromRows(shape, splitLines(text));
}

std::string fillingToJson(const Filling& f) {
    const FerrersShape* shape = f.ferrers();
    if (shape == nullptr) throw ValidationError("filling JSON needs a Ferrers shape");
    json j;
    j["shape"] = shape->partition().toString();
    j["rows"] = rowTexts(f);
    return j.dump();
}

Filling fillingFromJson(std::string_view text) {
    const json j = parseJson(text);
    if (!j.is_object() || !j.contains("shape") || !j["shape"].is_string() || !j.contains("rows") ||
        !j["rows"].is_array()) {
        throw ValidationError("filling JSON needs a string \"shape\" and an array \"rows\"");
    }
    std::vector<std::string> rows;
    for (const json& r : j["rows"]) {
        if (!r.is_string()) throw ValidationError("filling rows must be strings");
        rows.push_back(r.get<std::string>());
    }
    return fillingFromRows(FerrersShape(Partition::parse(j["shape"].get<std::string>())), rows);
}

std::string permutationToText(std::span<const int> perm) {
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(perm[i]);
    }
    return out;
}

std::vector<int> permutationFromText(std::string_view text) {
    std::vector<int> out = integers(text);
    if (!isPermutation(out)) throw ValidationError("'" + std::string(text) + "' is not a permutation of 1..n");
    return out;
}

std::string callanToJson(const CallanSequence& seq) {
    json pairs = json::array();
    for (const CallanPair& p : seq.pairs) {
        json item;
        item["R"] = p.rows.toVector();
        item["C"] = p.cols.toVector();
        pairs.push_back(std::move(item));
    }
    json j;
    j["pairs"] = std::move(pairs);
    return j.dump();
}

CallanSequence callanFromJson(std::string_view text) {
    const json j = parseJson(text);
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) {
        throw ValidationError("Callan JSON needs an array \"pairs\"");
    }
    CallanSequence seq;
    for (const json& p : j["pairs"]) {
        if (!p.is_object() || !p.contains("R") || !p.contains("C")) {
            throw ValidationError("each Callan pair needs \"R\" and \"C\"");
        }
        seq.pairs.push_back({labelArray(p["R"], "R"), labelArray(p["C"], "C")});
    }
    return seq;
}

std::string tournamentToText(const Tournament& t) {
    std::ostringstream out;
    out << t.size() << '\n';
    for (auto [tail, head] : t.edges()) out << tail << ' ' << head << '\n';
    return out.str();
}

Tournament tournamentFromText(std::string_view text) {
    const std::vector<std::string> lines = splitLines(text);
    if (lines.empty()) throw ValidationError("tournament text is empty");
    const std::vector<int> header = integers(lines.front());
    if (header.size() != 1) throw ValidationError("first line must hold the vertex count");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<int> e = integers(lines[i]);
        if (e.size() != 2) throw ValidationError("edge line '" + lines[i] + "' must be \"i j\"");
        edges.emplace_back(e[0], e[1]);
    }
    return Tournament::fromEdges(header.front(), edges);
}

std::string countReportToJson(const CountReport& report, bool withMillis) {
    json j;
    j["shape"] = report.shape;
    j["predicate"] = report.predicate.kindName();
    j["filters"] = report.predicate.filterNames();
    // Counts may exceed 64 bits; a JSON number is only used when exact.
    if (report.count <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        j["count"] = report.count.convert_to<std::int64_t>();
    } else {
        j["count"] = report.count.str();
    }
    j["nodes"] = report.nodes;
    if (withMillis) j["millis"] = std::stod(millisText(report.millis));
    return j.dump();
}

std::string countReportCsvHeader() { return "shape,predicate,filters,count,nodes,millis"; }

std::string countReportToCsv(const CountReport& report, bool withMillis) {
    return "\"" + report.shape + "\"," + report.predicate.kindName() + "," + report.predicate.filterNames() + "," +
           report.count.str() + "," + std::to_string(report.nodes) + "," +
           (withMillis ? millisText(report.millis) : "");
}

}  // namespace ferrers
