#pragma once

// Text and JSON forms of shapes, fillings, permutations, Callan sequences,
// tournaments and count reports. Parsers throw ValidationError.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ferrers/bijections.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/fillings.hpp"
#include "ferrers/shapes.hpp"
#include "ferrers/tournaments.hpp"

namespace ferrers {

// {"partition":[8,7,3,3,2],"semiperimeter":13,"rowLabels":[...],"colLabels":[...]}
// with colLabels listed for columns left to right.
std::string shapeToJson(const FerrersShape& shape);

// One line per row, top row first, '0'/'1' from left to right, each row as
// long as the row itself. No trailing newline.
std::string fillingToText(const Filling& f);
// Blank lines and surrounding whitespace are ignored.
Filling fillingFromText(const FerrersShape& shape, std::string_view text);

// {"shape":"2,1","rows":["1","01"]}
std::string fillingToJson(const Filling& f);
Filling fillingFromJson(std::string_view json);

// "5 4 2 1 9"
std::string permutationToText(std::span<const int> perm);
std::vector<int> permutationFromText(std::string_view text);

// {"pairs":[{"R":[3,5,9],"C":[10,12]},...]}
std::string callanToJson(const CallanSequence& seq);
CallanSequence callanFromJson(std::string_view json);

// n on the first line, then one "i j" line per edge i -> j.
std::string tournamentToText(const Tournament& t);
Tournament tournamentFromText(std::string_view text);

// Machine formats leave elapsed time out unless `withMillis` is set, so equal
// inputs give equal bytes.
std::string countReportToJson(const CountReport& report, bool withMillis = false);
std::string countReportCsvHeader();
std::string countReportToCsv(const CountReport& report, bool withMillis = false);

}  // namespace ferrers
