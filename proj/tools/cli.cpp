#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ferrers/bijections.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/error.hpp"
#include "ferrers/io.hpp"
#include "ferrers/tournaments.hpp"
#include "ferrers/verify.hpp"

namespace ferrers::cli {

namespace {

constexpr const char* kShapeHelp =
    "Partition, comma-separated weakly decreasing parts from the bottom row up, e.g. \"8,7,3,3,2\"; "
    "the empty string is the empty shape";

constexpr const char* kFormats = R"(Formats:
  filling text     one line per row, top row first, '0'/'1' left to right,
                   each row as long as the row itself; S_2 example: "1\n01"
  filling JSON     {"shape":"2,1","rows":["1","01"]}
  permutation      space-separated one-line integers, e.g. "2 1 3"
  Callan JSON      {"pairs":[{"R":[3,5,9],"C":[10,12]},...]}, sets ascending
  tournament text  n on the first line, then one line "i j" per edge i->j,
                   all n(n-1)/2 pairs required
  tournament mask  integer; bit t is the t-th pair (i<j) in the order
                   (1,2),(1,3),...,(1,n),(2,3),...; a set bit means i->j
  count JSON       {"shape":..,"predicate":..,"filters":..,"count":..,"nodes":..}
                   plus "millis" with --timing
  count CSV        header shape,predicate,filters,count,nodes,millis;
                   millis is empty without --timing
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 invalid input.
FERRERS_MAX_CELLS lowers (never raises) the 40-cell search cap.)";

std::string readAll(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looksLikeJson(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

FerrersShape parseShape(const std::string& text) { return FerrersShape(Partition::parse(text)); }

Filling readFilling(const FerrersShape& shape, const std::string& text) {
    if (!looksLikeJson(text)) return fillingFromText(shape, text);
    Filling f = fillingFromJson(text);
    if (!(f.geometry() == shape.geometry())) {
        throw ValidationError("filling JSON shape does not match --shape " + shape.partition().toString());
    }
    return f;
}

// A staircase filling given without a shape: S_m has m rows.
Filling readStaircaseFilling(const std::string& text) {
    if (looksLikeJson(text)) return fillingFromJson(text);
    int rows = 0;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) ++rows;
    }
    return fillingFromText(rows == 0 ? FerrersShape{} : staircase(rows), text);
}

void writeFilling(std::ostream& out, const Filling& f, const std::string& format) {
    out << (format == "json" ? fillingToJson(f) : fillingToText(f)) << '\n';
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fillings of Ferrers shapes: counting, codecs, tournaments and identity checks", "ferrers"};
    app.footer(kFormats);
    app.require_subcommand(1);

    // count
    std::string shapeText;
    std::string pred;
    bool complete = false;
    bool rowsNonzero = false;
    std::string format = "plain";
    int jobs = 0;
    bool timing = false;
    auto* count = app.add_subcommand("count", "Count Gamma-free or lonesum fillings of a shape");
    count->add_option("--shape", shapeText, kShapeHelp)->required();
    count->add_option("--pred", pred, "Pattern predicate")->required()->check(CLI::IsMember({"gamma-free", "lonesum"}));
    count->add_flag("--complete", complete, "Only fillings whose every column holds a 1");
    count->add_flag("--rows-nonzero", rowsNonzero, "Only fillings whose every row holds a 1");
    count->add_option("--format", format, "plain (count only), json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    count->add_option("--jobs", jobs, "Worker threads; 0 uses the available parallelism")
        ->check(CLI::NonNegativeNumber);
    count->add_flag("--timing", timing, "Include elapsed milliseconds in json/csv output");

    // encode / decode
    std::string codec;
    std::string outFormat = "text";
    auto* encode = app.add_subcommand(
        "encode", "zeta: filling (text or JSON) on stdin -> Dumont permutation; nu: Dumont permutation -> Callan JSON");
    encode->add_option("codec", codec, "zeta or nu")->required()->check(CLI::IsMember({"zeta", "nu"}));
    encode->add_option("--shape", shapeText, kShapeHelp)->required();
    auto* decode = app.add_subcommand(
        "decode", "zeta: Dumont permutation on stdin -> filling; nu: Callan JSON -> Dumont permutation");
    decode->add_option("codec", codec, "zeta or nu")->required()->check(CLI::IsMember({"zeta", "nu"}));
    decode->add_option("--shape", shapeText, kShapeHelp)->required();
    decode->add_option("--format", outFormat, "Filling output for zeta: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // tournament
    std::string action;
    std::optional<std::uint64_t> mask;
    int vertices = 0;
    bool asMask = false;
    auto* tournament = app.add_subcommand(
        "tournament",
        "encode: tournament -> staircase filling; decode: staircase filling -> tournament; check: cycle report");
    tournament->add_option("action", action, "encode, decode or check")
        ->required()
        ->check(CLI::IsMember({"encode", "decode", "check"}));
    auto* maskOpt = tournament->add_option("--mask", mask, "Tournament as a pair bitmask instead of stdin");
    tournament->add_option("--n", vertices, "Vertex count for --mask")->needs(maskOpt);
    maskOpt->needs("--n");
    tournament->add_flag("--as-mask", asMask, "decode: print the bitmask instead of the edge list");
    tournament->add_option("--format", outFormat, "encode: filling as text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // sequence
    std::string sequence;
    int n = 0;
    int k = 0;
    int index = 0;
    auto* seq = app.add_subcommand("sequence", "genocchi --n N | median-genocchi --index I | poly-bernoulli --n N --k K");
    seq->add_option("name", sequence, "Sequence name")
        ->required()
        ->check(CLI::IsMember({"genocchi", "median-genocchi", "poly-bernoulli"}));
    seq->add_option("--n", n, "genocchi: 1..8 gives |G_{2n+2}|; poly-bernoulli: n in 0..12");
    seq->add_option("--k", k, "poly-bernoulli: k in 0..12");
    seq->add_option("--index", index, "median-genocchi: odd index in 1..9");

    // verify
    std::string suite;
    int maxCells = 12;
    std::vector<std::string> suiteChoices = suiteNames();
    suiteChoices.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run identity-check suites and print a pass/fail table");
    verify->add_option("suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suiteChoices));
    verify->add_option("--max-cells", maxCells, "Cell bound for the shape sweeps")->check(CLI::Range(0, 40));
    verify->add_option("--jobs", jobs, "Worker threads for counting")->check(CLI::NonNegativeNumber);
    verify->add_flag("--timing", timing, "Add a milliseconds column");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count->parsed()) {
            const FillingPredicate predicate{pred == "gamma-free" ? PatternKind::kGammaFree : PatternKind::kLonesum,
                                             complete, rowsNonzero};
            const CountReport report = countFillings(parseShape(shapeText), predicate, {.jobs = jobs});
            if (format == "json") {
                out << countReportToJson(report, timing) << '\n';
            } else if (format == "csv") {
                out << countReportCsvHeader() << '\n' << countReportToCsv(report, timing) << '\n';
            } else {
                out << report.count.str() << '\n';
            }
            return kOk;
        }
        if (encode->parsed()) {
            const FerrersShape shape = parseShape(shapeText);
            const std::string input = readAll(in);
            if (codec == "zeta") {
                out << permutationToText(zetaEncode(readFilling(shape, input)).elements()) << '\n';
            } else {
                const DumontPermutation p(permutationFromText(input), shape);
                out << callanToJson(nuEncode(p)) << '\n';
            }
            return kOk;
        }
        if (decode->parsed()) {
            const FerrersShape shape = parseShape(shapeText);
            const std::string input = readAll(in);
            if (codec == "zeta") {
                const DumontPermutation p(permutationFromText(input), shape);
                writeFilling(out, zetaDecode(p, shape), outFormat);
            } else {
                out << permutationToText(nuDecode(callanFromJson(input), shape).elements()) << '\n';
            }
            return kOk;
        }
        if (tournament->parsed()) {
            auto readTournament = [&] {
                return mask ? Tournament::fromMask(vertices, *mask) : tournamentFromText(readAll(in));
            };
            if (action == "encode") {
                writeFilling(out, staircaseEncode(readTournament()), outFormat);
            } else if (action == "decode") {
                const Tournament t = staircaseDecode(readStaircaseFilling(readAll(in)));
                if (asMask) {
                    out << t.toMask() << '\n';
                } else {
                    out << tournamentToText(t);
                }
            } else {
                const Tournament t = readTournament();
                const auto cycle = findAlternatingCycle(t);
                out << "alternation-acyclic: " << yesNo(isAlternationAcyclic(t)) << '\n';
                out << "alternating-cycle: " << (cycle ? permutationToText(*cycle) : "none") << '\n';
                out << "staircase-lonesum: " << yesNo(isLonesum(staircaseEncode(t))) << '\n';
                out << "ascending: " << yesNo(isAscending(t)) << '\n';
            }
            return kOk;
        }
        if (seq->parsed()) {
            BigInt value;
            if (sequence == "genocchi") {
                value = genocchi(n);
            } else if (sequence == "median-genocchi") {
                value = medianGenocchi(index);
            } else {
                value = polyBernoulliNegK(n, k);
            }
            out << value.str() << '\n';
            return kOk;
        }
        if (verify->parsed()) {
            const std::vector<CheckResult> results = runSuite(suite, {.maxCells = maxCells, .jobs = jobs});
            bool allPassed = true;
            for (const CheckResult& r : results) {
                char line[64];
                std::snprintf(line, sizeof line, "%-4s  %-16s", r.passed ? "PASS" : "FAIL", r.name.c_str());
                out << line;
                if (timing) {
                    std::snprintf(line, sizeof line, "  %10.1f ms", r.millis);
                    out << line;
                }
                out << "  " << r.detail << '\n';
                allPassed = allPassed && r.passed;
            }
            return allPassed ? kOk : kVerificationFailed;
        }
    } catch (const TheoremViolation& e) {
        err << "ferrers: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "ferrers: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kUsage;
}

}  // namespace ferrers::cli
