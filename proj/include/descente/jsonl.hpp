#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "descente/descent.hpp"
#include "descente/diophantine.hpp"
#include "descente/fermat.hpp"

// JSON-lines records. Every object starts with "type"; the remaining keys come
// in the fixed order listed next to each render function. Naturals are JSON
// numbers when they fit in 64 bits and decimal strings otherwise; parsing
// accepts either.

namespace descente::jsonl {

using Json = nlohmann::ordered_json;

Json natural(const Natural& n);
Natural to_natural(const Json& j);

/// triple: x0 x1 x2 primitive factor even_leg p q
Json render(const TripleRow& row);
TripleRow parse_triple(const Json& j);

/// solution: x0 x1 x2 x3
Json render(const CandidateSolution& c);
CandidateSolution parse_solution(const Json& j);

struct Footer {
    Natural bound;
    std::uint64_t count = 0;
    double elapsed = 0;

    friend bool operator==(const Footer&, const Footer&) = default;
};

/// footer: bound count elapsed
Json render(const Footer& f);
Footer parse_footer(const Json& j);

/// certificate: what bound checked found
Json render(const VacuityCertificate& c);
VacuityCertificate parse_certificate(const Json& j);

/// One "trace" line per entry (instance step value weight label), then
/// "trace-end" (instance outcome length).
std::vector<Json> render(const DescentTrace& t);
DescentTrace parse_trace(const std::vector<Json>& lines);

/// "report" (schema instance bound checked counterexamples failures), then one
/// "failure" line per failure (value index kind detail).
std::vector<Json> render(const Report& r);
Report parse_report(const std::vector<Json>& lines);

/// A start value refused by the guard of an operation whose guard is never met.
struct GuardRejection {
    std::string instance;
    std::vector<Natural> start;
    std::string reason;

    friend bool operator==(const GuardRejection&, const GuardRejection&) = default;
};

/// guard: instance start reason
Json render(const GuardRejection& g);
GuardRejection parse_guard(const Json& j);

struct Decomposition {
    std::string kind;
    std::vector<Natural> input;
    bool primitive = false;
    std::vector<std::pair<std::string, Natural>> fields;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// decomposition: kind input primitive, then the output fields in order
Json render(const Decomposition& d);
Decomposition parse_decomposition(const Json& j);

std::string dump(const Json& j);
/// Parses one object per non-empty line.
std::vector<Json> parse_lines(std::string_view text);

}  // namespace descente::jsonl
