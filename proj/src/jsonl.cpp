#include "descente/jsonl.hpp"

#include <stdexcept>

namespace descente::jsonl {
namespace {

void expect_type(const Json& j, std::string_view type) {
    if (!j.is_object() || !j.contains("type") || j.at("type") != type) {
        throw std::invalid_argument("expected a \"" + std::string(type) + "\" record");
    }
}

Leg leg_from(const std::string& s) {
    if (s == "x0") return Leg::x0;
    if (s == "x1") return Leg::x1;
    throw std::invalid_argument("bad leg: " + s);
}

}  // namespace

Json natural(const Natural& n) {
    if (auto v = n.to_u64()) return Json(*v);
    return Json(n.to_string());
}

Natural to_natural(const Json& j) {
    if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Natural(j.get<std::int64_t>());
    if (j.is_string()) return Natural::parse(j.get<std::string>());
    throw std::invalid_argument("not a natural: " + j.dump());
}

Json render(const TripleRow& row) {
    Json j;
    j["type"] = "triple";
    j["x0"] = natural(row.triple.x0());
    j["x1"] = natural(row.triple.x1());
    j["x2"] = natural(row.triple.x2());
    j["primitive"] = row.primitive();
    j["factor"] = natural(row.factor);
    j["even_leg"] = row.generators.even_leg() == Leg::x0 ? "x0" : "x1";
    j["p"] = natural(row.generators.p());
    j["q"] = natural(row.generators.q());
    return j;
}

TripleRow parse_triple(const Json& j) {
    expect_type(j, "triple");
    TripleRow row{PythTriple(to_natural(j.at("x0")), to_natural(j.at("x1")), to_natural(j.at("x2"))),
                  Generators(leg_from(j.at("even_leg").get<std::string>()), to_natural(j.at("p")),
                             to_natural(j.at("q"))),
                  to_natural(j.at("factor"))};
    if (row.primitive() != j.at("primitive").get<bool>()) {
        throw std::invalid_argument("triple record: primitive flag disagrees with factor");
    }
    return row;
}

Json render(const CandidateSolution& c) {
    Json j;
    j["type"] = "solution";
    j["x0"] = natural(c.x0);
    j["x1"] = natural(c.x1);
    j["x2"] = natural(c.x2);
    j["x3"] = natural(c.x3);
    return j;
}

CandidateSolution parse_solution(const Json& j) {
    expect_type(j, "solution");
    return {to_natural(j.at("x0")), to_natural(j.at("x1")), to_natural(j.at("x2")),
            to_natural(j.at("x3"))};
}

Json render(const Footer& f) {
    Json j;
    j["type"] = "footer";
    j["bound"] = natural(f.bound);
    j["count"] = f.count;
    j["elapsed"] = f.elapsed;
    return j;
}

Footer parse_footer(const Json& j) {
    expect_type(j, "footer");
    return {to_natural(j.at("bound")), j.at("count").get<std::uint64_t>(),
            j.at("elapsed").get<double>()};
}

Json render(const VacuityCertificate& c) {
    Json j;
    j["type"] = "certificate";
    j["what"] = c.what;
    j["bound"] = natural(c.bound);
    j["checked"] = c.checked;
    j["found"] = c.found;
    return j;
}

VacuityCertificate parse_certificate(const Json& j) {
    expect_type(j, "certificate");
    return {j.at("what").get<std::string>(), to_natural(j.at("bound")),
            j.at("checked").get<std::uint64_t>(), j.at("found").get<std::uint64_t>()};
}

std::vector<Json> render(const DescentTrace& t) {
    std::vector<Json> out;
    std::size_t step = 0;
    for (const TraceEntry& e : t.entries()) {
        Json j;
        j["type"] = "trace";
        j["instance"] = t.instance();
        j["step"] = step++;
        j["value"] = natural(e.value);
        j["weight"] = natural(e.weight);
        j["label"] = e.label;
        out.push_back(std::move(j));
    }
    Json end;
    end["type"] = "trace-end";
    end["instance"] = t.instance();
    end["outcome"] = to_string(t.outcome());
    end["length"] = t.entries().size();
    out.push_back(std::move(end));
    return out;
}

DescentTrace parse_trace(const std::vector<Json>& lines) {
    if (lines.empty()) throw std::invalid_argument("empty trace");
    const Json& end = lines.back();
    expect_type(end, "trace-end");
    DescentTrace t(end.at("instance").get<std::string>());
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        expect_type(lines[i], "trace");
        t.push({to_natural(lines[i].at("value")), to_natural(lines[i].at("weight")),
                lines[i].at("label").get<std::string>()});
    }
    if (end.at("length").get<std::size_t>() != t.entries().size()) {
        throw std::invalid_argument("trace length mismatch");
    }
    auto outcome = outcome_from_string(end.at("outcome").get<std::string>());
    if (!outcome) throw std::invalid_argument("bad outcome");
    t.finish(*outcome);
    return t;
}

std::vector<Json> render(const Report& r) {
    std::vector<Json> out;
    Json head;
    head["type"] = "report";
    head["schema"] = to_string(r.schema);
    head["instance"] = r.instance;
    head["bound"] = natural(r.bound);
    head["checked"] = r.checked;
    head["counterexamples"] = r.counterexamples;
    head["failures"] = r.failures.size();
    out.push_back(std::move(head));
    for (const Failure& f : r.failures) {
        Json j;
        j["type"] = "failure";
        j["value"] = natural(f.value);
        j["index"] = f.index;
        j["kind"] = to_string(f.kind);
        j["detail"] = f.detail;
        out.push_back(std::move(j));
    }
    return out;
}

Report parse_report(const std::vector<Json>& lines) {
    if (lines.empty()) throw std::invalid_argument("empty report");
    const Json& head = lines.front();
    expect_type(head, "report");
    auto schema = schema_from_string(head.at("schema").get<std::string>());
    if (!schema) throw std::invalid_argument("bad schema");
    Report r{*schema, head.at("instance").get<std::string>(), to_natural(head.at("bound")),
             head.at("checked").get<std::uint64_t>(), head.at("counterexamples").get<std::uint64_t>(),
             {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Json& j = lines[i];
        expect_type(j, "failure");
        auto kind = failure_kind_from_string(j.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("bad failure kind");
        r.failures.push_back({to_natural(j.at("value")), j.at("index").get<std::size_t>(), *kind,
                              j.at("detail").get<std::string>()});
    }
    if (head.at("failures").get<std::size_t>() != r.failures.size()) {
        throw std::invalid_argument("failure count mismatch");
    }
    return r;
}

namespace {

Json naturals(const std::vector<Natural>& v) {
    Json a = Json::array();
    for (const Natural& n : v) a.push_back(natural(n));
    return a;
}

std::vector<Natural> to_naturals(const Json& a) {
    std::vector<Natural> v;
    for (const Json& j : a) v.push_back(to_natural(j));
    return v;
}

}  // namespace

Json render(const GuardRejection& g) {
    Json j;
    j["type"] = "guard";
    j["instance"] = g.instance;
    j["start"] = naturals(g.start);
    j["reason"] = g.reason;
    return j;
}

GuardRejection parse_guard(const Json& j) {
    expect_type(j, "guard");
    return {j.at("instance").get<std::string>(), to_naturals(j.at("start")),
            j.at("reason").get<std::string>()};
}

Json render(const Decomposition& d) {
    Json j;
    j["type"] = "decomposition";
    j["kind"] = d.kind;
    j["input"] = naturals(d.input);
    j["primitive"] = d.primitive;
    for (const auto& [name, value] : d.fields) j[name] = natural(value);
    return j;
}

Decomposition parse_decomposition(const Json& j) {
    expect_type(j, "decomposition");
    Decomposition d{j.at("kind").get<std::string>(), to_naturals(j.at("input")),
                    j.at("primitive").get<bool>(), {}};
    for (const auto& [key, value] : j.items()) {
        if (key == "type" || key == "kind" || key == "input" || key == "primitive") continue;
        d.fields.emplace_back(key, to_natural(value));
    }
    return d;
}

std::string dump(const Json& j) { return j.dump(); }

std::vector<Json> parse_lines(std::string_view text) {
    std::vector<Json> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            out.push_back(Json::parse(line));
        }
        pos = nl + 1;
    }
    return out;
}

}  // namespace descente::jsonl
