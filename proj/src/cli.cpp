#include "descente/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "descente/jsonl.hpp"
#include "descente/search.hpp"

namespace descente::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Registered {
    std::string name;
    std::size_t arity;
    Natural default_check_bound;
    std::function<DescentInstance(WeightMode)> run;
    std::function<std::optional<DescentInstance>(WeightMode)> id;
    std::function<std::optional<ReductionDescentInstance>(WeightMode)> rd;
    std::function<std::optional<IndexedDescentFamily>(WeightMode)> idprime;
    // Reason a start is refused, for instances whose steps are guarded.
    std::function<std::optional<std::string>(const CandidateSolution&)> guard;
};

std::optional<std::string> counterexample_guard(const CandidateSolution& c) {
    if (c.x0.is_zero() || c.x1.is_zero()) return std::string("a leg is 0");
    if (square(c.x0) + square(c.x1) != square(c.x2)) return std::string("x0^2 + x1^2 != x2^2");
    if (c.x0 * c.x1 != 2 * square(c.x3)) return std::string("x0*x1 != 2*x3^2");
    return std::nullopt;
}

const std::vector<Registered>& registry() {
    static const std::vector<Registered> r = [] {
        std::vector<Registered> v;
        v.push_back({"pentagon", 2, 100, [](WeightMode) { return pentagon_assumption(); },
                     [](WeightMode) { return std::optional(pentagon_instance()); },
                     [](WeightMode) { return std::optional(id_as_rd(pentagon_instance())); },
                     [](WeightMode) { return std::optional(single_family(pentagon_instance())); },
                     nullptr});
        v.push_back({"vii31", 1, 10000, [](WeightMode) { return base_walk(vii31_reduction()); },
                     [](WeightMode) { return std::optional(vii31_instance()); },
                     [](WeightMode) { return std::optional(vii31_reduction()); },
                     [](WeightMode) { return std::optional(single_family(vii31_instance())); },
                     nullptr});
        v.push_back({"gcd", 2, 200, [](WeightMode) { return base_walk(gcd_reduction()); },
                     [](WeightMode) { return std::optional(rd_to_id(gcd_reduction())); },
                     [](WeightMode) { return std::optional(gcd_reduction()); },
                     [](WeightMode) { return std::optional(single_family(rd_to_id(gcd_reduction()))); },
                     nullptr});
        v.push_back({"fermat", 4, 500, [](WeightMode m) { return fermat_instance(m); },
                     [](WeightMode m) { return std::optional(fermat_instance(m)); },
                     [](WeightMode m) { return std::optional(id_as_rd(fermat_instance(m))); },
                     [](WeightMode m) { return std::optional(single_family(fermat_instance(m))); },
                     counterexample_guard});
        v.push_back({"walsh", 4, 500,
                     [](WeightMode) {
                         const DescentInstance f = fermat_instance(WeightMode::walsh);
                         return DescentInstance("walsh", f.predicate_fn(), f.weight_fn(), f.step_fn(),
                                                f.domain(), f.describe_fn());
                     },
                     [](WeightMode) { return std::optional<DescentInstance>(); },
                     [](WeightMode) { return std::optional<ReductionDescentInstance>(); },
                     [](WeightMode) { return std::optional(walsh_family()); },
                     counterexample_guard});
        return v;
    }();
    return r;
}

const Registered& lookup(const std::string& name) {
    for (const auto& r : registry()) {
        if (r.name == name) return r;
    }
    throw UsageError("unknown instance: " + name);
}

Natural parse_natural(const std::string& s, const char* what) {
    try {
        return Natural::parse(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": not a natural number: " + s);
    }
}

std::vector<Natural> parse_naturals(const std::vector<std::string>& v, const char* what) {
    std::vector<Natural> out;
    for (const auto& s : v) out.push_back(parse_natural(s, what));
    return out;
}

void emit(std::ostream& out, const jsonl::Json& j) { out << jsonl::dump(j) << '\n'; }

// Plain-text tables: columns padded to their widest cell.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()));
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        out << line << '\n';
    }
}

std::string fixed3(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

void render_trace(std::ostream& out, const DescentTrace& t, Format f) {
    if (f == Format::jsonl) {
        for (const auto& j : jsonl::render(t)) emit(out, j);
        return;
    }
    std::vector<std::vector<std::string>> rows{{"step", "weight", "value"}};
    std::size_t i = 0;
    for (const auto& e : t.entries()) rows.push_back({std::to_string(i++), e.weight.to_string(), e.label});
    print_table(out, rows);
    out << t.instance() << ": " << to_string(t.outcome()) << " after " << t.entries().size()
        << (t.entries().size() == 1 ? " entry" : " entries") << '\n';
}

void render_report(std::ostream& out, const Report& r, Format f) {
    if (f == Format::jsonl) {
        for (const auto& j : jsonl::render(r)) emit(out, j);
        return;
    }
    out << "check " << to_string(r.schema) << " " << r.instance << " bound=" << r.bound
        << " checked=" << r.checked << " counterexamples=" << r.counterexamples
        << " failures=" << r.failures.size() << '\n';
    if (!r.failures.empty()) {
        std::vector<std::vector<std::string>> rows{{"value", "index", "kind", "detail"}};
        for (const auto& fl : r.failures) {
            rows.push_back({fl.value.to_string(), std::to_string(fl.index), to_string(fl.kind), fl.detail});
        }
        print_table(out, rows);
    }
    out << "(certified only for the values enumerated at this bound)\n";
}

void render_certificate(std::ostream& out, const VacuityCertificate& c, Format f) {
    if (f == Format::jsonl) {
        emit(out, jsonl::render(c));
        return;
    }
    out << "certificate: " << c.what << " bound=" << c.bound << " checked=" << c.checked
        << " found=" << c.found << '\n';
}

int cmd_triples(const Config& cfg, bool primitive_only, std::ostream& out) {
    const auto rows = enumerate_triples(cfg.bound, primitive_only);
    if (cfg.format == Format::jsonl) {
        for (const auto& row : rows) emit(out, jsonl::render(row));
        return exit_code::ok;
    }
    std::vector<std::vector<std::string>> table{{"x0", "x1", "x2", "kind", "p", "q", "even"}};
    for (const auto& row : rows) {
        table.push_back({row.triple.x0().to_string(), row.triple.x1().to_string(),
                         row.triple.x2().to_string(),
                         row.primitive() ? "primitive" : "factor " + row.factor.to_string(),
                         row.generators.p().to_string(), row.generators.q().to_string(),
                         row.generators.even_leg() == Leg::x0 ? "x0" : "x1"});
    }
    if (rows.empty()) {
        out << "no triples with x2 <= " << cfg.bound << '\n';
    } else {
        print_table(out, table);
    }
    return exit_code::ok;
}

int cmd_search(const Config& cfg, bool zeros, std::ostream& out, std::ostream& err) {
    SearchOptions o;
    o.bound = cfg.bound;
    o.zeros = zeros;
    o.workers = cfg.workers;
    if (cfg.cache_path) o.cache = *cfg.cache_path;
    SearchResult r;
    try {
        r = exhaustive_search(o);
    } catch (const CacheError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::io_error;
    }
    const jsonl::Footer footer{r.bound, r.count(), r.elapsed_seconds};
    if (cfg.format == Format::jsonl) {
        for (const auto& c : r.solutions) emit(out, jsonl::render(c));
        emit(out, jsonl::render(footer));
    } else {
        for (const auto& c : r.solutions) out << "solution " << c.to_string() << '\n';
        out << "bound=" << footer.bound << " count=" << footer.count
            << " elapsed=" << fixed3(footer.elapsed) << "s\n";
    }
    if (!zeros && r.count() > 0) {
        err << "counterexample found: the search or the arithmetic is broken\n";
        return exit_code::counterexample;
    }
    return exit_code::ok;
}

int cmd_descent(const Config& cfg, const std::string& name, const std::vector<std::string>& starts,
                bool bound_given, std::ostream& out) {
    const Registered& reg = lookup(name);
    const auto values = parse_naturals(starts, "start");
    if (values.size() != reg.arity) {
        throw UsageError("instance " + name + " takes " + std::to_string(reg.arity) +
                         " start value(s), got " + std::to_string(values.size()));
    }
    const Natural max_steps = bound_given ? cfg.bound : Natural(1000);
    const DescentInstance inst = reg.run(cfg.weight_mode);
    const Natural start = pairing::encode(values);
    render_trace(out, run_descent(inst, start, max_steps), cfg.format);

    if (reg.guard) {
        const CandidateSolution c = CandidateSolution::decode(start);
        if (auto reason = reg.guard(c)) {
            const jsonl::GuardRejection g{name, values, *reason};
            if (cfg.format == Format::jsonl) {
                emit(out, jsonl::render(g));
            } else {
                out << "guard: " << name << " rejects " << c.to_string() << ": " << *reason << '\n';
            }
            render_certificate(out, claim_i_vacuity(1000), cfg.format);
        }
    }
    return exit_code::ok;
}

int cmd_check(const Config& cfg, const std::string& schema_name, const std::string& name,
              const std::optional<std::string>& bound_arg, bool bound_given, std::ostream& out) {
    const auto schema = schema_from_string(schema_name);
    if (!schema) throw UsageError("unknown schema: " + schema_name + " (id, rd, idprime)");
    const Registered& reg = lookup(name);
    Natural bound = reg.default_check_bound;
    if (bound_arg) {
        bound = parse_natural(*bound_arg, "bound");
    } else if (bound_given) {
        bound = cfg.bound;
    }
    if (bound.is_zero()) throw UsageError("bound must be >= 1");

    std::optional<Report> report;
    switch (*schema) {
        case Schema::id:
            if (auto i = reg.id(cfg.weight_mode)) report = check_id(*i, bound);
            break;
        case Schema::rd:
            if (auto i = reg.rd(cfg.weight_mode)) report = check_rd(*i, bound);
            break;
        case Schema::id_prime:
            if (auto i = reg.idprime(cfg.weight_mode)) report = check_id_prime(*i, bound);
            break;
    }
    if (!report) throw UsageError("instance " + name + " has no " + schema_name + " form");
    render_report(out, *report, cfg.format);
    return report->ok() ? exit_code::ok : exit_code::check_failed;
}

jsonl::Decomposition decompose(const std::string& kind, const std::vector<Natural>& v) {
    auto need = [&](std::size_t n) {
        if (v.size() != n) {
            throw UsageError("decompose " + kind + " takes " + std::to_string(n) + " values, got " +
                             std::to_string(v.size()));
        }
    };
    jsonl::Decomposition d{kind, v, false, {}};
    if (kind == "triple") {
        need(3);
        const PythTriple t(v[0], v[1], v[2]);
        const auto s = decompose_sum_of_squares(t);
        d.primitive = t.is_primitive();
        d.fields = {{"even_leg", Natural(static_cast<unsigned>(s.even_leg))}, {"a", s.a}, {"b", s.b}};
        if (d.primitive) {
            const Generators g = decompose_primitive_triple(t);
            d.fields.emplace_back("p", g.p());
            d.fields.emplace_back("q", g.q());
        }
    } else if (kind == "two-square") {
        need(3);
        const auto s = decompose_two_square(v[0], v[1], v[2]);
        d.primitive = coprime({v[0], v[1], v[2]});
        d.fields = {{"a", s.a}, {"b", s.b}};
        if (d.primitive) {
            const auto mk = decompose_primitive_two_square(v[0], v[1], v[2]);
            d.fields.emplace_back("m", mk.m);
            d.fields.emplace_back("k", mk.k);
        }
    } else if (kind == "frenicle") {
        need(4);
        const PythTriple t(v[0], v[1], v[2]);
        d.primitive = t.is_primitive();
        const auto mk = frenicle_xxxviii(t, v[3]);
        d.fields = {{"m", mk.m}, {"k", mk.k}};
    } else {
        throw UsageError("unknown decomposition: " + kind + " (triple, two-square, frenicle)");
    }
    return d;
}

int cmd_decompose(const Config& cfg, const std::string& kind, const std::vector<std::string>& values,
                  std::ostream& out, std::ostream& err) {
    const auto v = parse_naturals(values, "value");
    jsonl::Decomposition d;
    try {
        d = decompose(kind, v);
    } catch (const DomainError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return exit_code::precondition;
    }
    if (cfg.format == Format::jsonl) {
        emit(out, jsonl::render(d));
        return exit_code::ok;
    }
    out << kind;
    for (const auto& n : d.input) out << ' ' << n;
    out << ':';
    for (const auto& [key, value] : d.fields) out << ' ' << key << '=' << value;
    out << (d.primitive ? " (primitive)" : " (non-primitive)") << '\n';
    return exit_code::ok;
}

}  // namespace

const std::vector<std::string>& registered_instances() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& r : registry()) n.push_back(r.name);
        return n;
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounded infinite-descent checks around the right-triangle area theorem", "descente"};
    app.require_subcommand(1);

    Config cfg;
    std::string bound_text;
    std::string format_text = "text";
    std::string cache_text;
    std::string mode_text = "modern";
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    auto* bound_opt = app.add_option("--bound", bound_text, "Bound (x2 for searches, steps for descents)");
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
    auto* cache_opt = app.add_option("--cache", cache_text, "Resume cache file for search");
    app.add_option("--workers", cfg.workers, "Search threads")->check(CLI::PositiveNumber);
    app.add_option("--weight-mode", mode_text, "Weight for the fermat instance")
        ->check(CLI::IsMember({"modern", "walsh"}));

    bool primitive_only = false;
    std::optional<std::string> triples_max;
    auto* triples = app.add_subcommand("triples", "List Pythagorean triples with generators");
    triples->add_flag("--primitive", primitive_only, "Primitive triples only");
    triples->add_option("max_x2", triples_max, "Largest hypotenuse");

    bool zeros = false;
    auto* search = app.add_subcommand("search", "Exhaustive search for square-area right triangles");
    search->add_flag("--zeros", zeros, "Admit zero components");

    std::string descent_name;
    std::vector<std::string> starts;
    auto* descent = app.add_subcommand("descent", "Run a built-in descent from a start value");
    descent->add_option("instance", descent_name, "pentagon, vii31, gcd, fermat, walsh")->required();
    descent->add_option("start", starts, "Start components");

    std::string schema_name, check_name;
    std::optional<std::string> check_bound;
    auto* check = app.add_subcommand("check", "Check a descent schema up to a bound");
    check->add_option("schema", schema_name, "id, rd or idprime")->required();
    check->add_option("instance", check_name, "Registered instance")->required();
    check->add_option("bound", check_bound, "Bound");

    std::string kind;
    std::vector<std::string> values;
    auto* decomp = app.add_subcommand("decompose", "Decompose a triple or two-square solution");
    decomp->add_option("kind", kind, "triple, two-square or frenicle")->required();
    decomp->add_option("values", values, "Components")->required();

    for (auto* sub : {triples, search, descent, check, decomp}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::usage;
    }

    try {
        const bool bound_given = bound_opt->count() > 0;
        if (bound_given) {
            cfg.bound = parse_natural(bound_text, "--bound");
            if (cfg.bound.is_zero()) throw UsageError("--bound must be >= 1");
        }
        cfg.format = format_text == "jsonl" ? Format::jsonl : Format::text;
        cfg.weight_mode = *weight_mode_from_string(mode_text);
        if (cache_opt->count() > 0) {
            cfg.cache_path = cache_text;
        } else if (const char* env = std::getenv("DESCENTE_CACHE"); env && *env) {
            cfg.cache_path = env;
        }

        if (triples->parsed()) {
            if (triples_max) {
                cfg.bound = parse_natural(*triples_max, "max_x2");
            } else if (!bound_given) {
                cfg.bound = 100;
            }
            if (cfg.bound.is_zero()) throw UsageError("max_x2 must be >= 1");
            return cmd_triples(cfg, primitive_only, out);
        }
        if (search->parsed()) {
            if (!bound_given) cfg.bound = 2000;
            return cmd_search(cfg, zeros, out, err);
        }
        if (descent->parsed()) return cmd_descent(cfg, descent_name, starts, bound_given, out);
        if (check->parsed()) return cmd_check(cfg, schema_name, check_name, check_bound, bound_given, out);
        if (decomp->parsed()) return cmd_decompose(cfg, kind, values, out, err);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::io_error;
    }
    return exit_code::usage;
}

}  // namespace descente::cli
