#include "descente/descent.hpp"

#include <stdexcept>

#include "descente/arith.hpp"

namespace descente {

namespace pairing {

Natural pair(const Natural& a, const Natural& b) {
    const Natural s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<Natural, Natural> unpair(const Natural& z) {
    const Natural w = (isqrt(8 * z + 1) - 1) / 2;
    const Natural t = w * (w + 1) / 2;
    Natural y = z - t;
    Natural x = w - y;
    return {std::move(x), std::move(y)};
}

Natural encode(const std::vector<Natural>& components) {
    if (components.empty()) throw DomainError("pairing::encode: empty tuple");
    Natural acc = components.back();
    for (std::size_t i = components.size() - 1; i-- > 0;) acc = pair(components[i], acc);
    return acc;
}

std::vector<Natural> decode(const Natural& z, std::size_t arity) {
    if (arity == 0) throw DomainError("pairing::decode: arity 0");
    std::vector<Natural> out;
    out.reserve(arity);
    Natural rest = z;
    for (std::size_t i = 0; i + 1 < arity; ++i) {
        auto [head, tail] = unpair(rest);
        out.push_back(std::move(head));
        rest = std::move(tail);
    }
    out.push_back(std::move(rest));
    return out;
}

}  // namespace pairing

Domain values_up_to() {
    return [](const Natural& bound, const Visitor& visit) {
        for (Natural v = 0; v <= bound; v = v + 1) visit(v);
    };
}

Domain tuples_up_to(std::size_t arity) {
    if (arity == 0) throw DomainError("tuples_up_to: arity 0");
    return [arity](const Natural& bound, const Visitor& visit) {
        std::vector<Natural> tuple(arity, Natural(0));
        for (;;) {
            visit(pairing::encode(tuple));
            std::size_t i = arity;
            while (i > 0) {
                --i;
                if (tuple[i] < bound) {
                    tuple[i] = tuple[i] + 1;
                    break;
                }
                tuple[i] = 0;
                if (i == 0) return;
            }
        }
    };
}

Describe decimal() {
    return [](const Natural& v) { return v.to_string(); };
}

Describe tuple_describe(std::size_t arity) {
    return [arity](const Natural& v) {
        std::string out = "(";
        const auto parts = pairing::decode(v, arity);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ", ";
            out += parts[i].to_string();
        }
        return out + ")";
    };
}

namespace {

template <typename F>
void require_fn(const F& f, const char* what, const std::string& name) {
    if (!f) throw std::invalid_argument(name + ": missing " + what);
}

}  // namespace

DescentInstance::DescentInstance(std::string name, Predicate predicate, Weight weight, Step step,
                                 Domain domain, Describe describe)
    : name_(std::move(name)),
      predicate_(std::move(predicate)),
      weight_(std::move(weight)),
      step_(std::move(step)),
      domain_(std::move(domain)),
      describe_(std::move(describe)) {
    require_fn(predicate_, "predicate", name_);
    require_fn(weight_, "weight", name_);
    require_fn(step_, "step", name_);
    require_fn(domain_, "domain", name_);
    require_fn(describe_, "describe", name_);
}

ReductionDescentInstance::ReductionDescentInstance(std::string name, Predicate base,
                                                   Predicate predicate, Weight weight, Step step,
                                                   Domain domain, Describe describe)
    : name_(std::move(name)),
      base_(std::move(base)),
      predicate_(std::move(predicate)),
      weight_(std::move(weight)),
      step_(std::move(step)),
      domain_(std::move(domain)),
      describe_(std::move(describe)) {
    require_fn(base_, "base", name_);
    require_fn(predicate_, "predicate", name_);
    require_fn(weight_, "weight", name_);
    require_fn(step_, "step", name_);
    require_fn(domain_, "domain", name_);
    require_fn(describe_, "describe", name_);
}

IndexedDescentFamily::IndexedDescentFamily(std::string name, std::vector<Predicate> predicates,
                                           IndexedWeight weight, std::vector<Step> steps,
                                           Domain domain, Describe describe)
    : name_(std::move(name)),
      predicates_(std::move(predicates)),
      weight_(std::move(weight)),
      steps_(std::move(steps)),
      domain_(std::move(domain)),
      describe_(std::move(describe)) {
    if (predicates_.empty()) throw std::invalid_argument(name_ + ": empty predicate list");
    if (steps_.size() != predicates_.size()) {
        throw std::invalid_argument(name_ + ": need one step per predicate");
    }
    for (const auto& p : predicates_) require_fn(p, "predicate", name_);
    for (const auto& s : steps_) require_fn(s, "step", name_);
    require_fn(weight_, "weight", name_);
    require_fn(domain_, "domain", name_);
    require_fn(describe_, "describe", name_);
}

std::string to_string(Schema s) {
    switch (s) {
        case Schema::id: return "id";
        case Schema::rd: return "rd";
        case Schema::id_prime: return "idprime";
    }
    return "?";
}

std::string to_string(FailureKind k) {
    switch (k) {
        case FailureKind::step_undefined: return "step-undefined";
        case FailureKind::weight_not_decreased: return "weight-not-decreased";
        case FailureKind::step_satisfies_predicate: return "step-satisfies-predicate";
        case FailureKind::base_without_predicate: return "base-without-predicate";
    }
    return "?";
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::predicate_holds: return "predicate-holds";
        case Outcome::step_undefined: return "step-undefined";
        case Outcome::bound_exceeded: return "bound-exceeded";
        case Outcome::weight_not_decreased: return "weight-not-decreased";
    }
    return "?";
}

std::optional<Schema> schema_from_string(std::string_view s) {
    for (Schema v : {Schema::id, Schema::rd, Schema::id_prime}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

std::optional<FailureKind> failure_kind_from_string(std::string_view s) {
    for (FailureKind v : {FailureKind::step_undefined, FailureKind::weight_not_decreased,
                          FailureKind::step_satisfies_predicate,
                          FailureKind::base_without_predicate}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
    for (Outcome v : {Outcome::predicate_holds, Outcome::step_undefined, Outcome::bound_exceeded,
                      Outcome::weight_not_decreased}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

namespace {

// The descent obligation for one counterexample v of P_from: a step to some u
// with smaller weight that is a counterexample of P_to.
struct Obligation {
    const Predicate& target;
    std::function<Natural(const Natural&)> weight_from;
    std::function<Natural(const Natural&)> weight_to;
    const Step& step;
    const Describe& describe;
};

std::optional<Failure> discharge(const Obligation& ob, const Natural& v, std::size_t index) {
    std::optional<Natural> u;
    try {
        u = ob.step(v);
    } catch (const std::exception& e) {
        return Failure{v, index, FailureKind::step_undefined, std::string("step threw: ") + e.what()};
    }
    if (!u) return Failure{v, index, FailureKind::step_undefined, "no step at " + ob.describe(v)};
    const Natural wv = ob.weight_from(v);
    const Natural wu = ob.weight_to(*u);
    if (!(wu < wv)) {
        return Failure{v, index, FailureKind::weight_not_decreased,
                       "step to " + ob.describe(*u) + ": weight " + wu.to_string() + " >= " +
                           wv.to_string()};
    }
    if (ob.target(*u)) {
        return Failure{v, index, FailureKind::step_satisfies_predicate,
                       "step to " + ob.describe(*u) + " satisfies the predicate"};
    }
    return std::nullopt;
}

Failure thrown(const Natural& v, std::size_t index, const std::exception& e) {
    return Failure{v, index, FailureKind::step_undefined, std::string("instance threw: ") + e.what()};
}

}  // namespace

Report check_id(const DescentInstance& inst, const Natural& bound) {
    Report r{Schema::id, inst.name(), bound, 0, 0, {}};
    const Obligation ob{inst.predicate_fn(), inst.weight_fn(), inst.weight_fn(), inst.step_fn(),
                        inst.describe_fn()};
    inst.domain()(bound, [&](const Natural& v) {
        ++r.checked;
        try {
            if (inst.predicate(v)) return;
            ++r.counterexamples;
            if (auto f = discharge(ob, v, 0)) r.failures.push_back(std::move(*f));
        } catch (const std::exception& e) {
            r.failures.push_back(thrown(v, 0, e));
        }
    });
    return r;
}

Report check_rd(const ReductionDescentInstance& inst, const Natural& bound) {
    Report r{Schema::rd, inst.name(), bound, 0, 0, {}};
    const Obligation ob{inst.predicate_fn(), inst.weight_fn(), inst.weight_fn(), inst.step_fn(),
                        inst.describe_fn()};
    inst.domain()(bound, [&](const Natural& v) {
        ++r.checked;
        try {
            const bool s = inst.base(v);
            const bool p = inst.predicate(v);
            if (s && !p) {
                r.failures.push_back(Failure{v, 0, FailureKind::base_without_predicate,
                                             "base without predicate at " +
                                                 inst.describe_fn()(v)});
                return;
            }
            if (s || p) return;
            ++r.counterexamples;
            if (auto f = discharge(ob, v, 0)) r.failures.push_back(std::move(*f));
        } catch (const std::exception& e) {
            r.failures.push_back(thrown(v, 0, e));
        }
    });
    return r;
}

Report check_id_prime(const IndexedDescentFamily& fam, const Natural& bound) {
    Report r{Schema::id_prime, fam.name(), bound, 0, 0, {}};
    fam.domain()(bound, [&](const Natural& v) {
        ++r.checked;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            try {
                if (fam.predicate(i, v)) continue;
                ++r.counterexamples;
                const std::size_t j = fam.successor(i);
                const Predicate target = [&](const Natural& u) { return fam.predicate(j, u); };
                const Step step = [&](const Natural& u) { return fam.step(i, u); };
                const Obligation ob{target, [&](const Natural& u) { return fam.weight(i, u); },
                                    [&](const Natural& u) { return fam.weight(j, u); }, step,
                                    fam.describe_fn()};
                if (auto f = discharge(ob, v, i)) r.failures.push_back(std::move(*f));
            } catch (const std::exception& e) {
                r.failures.push_back(thrown(v, i, e));
            }
        }
    });
    return r;
}

DescentInstance rd_to_id(const ReductionDescentInstance& inst) {
    auto base = inst.base_fn();
    auto pred = inst.predicate_fn();
    auto step = inst.step_fn();
    return DescentInstance(
        inst.name(), [base, pred](const Natural& z) { return base(z) || pred(z); }, inst.weight_fn(),
        [base, pred, step](const Natural& z) -> std::optional<Natural> {
            if (base(z) || pred(z)) return std::nullopt;
            return step(z);
        },
        inst.domain(), inst.describe_fn());
}

ReductionDescentInstance id_as_rd(const DescentInstance& inst) {
    return ReductionDescentInstance(
        inst.name(), [](const Natural&) { return false; }, inst.predicate_fn(), inst.weight_fn(),
        inst.step_fn(), inst.domain(), inst.describe_fn());
}

IndexedDescentFamily single_family(const DescentInstance& inst) {
    auto w = inst.weight_fn();
    return IndexedDescentFamily(
        inst.name(), {inst.predicate_fn()}, [w](std::size_t, const Natural& v) { return w(v); },
        {inst.step_fn()}, inst.domain(), inst.describe_fn());
}

DescentInstance base_walk(const ReductionDescentInstance& inst) {
    return DescentInstance(inst.name(), inst.base_fn(), inst.weight_fn(), inst.step_fn(),
                           inst.domain(), inst.describe_fn());
}

void DescentTrace::push(TraceEntry entry) {
    if (!entries_.empty() && !(entry.weight < entries_.back().weight)) {
        throw std::logic_error("descent trace: weight " + entry.weight.to_string() +
                               " does not decrease from " + entries_.back().weight.to_string());
    }
    entries_.push_back(std::move(entry));
}

DescentTrace run_descent(const DescentInstance& inst, const Natural& start,
                         const Natural& max_steps) {
    DescentTrace trace(inst.name());
    trace.push({start, inst.weight(start), inst.describe(start)});
    Natural current = start;
    for (Natural steps = 0;; steps = steps + 1) {
        if (inst.predicate(current)) {
            trace.finish(Outcome::predicate_holds);
            return trace;
        }
        if (steps >= max_steps) {
            trace.finish(Outcome::bound_exceeded);
            return trace;
        }
        std::optional<Natural> next;
        try {
            next = inst.step(current);
        } catch (const DomainError&) {
            next.reset();
        }
        if (!next) {
            trace.finish(Outcome::step_undefined);
            return trace;
        }
        Natural w = inst.weight(*next);
        if (!(w < trace.entries().back().weight)) {
            trace.finish(Outcome::weight_not_decreased);
            return trace;
        }
        trace.push({*next, std::move(w), inst.describe(*next)});
        current = std::move(*next);
    }
}

PentagonPair pentagon_step(const Natural& m, const Natural& n) {
    if (!(n < m && m < 2 * n)) {
        throw DomainError("pentagon_step: need n < m < 2n, got m=" + m.to_string() +
                          " n=" + n.to_string());
    }
    return {m - n, 2 * n - m};
}

namespace {

std::optional<Natural> pentagon_encoded_step(const Natural& z) {
    const auto mn = pairing::decode(z, 2);
    const Natural& m = mn[0];
    const Natural& n = mn[1];
    if (!(n < m && m < 2 * n)) return std::nullopt;
    const auto next = pentagon_step(m, n);
    return pairing::encode({next.diagonal, next.side});
}

Natural first_component(const Natural& z) { return pairing::unpair(z).first; }

bool has_prime_divisor(const Natural& x) {
    if (x <= 1) return true;
    return is_prime(least_nontrivial_divisor(x));
}

bool prime_or_unit(const Natural& x) { return x <= 1 || is_prime(x); }

// Runs the remainder iteration and checks the stopping value divides both.
bool euclid_terminates_with_common_divisor(const Natural& z) {
    const auto [a0, b0] = pairing::unpair(z);
    Natural a = a0;
    Natural b = b0;
    while (!b.is_zero()) {
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return divides(a, a0) && divides(a, b0);
}

}  // namespace

DescentInstance pentagon_instance() {
    return DescentInstance(
        "pentagon",
        [](const Natural& z) {
            const auto mn = pairing::decode(z, 2);
            return mn[1].is_zero() || square(mn[0]) != mn[0] * mn[1] + square(mn[1]);
        },
        first_component, pentagon_encoded_step, tuples_up_to(2), tuple_describe(2));
}

DescentInstance pentagon_assumption() {
    return DescentInstance(
        "pentagon", [](const Natural&) { return false; }, first_component, pentagon_encoded_step,
        tuples_up_to(2), tuple_describe(2));
}

DescentInstance vii31_instance() {
    return DescentInstance("vii31", has_prime_divisor, [](const Natural& x) { return x; },
                           vii31_step);
}

ReductionDescentInstance vii31_reduction() {
    return ReductionDescentInstance("vii31", prime_or_unit, has_prime_divisor,
                                    [](const Natural& x) { return x; }, vii31_step);
}

ReductionDescentInstance gcd_reduction() {
    return ReductionDescentInstance(
        "gcd", [](const Natural& z) { return pairing::unpair(z).second.is_zero(); },
        euclid_terminates_with_common_divisor,
        [](const Natural& z) { return pairing::unpair(z).second; },
        [](const Natural& z) -> std::optional<Natural> {
            const auto [a, b] = pairing::unpair(z);
            if (b.is_zero()) return std::nullopt;
            return pairing::pair(b, a % b);
        },
        tuples_up_to(2), tuple_describe(2));
}

}  // namespace descente
