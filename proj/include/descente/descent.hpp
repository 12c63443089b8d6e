#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descente/natural.hpp"

// Bounded checking of the descent schemas.
//
//   (ID)   every counterexample v has a counterexample u with smaller weight;
//   (RD)   values in the base class S satisfy P, every other counterexample
//          has a smaller counterexample;
//   (ID')  as (ID), but a counterexample of P_i yields one of P_{i+1}.
//
// The well-founded ordering is always "smaller weight" for a weight into the
// naturals. Checks only certify the obligations for the values a domain
// enumerates below a bound, and say so. Predicates, weights and steps must be
// pure functions; instances are immutable once built.

namespace descente {

using Predicate = std::function<bool(const Natural&)>;
using Weight = std::function<Natural(const Natural&)>;
using Step = std::function<std::optional<Natural>(const Natural&)>;
using Describe = std::function<std::string(const Natural&)>;
using Visitor = std::function<void(const Natural&)>;

/// Enumerates the values a check covers for a given bound.
using Domain = std::function<void(const Natural& bound, const Visitor& visit)>;

/// Invertible packing of tuples into single naturals (Cantor pairing).
///
///   pair(a, b) = (a + b)(a + b + 1)/2 + b
///   encode({a, b, c, ...}) = pair(a, encode({b, c, ...})), encode({a}) = a
namespace pairing {
Natural pair(const Natural& a, const Natural& b);
std::pair<Natural, Natural> unpair(const Natural& z);
Natural encode(const std::vector<Natural>& components);
std::vector<Natural> decode(const Natural& z, std::size_t arity);
}  // namespace pairing

/// 0, 1, ..., bound.
Domain values_up_to();
/// Every encoded tuple whose components are all <= bound.
Domain tuples_up_to(std::size_t arity);

Describe decimal();
Describe tuple_describe(std::size_t arity);

class DescentInstance {
public:
    DescentInstance(std::string name, Predicate predicate, Weight weight, Step step,
                    Domain domain = values_up_to(), Describe describe = decimal());

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] bool predicate(const Natural& v) const { return predicate_(v); }
    [[nodiscard]] Natural weight(const Natural& v) const { return weight_(v); }
    [[nodiscard]] std::optional<Natural> step(const Natural& v) const { return step_(v); }
    [[nodiscard]] std::string describe(const Natural& v) const { return describe_(v); }
    [[nodiscard]] const Domain& domain() const noexcept { return domain_; }

    [[nodiscard]] const Predicate& predicate_fn() const noexcept { return predicate_; }
    [[nodiscard]] const Weight& weight_fn() const noexcept { return weight_; }
    [[nodiscard]] const Step& step_fn() const noexcept { return step_; }
    [[nodiscard]] const Describe& describe_fn() const noexcept { return describe_; }

private:
    std::string name_;
    Predicate predicate_;
    Weight weight_;
    Step step_;
    Domain domain_;
    Describe describe_;
};

class ReductionDescentInstance {
public:
    ReductionDescentInstance(std::string name, Predicate base, Predicate predicate, Weight weight,
                             Step step, Domain domain = values_up_to(),
                             Describe describe = decimal());

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] bool base(const Natural& v) const { return base_(v); }
    [[nodiscard]] bool predicate(const Natural& v) const { return predicate_(v); }
    [[nodiscard]] Natural weight(const Natural& v) const { return weight_(v); }
    [[nodiscard]] std::optional<Natural> step(const Natural& v) const { return step_(v); }
    [[nodiscard]] const Domain& domain() const noexcept { return domain_; }

    [[nodiscard]] const Predicate& base_fn() const noexcept { return base_; }
    [[nodiscard]] const Predicate& predicate_fn() const noexcept { return predicate_; }
    [[nodiscard]] const Weight& weight_fn() const noexcept { return weight_; }
    [[nodiscard]] const Step& step_fn() const noexcept { return step_; }
    [[nodiscard]] const Describe& describe_fn() const noexcept { return describe_; }

private:
    std::string name_;
    Predicate base_;
    Predicate predicate_;
    Weight weight_;
    Step step_;
    Domain domain_;
    Describe describe_;
};

/// Weight of a value while it is being read against predicate P_index.
using IndexedWeight = std::function<Natural(std::size_t index, const Natural&)>;

/// Finite family P_0 ... P_{n-1}. Indices beyond the list saturate at n-1,
/// so steps_[n-1] maps counterexamples of P_{n-1} to counterexamples of P_{n-1}.
class IndexedDescentFamily {
public:
    IndexedDescentFamily(std::string name, std::vector<Predicate> predicates, IndexedWeight weight,
                         std::vector<Step> steps, Domain domain = values_up_to(),
                         Describe describe = decimal());

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t size() const noexcept { return predicates_.size(); }
    [[nodiscard]] std::size_t successor(std::size_t i) const noexcept {
        return i + 1 < predicates_.size() ? i + 1 : predicates_.size() - 1;
    }
    [[nodiscard]] bool predicate(std::size_t i, const Natural& v) const { return predicates_.at(i)(v); }
    [[nodiscard]] Natural weight(std::size_t i, const Natural& v) const { return weight_(i, v); }
    [[nodiscard]] std::optional<Natural> step(std::size_t i, const Natural& v) const {
        return steps_.at(i)(v);
    }
    [[nodiscard]] const Domain& domain() const noexcept { return domain_; }
    [[nodiscard]] const Describe& describe_fn() const noexcept { return describe_; }

private:
    std::string name_;
    std::vector<Predicate> predicates_;
    IndexedWeight weight_;
    std::vector<Step> steps_;
    Domain domain_;
    Describe describe_;
};

enum class Schema { id, rd, id_prime };

enum class FailureKind {
    step_undefined,
    weight_not_decreased,
    step_satisfies_predicate,
    base_without_predicate,
};

std::string to_string(Schema s);
std::string to_string(FailureKind k);
std::optional<Schema> schema_from_string(std::string_view s);
std::optional<FailureKind> failure_kind_from_string(std::string_view s);

struct Failure {
    Natural value;
    std::size_t index = 0;  // predicate index; 0 outside (ID')
    FailureKind kind;
    std::string detail;

    friend bool operator==(const Failure&, const Failure&) = default;
};

/// Result of a bounded schema check. An empty failure list certifies the
/// obligations for every value the domain enumerated, nothing beyond.
struct Report {
    Schema schema = Schema::id;
    std::string instance;
    Natural bound;
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    std::vector<Failure> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }

    friend bool operator==(const Report&, const Report&) = default;
};

Report check_id(const DescentInstance& inst, const Natural& bound);
Report check_rd(const ReductionDescentInstance& inst, const Natural& bound);
Report check_id_prime(const IndexedDescentFamily& fam, const Natural& bound);

/// Instantiates P := S or P; the step is kept only where neither holds.
DescentInstance rd_to_id(const ReductionDescentInstance& inst);

/// Reads an (ID) instance as (RD) with an empty base class.
ReductionDescentInstance id_as_rd(const DescentInstance& inst);

/// Reads an (ID) instance as a one-predicate (ID') family.
IndexedDescentFamily single_family(const DescentInstance& inst);

/// The run of a reduction until its base class is reached: predicate := S.
DescentInstance base_walk(const ReductionDescentInstance& inst);

enum class Outcome { predicate_holds, step_undefined, bound_exceeded, weight_not_decreased };

std::string to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view s);

struct TraceEntry {
    Natural value;
    Natural weight;
    std::string label;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Values visited by a descent. Weights strictly decrease along the entries;
/// push() rejects an entry that would break this.
class DescentTrace {
public:
    DescentTrace() = default;
    explicit DescentTrace(std::string instance) : instance_(std::move(instance)) {}

    void push(TraceEntry entry);
    void finish(Outcome outcome) { outcome_ = outcome; }

    [[nodiscard]] const std::string& instance() const noexcept { return instance_; }
    [[nodiscard]] const std::vector<TraceEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] Outcome outcome() const noexcept { return outcome_; }

    friend bool operator==(const DescentTrace&, const DescentTrace&) = default;

private:
    std::string instance_;
    std::vector<TraceEntry> entries_;
    Outcome outcome_ = Outcome::bound_exceeded;
};

/// Applies the step from `start` while the predicate fails, for at most
/// `max_steps` steps.
DescentTrace run_descent(const DescentInstance& inst, const Natural& start,
                         const Natural& max_steps);

// Built-in historical descents.

struct PentagonPair {
    Natural diagonal;
    Natural side;

    friend bool operator==(const PentagonPair&, const PentagonPair&) = default;
};

/// Diagonal : side = m : n of a regular pentagon gives (m - n) : (2n - m) for the
/// inscribed one. Requires n < m < 2n; outside that window the step is undefined.
PentagonPair pentagon_step(const Natural& m, const Natural& n);

/// Pairs (m, n) checked against "m : n is not the diagonal-to-side ratio"
/// (n = 0 or m^2 != m*n + n^2). Weight m.
DescentInstance pentagon_instance();

/// The descent run under the hypothesis that the start pair is such a ratio:
/// the predicate never holds, so a run only stops when the step leaves the window.
DescentInstance pentagon_assumption();

/// "x is 0, 1 or has a prime divisor", weight x, step the divisor walk.
DescentInstance vii31_instance();

/// The same predicate with base class "x is prime or x <= 1".
ReductionDescentInstance vii31_reduction();

/// Encoded pairs (a, b); base "b = 0"; predicate "the remainder iteration from
/// (a, b) stops at a common divisor"; step (a, b) -> (b, a mod b); weight b.
ReductionDescentInstance gcd_reduction();

}  // namespace descente
