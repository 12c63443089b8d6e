#include "descente/fermat.hpp"

#include <algorithm>

namespace descente {

Natural CandidateSolution::encode() const { return pairing::encode({x0, x1, x2, x3}); }

CandidateSolution CandidateSolution::decode(const Natural& z) {
    auto v = pairing::decode(z, 4);
    return {std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3])};
}

std::string CandidateSolution::to_string() const {
    return "(" + x0.to_string() + ", " + x1.to_string() + ", " + x2.to_string() + ", " +
           x3.to_string() + ")";
}

bool solves_equations(const CandidateSolution& c) {
    return square(c.x0) + square(c.x1) == square(c.x2) && c.x0 * c.x1 == 2 * square(c.x3);
}

bool is_counterexample(const CandidateSolution& c) {
    return !c.x0.is_zero() && !c.x1.is_zero() && solves_equations(c);
}

std::vector<CandidateSolution> degenerate_solutions() {
    std::vector<CandidateSolution> out;
    for (unsigned x0 = 0; x0 <= 1; ++x0)
        for (unsigned x1 = 0; x1 <= 1; ++x1)
            for (unsigned x2 = 0; x2 <= 1; ++x2)
                for (unsigned x3 = 0; x3 <= 1; ++x3) {
                    CandidateSolution c{x0, x1, x2, x3};
                    if (solves_equations(c)) out.push_back(c);
                }
    return out;
}

PythTriple reduce_triple_by_prime(const PythTriple& t, const Natural& z) {
    if (!is_prime(z)) throw DomainError("reduce_triple_by_prime: " + z.to_string() + " is not prime");
    if (!divides(z, t.x0()) || !divides(z, t.x1())) {
        throw DomainError("reduce_triple_by_prime: " + z.to_string() + " does not divide both legs of " +
                          t.to_string());
    }
    // z^2 | x2^2, hence z | x2.
    if (!divides(z, t.x2())) throw std::logic_error("reduce_triple_by_prime: z does not divide x2");
    return PythTriple(t.x0() / z, t.x1() / z, t.x2() / z);
}

Natural reduce_area_witness(const Natural& x3, const Natural& z) {
    if (!is_prime(z)) throw DomainError("reduce_area_witness: " + z.to_string() + " is not prime");
    if (!divides(z, x3)) {
        throw DomainError("reduce_area_witness: " + z.to_string() + " does not divide " + x3.to_string());
    }
    return x3 / z;
}

std::optional<std::string> violation(const ClaimIData& d) {
    if (!coprime({d.p, d.q})) return "p, q not coprime";
    if (d.p.is_even() == d.q.is_even()) return "p, q of equal parity";
    if (!(d.q < d.p)) return "p <= q";
    if (d.p != square(d.e)) return "p != e^2";
    if (d.q != square(d.f)) return "q != f^2";
    if (square(d.p) - square(d.q) != square(d.c)) return "p^2 - q^2 != c^2";
    if (!(d.f < d.e)) return "e <= f";
    if (d.f.is_zero()) return "f = 0";
    return std::nullopt;
}

std::optional<std::string> violation(const ClaimIIData& d) {
    if (!(d.f < d.e)) return "e <= f";
    if (d.f.is_zero()) return "f = 0";
    if (square(d.e) + square(d.f) != square(d.g)) return "e^2 + f^2 != g^2";
    if (square(d.e) - square(d.f) != square(d.h)) return "e^2 - f^2 != h^2";
    if (!coprime({d.g, d.h})) return "g, h not coprime";
    return std::nullopt;
}

namespace {

void require_coprime_counterexample(const CandidateSolution& c, const std::string& op) {
    if (!is_counterexample(c)) throw DomainError(op + ": " + c.to_string() + " is not a counterexample");
    if (!coprime({c.x0, c.x1})) throw DomainError(op + ": legs of " + c.to_string() + " not coprime");
}

}  // namespace

ClaimIData claim_i(const CandidateSolution& c) {
    require_coprime_counterexample(c, "claim_i");
    const Generators g = decompose_primitive_triple(PythTriple(c.x0, c.x1, c.x2));
    const Natural& p = g.p();
    const Natural& q = g.q();
    // x0*x1 = 2pq(p^2 - q^2) = 2*x3^2
    const auto [b, cc] = split_coprime_square(p * q, square(p) - square(q), c.x3);
    const auto [e, f] = split_coprime_square(p, q, b);
    ClaimIData d{p, q, cc, e, f};
    if (auto why = violation(d)) throw std::logic_error("claim_i: " + *why);
    if (!(e < c.x2)) throw std::logic_error("claim_i: e >= x2");
    return d;
}

ClaimIIData claim_ii(const ClaimIData& d) {
    if (auto why = violation(d)) throw DomainError("claim_ii: " + *why);
    const auto [g, h] = split_sum_diff_square(d.p, d.q, d.c);
    ClaimIIData out{d.e, d.f, g, h};
    if (auto why = violation(out)) throw std::logic_error("claim_ii: " + *why);
    return out;
}

CandidateSolution descend_claim_ii(const ClaimIIData& d) {
    if (auto why = violation(d)) throw DomainError("descend_claim_ii: " + *why);
    // h^2 + 2f^2 = g^2
    const auto [m, k] = decompose_primitive_two_square(d.h, d.f, d.g);
    CandidateSolution y{2 * square(m), square(k), d.e, m * k};
    if (!is_counterexample(y)) throw std::logic_error("descend_claim_ii: result is not a counterexample");
    return y;
}

WeakClaimIIData walsh_claim_iii(const CandidateSolution& c) {
    require_coprime_counterexample(c, "walsh_claim_iii");
    return {c.x2, 2 * c.x3, c.x0 + c.x1, abs_diff(c.x0, c.x1)};
}

DoubleSquareForm frenicle_descend(const ClaimIData& d) {
    if (auto why = violation(d)) throw DomainError("frenicle_descend: " + *why);
    if (d.c.is_even()) throw DomainError("frenicle_descend: c is even");
    const DoubleSquareForm out = frenicle_xxxviii(PythTriple(d.q, d.c, d.p), d.f);
    if (square(2 * square(out.m)) + square(square(out.k)) != d.p) {
        throw std::logic_error("frenicle_descend: identity failed");
    }
    return out;
}

VacuityCertificate claim_i_vacuity(const Natural& bound_x2) {
    VacuityCertificate cert{"claim_i inputs, triples by x2", bound_x2, 0, 0};
    for (const TripleRow& row : enumerate_triples(bound_x2, true)) {
        ++cert.checked;
        const Natural area2 = row.triple.x0() * row.triple.x1() / 2;
        if (is_square(area2)) ++cert.found;
    }
    return cert;
}

VacuityCertificate claim_i_data_vacuity(const Natural& bound_e) {
    VacuityCertificate cert{"ClaimIData by e", bound_e, 0, 0};
    for (Natural e = 2; e <= bound_e; e = e + 1) {
        const Natural p = square(e);
        for (Natural f = 1; f < e; f = f + 1) {
            ++cert.checked;
            const Natural q = square(f);
            if (p.is_even() == q.is_even() || !coprime({p, q})) continue;
            if (is_square(square(p) - square(q))) ++cert.found;
        }
    }
    return cert;
}

VacuityCertificate claim_ii_data_vacuity(const Natural& bound_e) {
    VacuityCertificate cert{"ClaimIIData by e", bound_e, 0, 0};
    for (Natural e = 2; e <= bound_e; e = e + 1) {
        for (Natural f = 1; f < e; f = f + 1) {
            ++cert.checked;
            const auto g = exact_sqrt(square(e) + square(f));
            if (!g) continue;
            const auto h = exact_sqrt(square(e) - square(f));
            if (h && coprime({*g, *h})) ++cert.found;
        }
    }
    return cert;
}

std::string to_string(WeightMode m) { return m == WeightMode::modern ? "modern" : "walsh"; }

std::optional<WeightMode> weight_mode_from_string(std::string_view s) {
    if (s == "modern") return WeightMode::modern;
    if (s == "walsh") return WeightMode::walsh;
    return std::nullopt;
}

Natural walsh_p0_weight(const CandidateSolution& c) {
    return square(c.x2) + square(2 * c.x3) + 1;
}

Natural walsh_p1_weight(const Natural& e, const Natural& f) { return square(e) + square(f); }

Natural walsh_pseudo_state(const CandidateSolution& c) {
    return pairing::encode({c.x2, 2 * c.x3, c.x0 + c.x1, abs_diff(c.x0, c.x1)});
}

Domain candidate_domain() {
    return [](const Natural& bound, const Visitor& visit) {
        for (const TripleRow& row : enumerate_triples(bound)) {
            const PythTriple& t = row.triple;
            const Natural x3 = isqrt(t.x0() * t.x1() / 2);
            visit(CandidateSolution{t.x0(), t.x1(), t.x2(), x3}.encode());
            visit(CandidateSolution{t.x1(), t.x0(), t.x2(), x3}.encode());
        }
        for (Natural e = 2; e <= bound; e = e + 1) {
            for (Natural f = 1; f < e; f = f + 1) {
                const Natural s = square(e);
                const Natural t = square(f);
                visit(pairing::encode({e, f, isqrt(s + t), isqrt(s - t)}));
            }
        }
    };
}

namespace {

// Divides out common primes of the legs until they are coprime.
CandidateSolution reduce_to_coprime_legs(CandidateSolution c) {
    while (auto z = common_prime_witness({c.x0, c.x1})) {
        const PythTriple t = reduce_triple_by_prime(PythTriple(c.x0, c.x1, c.x2), *z);
        c = {t.x0(), t.x1(), t.x2(), reduce_area_witness(c.x3, *z)};
    }
    return c;
}

std::optional<Natural> fermat_step(const Natural& z) {
    const CandidateSolution c = CandidateSolution::decode(z);
    if (!is_counterexample(c)) return std::nullopt;
    if (auto p = common_prime_witness({c.x0, c.x1})) {
        const PythTriple t = reduce_triple_by_prime(PythTriple(c.x0, c.x1, c.x2), *p);
        return CandidateSolution{t.x0(), t.x1(), t.x2(), reduce_area_witness(c.x3, *p)}.encode();
    }
    return descend_claim_ii(claim_ii(claim_i(c))).encode();
}

ClaimIIData decode_claim_ii(const Natural& z) {
    auto v = pairing::decode(z, 4);
    return {std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3])};
}

}  // namespace

DescentInstance fermat_instance(WeightMode mode) {
    Weight weight;
    if (mode == WeightMode::modern) {
        weight = [](const Natural& z) { return CandidateSolution::decode(z).x2; };
    } else {
        weight = [](const Natural& z) { return walsh_p0_weight(CandidateSolution::decode(z)); };
    }
    return DescentInstance(
        "fermat", [](const Natural& z) { return !is_counterexample(CandidateSolution::decode(z)); },
        std::move(weight), fermat_step, candidate_domain(), tuple_describe(4));
}

IndexedDescentFamily walsh_family() {
    std::vector<Predicate> predicates{
        [](const Natural& z) { return !is_counterexample(CandidateSolution::decode(z)); },
        [](const Natural& z) { return violation(decode_claim_ii(z)).has_value(); },
    };
    IndexedWeight weight = [](std::size_t i, const Natural& z) {
        if (i == 0) return walsh_p0_weight(CandidateSolution::decode(z));
        const ClaimIIData d = decode_claim_ii(z);
        return walsh_p1_weight(d.e, d.f);
    };
    std::vector<Step> steps{
        [](const Natural& z) -> std::optional<Natural> {
            const CandidateSolution c = CandidateSolution::decode(z);
            if (!is_counterexample(c)) return std::nullopt;
            const WeakClaimIIData w = walsh_claim_iii(reduce_to_coprime_legs(c));
            return pairing::encode({w.e, w.f, w.g, w.h});
        },
        [](const Natural& z) -> std::optional<Natural> {
            const ClaimIIData d = decode_claim_ii(z);
            if (violation(d)) return std::nullopt;
            const ClaimIIData next = claim_ii(claim_i(descend_claim_ii(d)));
            return pairing::encode({next.e, next.f, next.g, next.h});
        },
    };
    return IndexedDescentFamily("walsh", std::move(predicates), std::move(weight), std::move(steps),
                                candidate_domain(), tuple_describe(4));
}

}  // namespace descente
