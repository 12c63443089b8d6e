#include "descente/diophantine.hpp"

#include <algorithm>

namespace descente {
namespace {

void require_primitive(std::initializer_list<Natural> values, const std::string& op) {
    if (auto p = common_prime_witness(values)) {
        throw NotPrimitiveError(op + ": not primitive, common prime " + p->to_string(), *p);
    }
}

Natural half(const Natural& n) {
    if (!n.is_even()) throw std::logic_error("expected an even value, got " + n.to_string());
    return n / 2;
}

}  // namespace

PythTriple::PythTriple(Natural x0, Natural x1, Natural x2)
    : legs_{std::move(x0), std::move(x1)}, x2_(std::move(x2)) {
    if (!satisfies(legs_[0], legs_[1], x2_)) {
        throw DomainError("not a Pythagorean triple: " + to_string());
    }
}

bool PythTriple::satisfies(const Natural& x0, const Natural& x1, const Natural& x2) {
    return square(x0) + square(x1) == square(x2);
}

std::string PythTriple::to_string() const {
    return "(" + legs_[0].to_string() + ", " + legs_[1].to_string() + ", " + x2_.to_string() + ")";
}

Generators::Generators(Leg even_leg, Natural p, Natural q)
    : even_leg_(even_leg), p_(std::move(p)), q_(std::move(q)) {
    if (!valid(p_, q_)) {
        throw DomainError("invalid generators p=" + p_.to_string() + " q=" + q_.to_string());
    }
}

bool Generators::valid(const Natural& p, const Natural& q) {
    return q < p && p.is_even() != q.is_even() && coprime({p, q});
}

SumOfSquaresSplit decompose_sum_of_squares(const PythTriple& t) {
    const Leg even = t.x0().is_even() ? Leg::x0 : Leg::x1;
    const Natural& odd_leg = t.leg(other(even));
    Natural a = half(t.x2() + odd_leg);
    Natural b = half(t.x2() - odd_leg);
    return {even, std::move(a), std::move(b)};
}

PythTriple compose_sum_of_squares(Leg even_leg, const Natural& a, const Natural& b) {
    if (a < b) throw DomainError("compose_sum_of_squares: need a >= b");
    const auto root = exact_sqrt(a * b);
    if (!root) throw DomainError("compose_sum_of_squares: a*b is not a square");
    Natural even = 2 * *root;
    Natural odd = a - b;
    return even_leg == Leg::x0 ? PythTriple(std::move(even), std::move(odd), a + b)
                               : PythTriple(std::move(odd), std::move(even), a + b);
}

Generators decompose_primitive_triple(const PythTriple& t) {
    require_primitive({t.x0(), t.x1(), t.x2()}, "decompose_primitive_triple");
    const auto [even, a, b] = decompose_sum_of_squares(t);
    const Natural c = half(t.leg(even));
    const auto [p, q] = split_coprime_square(a, b, c);
    return Generators(even, p, q);
}

PythTriple generate_triple(const Generators& g) {
    const Natural& p = g.p();
    const Natural& q = g.q();
    Natural even = 2 * p * q;
    Natural odd = square(p) - square(q);
    Natural hyp = square(p) + square(q);
    return g.even_leg() == Leg::x0 ? PythTriple(std::move(even), std::move(odd), std::move(hyp))
                                   : PythTriple(std::move(odd), std::move(even), std::move(hyp));
}

DoubleSquareForm frenicle_xxxviii(const PythTriple& t, const Natural& v) {
    require_primitive({t.x0(), t.x1(), t.x2()}, "frenicle_xxxviii");
    const Generators g = decompose_primitive_triple(t);
    if (t.leg(g.even_leg()) != square(v)) {
        throw DomainError("frenicle_xxxviii: even leg " + t.leg(g.even_leg()).to_string() +
                          " is not " + v.to_string() + "^2");
    }
    const auto split = split_coprime_double_square(2, g.p(), g.q(), v);
    DoubleSquareForm out{split.m, split.k};
    if (square(2 * square(out.m)) + square(square(out.k)) != t.x2()) {
        throw std::logic_error("frenicle_xxxviii: identity failed");
    }
    return out;
}

TwoSquareSplit decompose_two_square(const Natural& x0, const Natural& x1, const Natural& x2) {
    if (square(x0) + 2 * square(x1) != square(x2)) {
        throw DomainError("decompose_two_square: " + x0.to_string() + "^2 + 2*" + x1.to_string() +
                          "^2 != " + x2.to_string() + "^2");
    }
    return {half(x2 + x0), half(x2 - x0)};
}

DoubleSquareForm decompose_primitive_two_square(const Natural& x0, const Natural& x1,
                                                const Natural& x2) {
    const auto [a, b] = decompose_two_square(x0, x1, x2);
    require_primitive({x0, x1, x2}, "decompose_primitive_two_square");
    const auto split = split_coprime_double_square(2, a, b, x1);
    DoubleSquareForm out{split.m, split.k};
    const Natural twice_m2 = 2 * square(out.m);
    const Natural k2 = square(out.k);
    if (abs_diff(twice_m2, k2) != x0 || 2 * out.m * out.k != x1 || twice_m2 + k2 != x2) {
        throw std::logic_error("decompose_primitive_two_square: reconstruction failed");
    }
    return out;
}

std::vector<TripleRow> enumerate_triples(const Natural& max_x2, bool primitive_only) {
    std::vector<TripleRow> rows;
    for (Natural p = 2; square(p) + 1 <= max_x2; p = p + 1) {
        for (Natural q = 1; q < p; q = q + 1) {
            const Natural hyp = square(p) + square(q);
            if (hyp > max_x2) break;
            if (!Generators::valid(p, q)) continue;
            const Natural even = 2 * p * q;
            const Natural odd = square(p) - square(q);
            // Legs ascending: the even leg sits at x1 exactly when it is the larger one.
            const Leg even_leg = even < odd ? Leg::x0 : Leg::x1;
            const Generators g(even_leg, p, q);
            const PythTriple base = generate_triple(g);
            for (Natural d = 1; d * hyp <= max_x2; d = d + 1) {
                rows.push_back({PythTriple(d * base.x0(), d * base.x1(), d * hyp), g, d});
                if (primitive_only) break;
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const TripleRow& a, const TripleRow& b) {
        if (a.triple.x2() != b.triple.x2()) return a.triple.x2() < b.triple.x2();
        return a.triple.x0() < b.triple.x0();
    });
    return rows;
}

}  // namespace descente
