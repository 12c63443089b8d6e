#pragma once

#include <array>
#include <string>
#include <vector>

#include "descente/arith.hpp"
#include "descente/proportions.hpp"

// Roots of x0^2 + x1^2 = x2^2 and x0^2 + 2*x1^2 = x2^2.

namespace descente {

/// Index of a leg in a Pythagorean triple.
enum class Leg : unsigned { x0 = 0, x1 = 1 };

inline Leg other(Leg l) { return l == Leg::x0 ? Leg::x1 : Leg::x0; }

/// (x0, x1, x2) with x0^2 + x1^2 = x2^2; checked on construction.
class PythTriple {
public:
    PythTriple(Natural x0, Natural x1, Natural x2);

    static bool satisfies(const Natural& x0, const Natural& x1, const Natural& x2);

    [[nodiscard]] const Natural& x0() const noexcept { return legs_[0]; }
    [[nodiscard]] const Natural& x1() const noexcept { return legs_[1]; }
    [[nodiscard]] const Natural& x2() const noexcept { return x2_; }
    [[nodiscard]] const Natural& leg(Leg l) const noexcept { return legs_[static_cast<unsigned>(l)]; }

    [[nodiscard]] bool is_primitive() const { return coprime({legs_[0], legs_[1], x2_}); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PythTriple&, const PythTriple&) = default;

private:
    std::array<Natural, 2> legs_;
    Natural x2_;
};

/// Coprime p > q of opposite parity; `even_leg` is where 2pq goes.
class Generators {
public:
    Generators(Leg even_leg, Natural p, Natural q);

    static bool valid(const Natural& p, const Natural& q);

    [[nodiscard]] Leg even_leg() const noexcept { return even_leg_; }
    [[nodiscard]] const Natural& p() const noexcept { return p_; }
    [[nodiscard]] const Natural& q() const noexcept { return q_; }

    friend bool operator==(const Generators&, const Generators&) = default;

private:
    Leg even_leg_;
    Natural p_;
    Natural q_;
};

/// Raised when a primitive triple or form is required; carries the least
/// prime common to all components.
class NotPrimitiveError : public DomainError {
public:
    NotPrimitiveError(const std::string& what, Natural common_prime)
        : DomainError(what), common_prime_(std::move(common_prime)) {}
    [[nodiscard]] const Natural& common_prime() const noexcept { return common_prime_; }

private:
    Natural common_prime_;
};

struct SumOfSquaresSplit {
    Leg even_leg;
    Natural a;
    Natural b;

    friend bool operator==(const SumOfSquaresSplit&, const SumOfSquaresSplit&) = default;
};

/// a >= b with x_i = 2*sqrt(a*b), x_{1-i} = a - b, x2 = a + b, where i is the
/// even leg (x0 when both legs are even). Neither a nor b needs to be a square.
SumOfSquaresSplit decompose_sum_of_squares(const PythTriple& t);

/// The converse direction: the triple with x_i = 2*sqrt(a*b), x_{1-i} = a - b,
/// x2 = a + b. Requires a >= b and a*b a perfect square.
PythTriple compose_sum_of_squares(Leg even_leg, const Natural& a, const Natural& b);

/// Generators of a primitive triple. Non-primitive input raises NotPrimitiveError.
Generators decompose_primitive_triple(const PythTriple& t);

/// (2pq, p^2 - q^2, p^2 + q^2) with 2pq placed at the even leg.
PythTriple generate_triple(const Generators& g);

/// The pair (m, k) behind the numbers 2m^2 and k^2.
struct DoubleSquareForm {
    Natural m;
    Natural k;

    friend bool operator==(const DoubleSquareForm&, const DoubleSquareForm&) = default;
};

/// For a primitive triple whose even leg equals v^2: m >= 0, k >= 1 with 2m, k
/// coprime, m = 0 iff the even leg is 0, and (2m^2)^2 + (k^2)^2 = x2.
DoubleSquareForm frenicle_xxxviii(const PythTriple& t, const Natural& v);

struct TwoSquareSplit {
    Natural a;
    Natural b;

    friend bool operator==(const TwoSquareSplit&, const TwoSquareSplit&) = default;
};

/// For x0^2 + 2*x1^2 = x2^2: a >= b with x0 = a - b, 2ab = x1^2, x2 = a + b.
TwoSquareSplit decompose_two_square(const Natural& x0, const Natural& x1, const Natural& x2);

/// For coprime solutions of x0^2 + 2*x1^2 = x2^2: 2m, k coprime, 2m^2 != k^2,
/// x0 = |2m^2 - k^2|, x1 = 2mk, x2 = 2m^2 + k^2.
DoubleSquareForm decompose_primitive_two_square(const Natural& x0, const Natural& x1,
                                             const Natural& x2);

/// A triple with positive legs x0 < x1, written as factor * generate_triple(generators).
struct TripleRow {
    PythTriple triple;
    Generators generators;
    Natural factor;

    [[nodiscard]] bool primitive() const { return factor.is_one(); }

    friend bool operator==(const TripleRow&, const TripleRow&) = default;
};

/// Every triple with positive legs x0 < x1 and x2 <= max_x2, ordered by (x2, x0).
std::vector<TripleRow> enumerate_triples(const Natural& max_x2, bool primitive_only = false);

}  // namespace descente
