#pragma once

#include <optional>
#include <span>
#include <vector>

#include "descente/natural.hpp"

// Divisibility, coprimality and primality in the style of Elements Book VII.
// Every function is pure; preconditions are checked and reported through
// DomainError.

namespace descente {

struct PrimePower {
    Natural prime;
    Natural exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    [[nodiscard]] const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    [[nodiscard]] bool empty() const noexcept { return factors_.empty(); }
    [[nodiscard]] Natural product() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

/// Which of two operands a lemma picked.
enum class Side { first = 1, second = 2 };

/// x | y: there is a k with k*x = y. divides(x, 0) always holds; divides(0, y) iff y = 0.
bool divides(const Natural& x, const Natural& y);

/// Greatest common divisor by repeated remainders. Throws when both are zero.
Natural gcd(const Natural& x, const Natural& y);

/// Deterministic trial division up to the integer square root.
bool is_prime(const Natural& p);

/// Least prime dividing x (x >= 2).
///
/// Computed by walking proper divisors downward, the way the Book VII
/// argument does: each step keeps the smallest measure of the current number
/// and moves to its largest proper divisor still measured by it, until a
/// prime is reached. See vii31_step.
Natural least_prime_divisor(const Natural& x);

/// One step of the divisor walk: the largest proper divisor d of a composite
/// x (1 < d < x) that is still divisible by the least divisor > 1 of x.
/// Returns nothing when x is 0, 1 or prime.
std::optional<Natural> vii31_step(const Natural& x);

/// Least divisor greater than one (x >= 2), by trial division.
Natural least_nontrivial_divisor(const Natural& x);

Factorization factorize(const Natural& x);

/// Largest n with p^n | x; p prime, x >= 1.
Natural valuation(const Natural& p, const Natural& x);

struct ValuationSplit {
    Natural n0;
    Natural n1;

    friend bool operator==(const ValuationSplit&, const ValuationSplit&) = default;
};

/// Given p^m | x0*x1, exponents with n0 + n1 = m, p^n0 | x0 and p^n1 | x1.
/// Puts as much as possible on x0: n0 = min(m, valuation(p, x0)).
ValuationSplit split_valuation(const Natural& p, const Natural& m, const Natural& x0,
                               const Natural& x1);

/// True iff the only common divisor of all values is 1. Empty input is a DomainError.
bool coprime(std::span<const Natural> values);
bool coprime(std::initializer_list<Natural> values);

/// The least prime dividing every value, or nothing when the values are coprime.
std::optional<Natural> common_prime_witness(std::span<const Natural> values);
std::optional<Natural> common_prime_witness(std::initializer_list<Natural> values);

/// Euclid's lemma: for prime p with p | x1*x2, a side that p divides (first preferred).
Side euclid_lemma_side(const Natural& p, const Natural& x1, const Natural& x2);

/// x | y decided only through prime-power valuations of x; x, y >= 1.
bool divides_via_valuations(const Natural& x, const Natural& y);

}  // namespace descente
