#include "descente/arith.hpp"

#include <algorithm>

namespace descente {
namespace {

// Trial division on machine words when the value fits; the answer is the
// same as the Natural path below, only faster for desk-scale inputs.
std::optional<std::uint64_t> small_least_divisor(std::uint64_t x) {
    if (x % 2 == 0) return 2;
    for (std::uint64_t d = 3; d <= x / d; d += 2) {
        if (x % d == 0) return d;
    }
    return std::nullopt;
}

Natural gcd_or_zero(Natural a, Natural b) {
    while (!b.is_zero()) {
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Natural gcd_of(std::span<const Natural> values) {
    if (values.empty()) throw DomainError("coprimality of an empty list is undefined");
    Natural g;
    for (const Natural& v : values) {
        g = gcd_or_zero(std::move(g), v);
        if (g.is_one()) break;
    }
    return g;
}

void require_prime(const Natural& p, const char* op) {
    if (!is_prime(p)) throw DomainError(std::string(op) + ": " + p.to_string() + " is not prime");
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].exponent.is_zero()) throw DomainError("factorization exponent must be positive");
        if (i > 0 && !(factors_[i - 1].prime < factors_[i].prime)) {
            throw DomainError("factorization primes must be strictly increasing");
        }
    }
}

Natural Factorization::product() const {
    Natural r = 1;
    for (const auto& [p, e] : factors_) {
        r *= p.pow(e.to_u64().value());
    }
    return r;
}

bool divides(const Natural& x, const Natural& y) {
    if (x.is_zero()) return y.is_zero();
    return (y % x).is_zero();
}

Natural gcd(const Natural& x, const Natural& y) {
    if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    return gcd_or_zero(x, y);
}

bool is_prime(const Natural& p) {
    if (p < 2) return false;
    if (auto small = p.to_u64()) return !small_least_divisor(*small).has_value() || *small == 2;
    return least_nontrivial_divisor(p) == p;
}

Natural least_nontrivial_divisor(const Natural& x) {
    if (x < 2) throw DomainError("least divisor > 1 requires x >= 2");
    if (auto small = x.to_u64()) return small_least_divisor(*small).value_or(*small);
    if (x.is_even()) return 2;
    for (Natural d = 3; d * d <= x; d += 2) {
        if (divides(d, x)) return d;
    }
    return x;
}

std::optional<Natural> vii31_step(const Natural& x) {
    if (x < 2) return std::nullopt;
    const Natural s = least_nontrivial_divisor(x);
    if (s == x) return std::nullopt;
    const Natural cofactor = x / s;
    if (divides(s, cofactor)) return cofactor;
    // s does not divide x/s, so the divisors t of x keeping s in x/t are the divisors of x/s.
    return x / least_nontrivial_divisor(cofactor);
}

Natural least_prime_divisor(const Natural& x) {
    if (x.is_zero() || x.is_one()) {
        throw DomainError("least_prime_divisor: " + x.to_string() + " has no least prime divisor");
    }
    Natural current = x;
    while (auto next = vii31_step(current)) current = std::move(*next);
    return current;
}

Factorization factorize(const Natural& x) {
    if (x.is_zero()) throw DomainError("factorize: 0 has no finite factorization");
    std::vector<PrimePower> out;
    Natural rest = x;
    while (!rest.is_one()) {
        const Natural p = least_nontrivial_divisor(rest);
        Natural e = 0;
        while (divides(p, rest)) {
            rest /= p;
            e += 1;
        }
        out.push_back({p, e});
    }
    return Factorization(std::move(out));
}

Natural valuation(const Natural& p, const Natural& x) {
    require_prime(p, "valuation");
    if (x.is_zero()) throw DomainError("valuation: x must be positive");
    Natural n = 0;
    Natural rest = x;
    while (divides(p, rest)) {
        rest /= p;
        n += 1;
    }
    return n;
}

ValuationSplit split_valuation(const Natural& p, const Natural& m, const Natural& x0,
                               const Natural& x1) {
    require_prime(p, "split_valuation");
    const Natural product = x0 * x1;
    if (product.is_zero()) throw DomainError("split_valuation: x0*x1 must be positive");
    if (valuation(p, product) < m) {
        throw DomainError("split_valuation: " + p.to_string() + "^" + m.to_string() +
                          " does not divide " + product.to_string());
    }
    Natural n0 = std::min(m, valuation(p, x0));
    Natural n1 = m - n0;
    if (valuation(p, x1) < n1) throw std::logic_error("split_valuation: valuation bookkeeping broken");
    return {std::move(n0), std::move(n1)};
}

bool coprime(std::span<const Natural> values) { return gcd_of(values).is_one(); }

bool coprime(std::initializer_list<Natural> values) {
    return coprime(std::span<const Natural>(values.begin(), values.size()));
}

std::optional<Natural> common_prime_witness(std::span<const Natural> values) {
    const Natural g = gcd_of(values);
    if (g.is_one()) return std::nullopt;
    if (g.is_zero()) return Natural(2);  // every prime divides 0
    return least_prime_divisor(g);
}

std::optional<Natural> common_prime_witness(std::initializer_list<Natural> values) {
    return common_prime_witness(std::span<const Natural>(values.begin(), values.size()));
}

Side euclid_lemma_side(const Natural& p, const Natural& x1, const Natural& x2) {
    require_prime(p, "euclid_lemma_side");
    if (!divides(p, x1 * x2)) {
        throw DomainError("euclid_lemma_side: " + p.to_string() + " does not divide " +
                          (x1 * x2).to_string());
    }
    return divides(p, x1) ? Side::first : Side::second;
}

bool divides_via_valuations(const Natural& x, const Natural& y) {
    if (x.is_zero() || y.is_zero()) throw DomainError("divides_via_valuations: inputs must be positive");
    const Factorization fx = factorize(x);
    for (const auto& [p, e] : fx.factors()) {
        if (valuation(p, y) < e) return false;
    }
    return true;
}

}  // namespace descente
