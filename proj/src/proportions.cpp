#include "descente/proportions.hpp"

namespace descente {
namespace {

unsigned long small_exponent(const Natural& n) {
    auto v = n.to_u64();
    if (!v) throw DomainError("exponent too large: " + n.to_string());
    return *v;
}

}  // namespace

ContinuedProportion::ContinuedProportion(std::vector<Natural> terms) : terms_(std::move(terms)) {
    if (terms_.size() < 2) throw DomainError("continued proportion needs at least two terms");
    for (const Natural& t : terms_) {
        if (t.is_zero()) throw DomainError("continued proportion terms must be positive");
    }
    for (std::size_t i = 1; i + 1 < terms_.size(); ++i) {
        if (terms_[i - 1] * terms_[i + 1] != square(terms_[i])) {
            throw DomainError("not in continued proportion at term " + std::to_string(i));
        }
    }
}

ContinuedProportion NormalForm::terms() const {
    const unsigned long last = small_exponent(n) + 1;
    std::vector<Natural> out;
    out.reserve(last + 1);
    for (unsigned long i = 0; i <= last; ++i) {
        out.push_back(k * y.pow(last - i) * z.pow(i));
    }
    return ContinuedProportion(std::move(out));
}

LowestTerms lowest_terms(const Natural& x0, const Natural& x1) {
    if (x0.is_zero() || x1.is_zero()) throw DomainError("lowest_terms: inputs must be positive");
    Natural k = gcd(x0, x1);
    return {x0 / k, x1 / k, std::move(k)};
}

Natural scale_between(const ContinuedProportion& xs, const ContinuedProportion& ys) {
    if (xs.size() != ys.size()) throw DomainError("scale_between: lengths differ");
    if (xs[0] * ys[1] != ys[0] * xs[1]) throw DomainError("scale_between: x0*y1 != y0*x1");
    if (!coprime({xs.front(), xs.back()})) throw DomainError("scale_between: ends of xs not coprime");
    const auto [k, r] = divmod(ys[0], xs[0]);
    if (!r.is_zero()) throw DomainError("scale_between: no integral scale");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (k * xs[i] != ys[i]) throw DomainError("scale_between: no integral scale");
    }
    return k;
}

NormalForm normal_form(const ContinuedProportion& xs) {
    const Natural n = Natural(xs.size() - 2);
    auto [y, z, unused] = lowest_terms(xs[0], xs[1]);
    const Natural head = y.pow(xs.size() - 1);
    const auto [k, r] = divmod(xs[0], head);
    if (!r.is_zero()) throw std::logic_error("normal_form: first term not a multiple of y^(n+1)");
    NormalForm nf{k, std::move(y), std::move(z), n};
    if (nf.terms() != xs) throw std::logic_error("normal_form: reconstruction mismatch");
    return nf;
}

SquareSplit split_coprime_square(const Natural& a, const Natural& b, const Natural& x) {
    if (!coprime({a, b})) throw DomainError("split_coprime_square: a, b not coprime");
    if (a * b != square(x)) throw DomainError("split_coprime_square: a*b != x^2");
    // One of a, b is 0: the other divides both, so it is 1, and x = 0.
    if (a.is_zero() || b.is_zero()) return {a, b};
    const NormalForm nf = normal_form(ContinuedProportion({a, x, b}));
    if (!nf.k.is_one()) throw std::logic_error("split_coprime_square: coprime ends gave k != 1");
    return {nf.y, nf.z};
}

Side coprime_side_with_prime(const Natural& p, const Natural& a, const Natural& b) {
    if (!is_prime(p)) throw DomainError("coprime_side_with_prime: " + p.to_string() + " is not prime");
    if (!coprime({a, b})) throw DomainError("coprime_side_with_prime: a, b not coprime");
    return coprime({p * a, b}) ? Side::first : Side::second;
}

DoubleSquareSplit split_coprime_double_square(const Natural& p, const Natural& a,
                                              const Natural& b, const Natural& v) {
    if (!is_prime(p)) throw DomainError("split_coprime_double_square: " + p.to_string() + " is not prime");
    if (!coprime({a, b})) throw DomainError("split_coprime_double_square: a, b not coprime");
    if (p * a * b != square(v)) throw DomainError("split_coprime_double_square: p*a*b != v^2");

    if (coprime_side_with_prime(p, a, b) == Side::first) {
        const auto [l, k] = split_coprime_square(p * a, b, v);
        const auto [m, r] = divmod(l, p);
        if (!r.is_zero()) throw std::logic_error("split_coprime_double_square: p does not divide l");
        return {m, k, ScaledSide::a};
    }
    const auto [k, l] = split_coprime_square(a, p * b, v);
    const auto [m, r] = divmod(l, p);
    if (!r.is_zero()) throw std::logic_error("split_coprime_double_square: p does not divide l");
    return {m, k, ScaledSide::b};
}

SumDiffSplit split_sum_diff_square(const Natural& p, const Natural& q, const Natural& c) {
    if (!coprime({p, q})) throw DomainError("split_sum_diff_square: p, q not coprime");
    if (p.is_even() == q.is_even()) throw DomainError("split_sum_diff_square: p, q must have opposite parity");
    if (q.is_zero() || !(q < p)) throw DomainError("split_sum_diff_square: need p > q >= 1");
    if (square(p) - square(q) != square(c)) throw DomainError("split_sum_diff_square: p^2 - q^2 != c^2");
    const Natural sum = p + q;
    const Natural diff = p - q;
    // Any common divisor divides 2p and 2q, hence is at most 2; the sum is odd.
    if (!coprime({sum, diff})) throw std::logic_error("split_sum_diff_square: p+q, p-q not coprime");
    const auto [g, h] = split_coprime_square(sum, diff, c);
    return {g, h};
}

}  // namespace descente
