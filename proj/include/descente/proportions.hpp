#pragma once

#include <vector>

#include "descente/arith.hpp"

// Continued proportions (Elements Book VIII) and the coprime square-splitting
// lemmas that drive the descent on Pythagorean triangles.

namespace descente {

/// Positive terms x_0, ..., x_{n+1} (length >= 2) with x_{i-1} * x_{i+1} = x_i^2
/// for every interior i. Length 2 carries no interior constraint.
class ContinuedProportion {
public:
    explicit ContinuedProportion(std::vector<Natural> terms);

    [[nodiscard]] const std::vector<Natural>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] const Natural& operator[](std::size_t i) const { return terms_[i]; }
    [[nodiscard]] const Natural& front() const { return terms_.front(); }
    [[nodiscard]] const Natural& back() const { return terms_.back(); }

    friend bool operator==(const ContinuedProportion&, const ContinuedProportion&) = default;

private:
    std::vector<Natural> terms_;
};

/// Terms k * y^(n+1-i) * z^i with y, z coprime; `n + 2` terms in total.
struct NormalForm {
    Natural k;
    Natural y;
    Natural z;
    Natural n;

    [[nodiscard]] ContinuedProportion terms() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct LowestTerms {
    Natural y0;
    Natural y1;
    Natural k;

    friend bool operator==(const LowestTerms&, const LowestTerms&) = default;
};

/// The ratio x0 : x1 in lowest terms, with the common scale k.
LowestTerms lowest_terms(const Natural& x0, const Natural& x1);

/// k with k * xs[i] = ys[i] for all i, given x0*y1 = y0*x1 and coprime ends of xs.
Natural scale_between(const ContinuedProportion& xs, const ContinuedProportion& ys);

NormalForm normal_form(const ContinuedProportion& xs);

struct SquareSplit {
    Natural y;
    Natural z;

    friend bool operator==(const SquareSplit&, const SquareSplit&) = default;
};

/// For coprime a, b with a*b = x^2: coprime y, z with a = y^2, b = z^2, x = y*z.
SquareSplit split_coprime_square(const Natural& a, const Natural& b, const Natural& x);

/// For prime p and coprime a, b: Side::first if p*a, b are coprime, else
/// Side::second (then a, p*b are coprime).
Side coprime_side_with_prime(const Natural& p, const Natural& a, const Natural& b);

/// Which of a, b carries the factor p in {p*m^2, k^2} = {a, b}.
enum class ScaledSide { a, b };

struct DoubleSquareSplit {
    Natural m;
    Natural k;
    ScaledSide scaled;

    friend bool operator==(const DoubleSquareSplit&, const DoubleSquareSplit&) = default;
};

/// For prime p, coprime a, b with p*a*b = v^2: m, k >= 1 with p*m, k coprime
/// and {p*m^2, k^2} = {a, b}; `scaled` says which one equals p*m^2.
DoubleSquareSplit split_coprime_double_square(const Natural& p, const Natural& a,
                                              const Natural& b, const Natural& v);

struct SumDiffSplit {
    Natural g;
    Natural h;

    friend bool operator==(const SumDiffSplit&, const SumDiffSplit&) = default;
};

/// For coprime p > q >= 1 of opposite parity with p^2 - q^2 = c^2:
/// coprime g, h with p + q = g^2, p - q = h^2 and c = g*h.
SumDiffSplit split_sum_diff_square(const Natural& p, const Natural& q, const Natural& c);

}  // namespace descente
