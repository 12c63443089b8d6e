#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "descente/errors.hpp"

namespace descente {

/// Arbitrary-precision nonnegative integer.
///
/// Every arithmetic operation is exact. Subtraction that would leave the
/// naturals throws UnderflowError instead of wrapping, and division by zero
/// throws DomainError. Values are immutable from the outside and can be
/// shared freely between threads.
class Natural {
public:
    Natural() = default;

    template <std::unsigned_integral T>
    Natural(T v) : value_(static_cast<unsigned long>(v)) {
        static_assert(sizeof(T) <= sizeof(unsigned long));
    }

    template <std::signed_integral T>
    Natural(T v) : value_(static_cast<long>(v)) {
        static_assert(sizeof(T) <= sizeof(long));
        if (v < 0) throw UnderflowError("negative value is not a natural number");
    }

    /// Parses a decimal string of digits only (no sign, no whitespace).
    static Natural parse(std::string_view text);

    /// Adopts a GMP integer; throws UnderflowError when it is negative.
    static Natural from_mpz(mpz_class v);

    [[nodiscard]] const mpz_class& mpz() const noexcept { return value_; }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return value_ == 1; }
    [[nodiscard]] bool is_even() const noexcept { return mpz_even_p(value_.get_mpz_t()) != 0; }
    [[nodiscard]] bool is_odd() const noexcept { return !is_even(); }

    [[nodiscard]] std::string to_string() const { return value_.get_str(); }
    [[nodiscard]] std::optional<std::uint64_t> to_u64() const;
    [[nodiscard]] std::size_t bit_length() const noexcept;

    [[nodiscard]] Natural pow(unsigned long exponent) const;

    Natural& operator+=(const Natural& rhs);
    Natural& operator-=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);
    Natural& operator/=(const Natural& rhs);
    Natural& operator%=(const Natural& rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
    friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
    friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }

    friend bool operator==(const Natural& a, const Natural& b) noexcept {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    explicit Natural(mpz_class v) : value_(std::move(v)) {}

    mpz_class value_;
};

/// Quotient and remainder of floor division; divisor must be nonzero.
struct DivMod {
    Natural quotient;
    Natural remainder;
};
DivMod divmod(const Natural& dividend, const Natural& divisor);

/// |a - b| without leaving the naturals.
Natural abs_diff(const Natural& a, const Natural& b);

/// Largest r with r*r <= n.
Natural isqrt(const Natural& n);

/// The exact square root when n is a perfect square.
std::optional<Natural> exact_sqrt(const Natural& n);

inline bool is_square(const Natural& n) { return exact_sqrt(n).has_value(); }

inline Natural square(const Natural& n) { return n * n; }

namespace literals {
inline Natural operator""_n(const char* digits) { return Natural::parse(digits); }
}  // namespace literals

}  // namespace descente

template <>
struct std::hash<descente::Natural> {
    std::size_t operator()(const descente::Natural& n) const noexcept;
};
