#include "descente/natural.hpp"

#include <limits>
#include <ostream>

namespace descente {

Natural Natural::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty string is not a natural number");
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
        }
    }
    return Natural(mpz_class(std::string(text), 10));
}

Natural Natural::from_mpz(mpz_class v) {
    if (sgn(v) < 0) throw UnderflowError("negative value is not a natural number");
    return Natural(std::move(v));
}

std::optional<std::uint64_t> Natural::to_u64() const {
    if (mpz_sizeinbase(value_.get_mpz_t(), 2) > 64) return std::nullopt;
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return static_cast<std::uint64_t>(mpz_get_ui(value_.get_mpz_t()));
}

std::size_t Natural::bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural Natural::pow(unsigned long exponent) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
    return Natural(std::move(r));
}

Natural& Natural::operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (cmp(value_, rhs.value_) < 0) {
        throw UnderflowError("natural subtraction underflow: " + to_string() + " - " +
                             rhs.to_string());
    }
    value_ -= rhs.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_.get_str(); }

DivMod divmod(const Natural& dividend, const Natural& divisor) {
    if (divisor.is_zero()) throw DomainError("division by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), dividend.mpz().get_mpz_t(),
                divisor.mpz().get_mpz_t());
    return {Natural::from_mpz(std::move(q)), Natural::from_mpz(std::move(r))};
}

Natural abs_diff(const Natural& a, const Natural& b) { return a < b ? b - a : a - b; }

Natural isqrt(const Natural& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.mpz().get_mpz_t());
    return Natural::from_mpz(std::move(r));
}

std::optional<Natural> exact_sqrt(const Natural& n) {
    mpz_class r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.mpz().get_mpz_t());
    if (sgn(rem) != 0) return std::nullopt;
    return Natural::from_mpz(std::move(r));
}

}  // namespace descente

std::size_t std::hash<descente::Natural>::operator()(const descente::Natural& n) const noexcept {
    const mpz_srcptr z = n.mpz().get_mpz_t();
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < z->_mp_size; ++i) {
        h ^= static_cast<std::size_t>(z->_mp_d[i]);
        h *= 0x100000001b3ULL;
    }
    return h;
}
