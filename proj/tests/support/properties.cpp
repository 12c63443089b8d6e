#include "properties.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "descente/arith.hpp"
#include "descente/proportions.hpp"
#include "oracles.hpp"

namespace props {
namespace {

using descente::Natural;
using u64 = std::uint64_t;

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++r_.cases;
        if (!ok && r_.ok) {
            r_.ok = false;
            r_.detail = describe();
        }
    }

    Result done() { return std::move(r_); }

private:
    Result r_;
};

// Naturals 0..n, built once.
const std::vector<Natural>& nat(u64 n) {
    static std::vector<Natural> v;
    while (v.size() <= n) v.emplace_back(static_cast<u64>(v.size()));
    return v;
}

std::string args(std::initializer_list<u64> xs) {
    std::string s = "(";
    bool first = true;
    for (u64 x : xs) {
        if (!first) s += ", ";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

bool cube(u64 n) {
    u64 r = 0;
    while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r * r * r == n;
}

// coprime table over 0..n through the library.
std::vector<std::vector<bool>> coprime_table(u64 n) {
    const auto& N = nat(n);
    std::vector<std::vector<bool>> t(n + 1, std::vector<bool>(n + 1));
    for (u64 a = 0; a <= n; ++a)
        for (u64 b = 0; b <= n; ++b) t[a][b] = descente::coprime({N[a], N[b]});
    return t;
}

}  // namespace

Result divides_is_order() {
    Tally t("divides is an order with minimum 1 and maximum 0 (x, y <= 200)");
    const u64 B = 200;
    const auto& N = nat(B);
    for (u64 x = 0; x <= B; ++x) {
        t.check(descente::divides(N[x], N[x]), [&] { return "not reflexive at " + args({x}); });
        t.check(descente::divides(N[1], N[x]), [&] { return "1 does not divide " + args({x}); });
        t.check(descente::divides(N[x], N[0]), [&] { return args({x}) + " does not divide 0"; });
        for (u64 y = 0; y <= B; ++y) {
            const bool xy = descente::divides(N[x], N[y]);
            const bool expected = x == 0 ? y == 0 : y % x == 0;
            t.check(xy == expected, [&] { return "disagrees with division at " + args({x, y}); });
            if (!xy) continue;
            t.check(!descente::divides(N[y], N[x]) || x == y,
                    [&] { return "not antisymmetric at " + args({x, y}); });
            for (u64 z = 0; z <= B; ++z) {
                if (!descente::divides(N[y], N[z])) continue;
                t.check(descente::divides(N[x], N[z]), [&] { return "not transitive at " + args({x, y, z}); });
            }
        }
    }
    return t.done();
}

Result sum_keeps_divisibility() {
    Tally t("x | y0 implies (x | y1 iff x | y0 + y1) (<= 200)");
    const u64 B = 200;
    const auto& N = nat(2 * B);
    for (u64 x = 0; x <= B; ++x)
        for (u64 y0 = 0; y0 <= B; ++y0) {
            if (!descente::divides(N[x], N[y0])) continue;
            for (u64 y1 = 0; y1 <= B; ++y1) {
                t.check(descente::divides(N[x], N[y1]) == descente::divides(N[x], N[y0 + y1]),
                        [&] { return args({x, y0, y1}); });
            }
        }
    return t.done();
}

Result product_cancellation() {
    Tally t("(x = 0 or y | z) iff xy | xz (<= 100)");
    const u64 B = 100;
    const auto& N = nat(B);
    for (u64 x = 0; x <= B; ++x)
        for (u64 y = 0; y <= B; ++y)
            for (u64 z = 0; z <= B; ++z) {
                const bool lhs = x == 0 || descente::divides(N[y], N[z]);
                t.check(lhs == descente::divides(N[x] * N[y], N[x] * N[z]), [&] { return args({x, y, z}); });
            }
    return t.done();
}

Result coprime_order_strict() {
    Tally t("coprime p >= q means p > q or p = q = 1 (<= 200)");
    const u64 B = 200;
    const auto& N = nat(B);
    for (u64 p = 0; p <= B; ++p)
        for (u64 q = 0; q <= p; ++q) {
            if (!descente::coprime({N[p], N[q]})) continue;
            t.check(p > q || (p == 1 && q == 1), [&] { return args({p, q}); });
        }
    return t.done();
}

Result coprime_to_divisor() {
    Tally t("coprime y, z and x | y give coprime x, z (<= 150)");
    const u64 B = 150;
    const auto& N = nat(B);
    const auto cp = coprime_table(B);
    for (u64 y = 0; y <= B; ++y)
        for (u64 z = 0; z <= B; ++z) {
            if (!cp[y][z]) continue;
            for (u64 x = 0; x <= B; ++x) {
                if (!descente::divides(N[x], N[y])) continue;
                t.check(cp[x][z], [&] { return args({x, y, z}); });
            }
        }
    return t.done();
}

Result coprime_products() {
    Tally t("a, c and b, c coprime give ab, c coprime (< 100)");
    const u64 B = 99;
    const auto& N = nat(B);
    const auto cp = coprime_table(B);
    for (u64 a = 0; a <= B; ++a)
        for (u64 b = 0; b <= B; ++b)
            for (u64 c = 0; c <= B; ++c) {
                if (!cp[a][c] || !cp[b][c]) continue;
                t.check(descente::coprime({N[a] * N[b], N[c]}), [&] { return args({a, b, c}); });
            }
    return t.done();
}

Result coprime_product_pairs() {
    Tally t("a, b each coprime to c, d give ab, cd coprime (a, b < 100; c, d < 20)");
    const u64 B = 99;
    const u64 C = 19;
    const auto& N = nat(B);
    const auto cp = coprime_table(B);
    for (u64 a = 0; a <= B; ++a)
        for (u64 b = 0; b <= B; ++b)
            for (u64 c = 0; c <= C; ++c)
                for (u64 d = 0; d <= C; ++d) {
                    if (!cp[a][c] || !cp[a][d] || !cp[b][c] || !cp[b][d]) continue;
                    t.check(descente::coprime({N[a] * N[b], N[c] * N[d]}), [&] { return args({a, b, c, d}); });
                }
    return t.done();
}

Result coprime_powers() {
    Tally t("coprime a, b give coprime a^i, b^j (< 100, i, j <= 4)");
    const u64 B = 99;
    const auto& N = nat(B);
    const auto cp = coprime_table(B);
    for (u64 a = 0; a <= B; ++a)
        for (u64 b = 0; b <= B; ++b) {
            if (!cp[a][b]) continue;
            for (unsigned long i = 1; i <= 4; ++i)
                for (unsigned long j = 1; j <= 4; ++j) {
                    t.check(descente::coprime({N[a].pow(i), N[b].pow(j)}), [&] { return args({a, b, i, j}); });
                }
        }
    return t.done();
}

Result prime_coprime_unless_divides() {
    Tally t("a prime not dividing x is coprime to x (p <= 100, x <= 200)");
    const auto& N = nat(200);
    for (u64 p = 2; p <= 100; ++p) {
        if (!oracle::prime(p)) continue;
        t.check(descente::is_prime(N[p]), [&] { return "is_prime rejects " + args({p}); });
        for (u64 x = 0; x <= 200; ++x) {
            if (descente::divides(N[p], N[x])) continue;
            t.check(descente::coprime({N[p], N[x]}), [&] { return args({p, x}); });
        }
    }
    return t.done();
}

Result euclid_lemma() {
    Tally t("prime dividing a product divides the reported factor (p, x1, x2 <= 100)");
    const auto& N = nat(100);
    for (u64 p = 2; p <= 100; ++p) {
        if (!oracle::prime(p)) continue;
        for (u64 a = 0; a <= 100; ++a)
            for (u64 b = 0; b <= 100; ++b) {
                if ((a * b) % p) continue;
                const auto side = descente::euclid_lemma_side(N[p], N[a], N[b]);
                const bool expect_first = a % p == 0;
                t.check(side == (expect_first ? descente::Side::first : descente::Side::second),
                        [&] { return args({p, a, b}); });
            }
    }
    return t.done();
}

Result least_prime_divisor_walk() {
    Tally t("divisor walk reaches the least prime divisor (2 <= x <= 10^4)");
    const auto& N = nat(10000);
    for (u64 x = 2; x <= 10000; ++x) {
        const Natural p = descente::least_prime_divisor(N[x]);
        t.check(p == Natural(oracle::least_prime_factor(x)), [&] { return args({x}); });
        if (auto next = descente::vii31_step(N[x])) {
            t.check(*next < N[x] && *next > 1 && descente::divides(*next, N[x]),
                    [&] { return "step is not a proper divisor at " + args({x}); });
        }
    }
    return t.done();
}

Result lowest_terms_minimal() {
    Tally t("lowest terms are coprime and divide every equal ratio (1..60)");
    const auto& N = nat(60);
    for (u64 x0 = 1; x0 <= 60; ++x0)
        for (u64 x1 = 1; x1 <= 60; ++x1) {
            const auto lt = descente::lowest_terms(N[x0], N[x1]);
            t.check(descente::coprime({lt.y0, lt.y1}) && lt.k * lt.y0 == N[x0] && lt.k * lt.y1 == N[x1],
                    [&] { return args({x0, x1}); });
            for (u64 y = 1; y <= x0; ++y) {
                if ((y * x1) % x0) continue;  // no y1 with x0*y1 = y*x1
                t.check(descente::divides(lt.y0, N[y]), [&] { return "not minimal at " + args({x0, x1, y}); });
            }
        }
    return t.done();
}

Result divides_iff_squares_divide() {
    Tally t("x | y iff x^2 | y^2 (<= 200)");
    const auto& N = nat(200);
    for (u64 x = 0; x <= 200; ++x)
        for (u64 y = 0; y <= 200; ++y) {
            t.check(descente::divides(N[x], N[y]) == descente::divides(descente::square(N[x]), descente::square(N[y])),
                    [&] { return args({x, y}); });
        }
    return t.done();
}

Result valuation_criterion() {
    Tally t("divisibility through valuations agrees with divides (1..500)");
    const auto& N = nat(500);
    for (u64 x = 1; x <= 500; ++x)
        for (u64 y = 1; y <= 500; ++y) {
            t.check(descente::divides_via_valuations(N[x], N[y]) == (y % x == 0), [&] { return args({x, y}); });
        }
    return t.done();
}

Result split_valuation_post() {
    Tally t("split_valuation postconditions (p in {2, 3, 5}, 1..100)");
    const auto& N = nat(100);
    for (u64 p : {2, 3, 5}) {
        for (u64 x0 = 1; x0 <= 100; ++x0)
            for (u64 x1 = 1; x1 <= 100; ++x1) {
                u64 top = 0;
                for (u64 v = x0 * x1; v % p == 0; v /= p) ++top;
                for (u64 m = 0; m <= top; ++m) {
                    const auto s = descente::split_valuation(N[p], N[m], N[x0], N[x1]);
                    const bool ok = s.n0 + s.n1 == N[m] &&
                                    descente::divides(N[p].pow(*s.n0.to_u64()), N[x0]) &&
                                    descente::divides(N[p].pow(*s.n1.to_u64()), N[x1]) &&
                                    s.n0 == std::min(N[m], descente::valuation(N[p], N[x0]));
                    t.check(ok, [&] { return args({p, m, x0, x1}); });
                }
            }
    }
    return t.done();
}

Result scale_between_recovers_factor() {
    Tally t("scale_between recovers k from k-scaled proportions (y, z <= 12, k <= 10)");
    for (u64 y = 1; y <= 12; ++y)
        for (u64 z = 1; z <= 12; ++z) {
            if (std::gcd(y, z) != 1) continue;
            for (unsigned n = 0; n <= 3; ++n) {
                std::vector<Natural> base;
                for (unsigned i = 0; i <= n + 1; ++i) base.push_back(Natural(y).pow(n + 1 - i) * Natural(z).pow(i));
                for (u64 k = 1; k <= 10; ++k) {
                    std::vector<Natural> scaled;
                    for (const auto& b : base) scaled.push_back(k * b);
                    const auto got = descente::scale_between(descente::ContinuedProportion(base),
                                                             descente::ContinuedProportion(scaled));
                    t.check(got == Natural(k), [&] { return args({y, z, n, k}); });
                }
            }
        }
    return t.done();
}

Result powers_from_unit() {
    Tally t("proportions from the unit are powers (second term <= 20, length <= 8)");
    for (u64 t1 = 1; t1 <= 20; ++t1) {
        std::vector<u64> terms{1, t1};
        while (terms.size() < 8) {
            const u64 a = terms[terms.size() - 2];
            const u64 b = terms.back();
            t.check((b * b) % a == 0, [&] { return "non-integral extension at " + args({t1}); });
            terms.push_back(b * b / a);
        }
        for (std::size_t len = 2; len <= 8; ++len) {
            std::vector<Natural> xs;
            for (std::size_t i = 0; i < len; ++i) xs.emplace_back(terms[i]);
            const descente::ContinuedProportion cp(xs);
            for (std::size_t i = 0; i < len; ++i) {
                t.check(cp[i] == Natural(t1).pow(i), [&] { return args({t1, len, i}); });
            }
        }
        t.check(oracle::exact_root(terms[2]).has_value(), [&] { return "third not square " + args({t1}); });
        t.check(cube(terms[3]), [&] { return "fourth not cube " + args({t1}); });
        t.check(oracle::exact_root(terms[6]).has_value() && cube(terms[6]),
                [&] { return "seventh not square and cube " + args({t1}); });
    }
    return t.done();
}

Result normal_form_round_trip() {
    Tally t("normal_form recovers (k, y, z) and the terms (terms <= 10^4)");
    for (u64 y = 1; y <= 20; ++y)
        for (u64 z = 1; z <= 20; ++z) {
            if (std::gcd(y, z) != 1) continue;
            for (u64 k = 1; k <= 10; ++k)
                for (unsigned n = 0;; ++n) {
                    std::vector<Natural> xs;
                    bool small = true;
                    for (unsigned i = 0; i <= n + 1; ++i) {
                        Natural v = k * Natural(y).pow(n + 1 - i) * Natural(z).pow(i);
                        if (v > 10000) small = false;
                        xs.push_back(std::move(v));
                    }
                    if (!small) break;
                    const descente::ContinuedProportion cp(xs);
                    const auto nf = descente::normal_form(cp);
                    t.check(nf == descente::NormalForm{k, y, z, n} && nf.terms() == cp,
                            [&] { return args({y, z, k, n}); });
                    if (n > 12) break;
                }
        }
    return t.done();
}

Result square_split_round_trip() {
    Tally t("split_coprime_square(y^2, z^2, yz) = (y, z) (0..60)");
    const auto& N = nat(60);
    for (u64 y = 0; y <= 60; ++y)
        for (u64 z = 0; z <= 60; ++z) {
            if (std::gcd(y, z) != 1) continue;
            const auto s = descente::split_coprime_square(descente::square(N[y]), descente::square(N[z]), N[y] * N[z]);
            t.check(s.y == N[y] && s.z == N[z], [&] { return args({y, z}); });
        }
    return t.done();
}

Result sum_diff_common_divisor() {
    Tally t("x | a - b and x | a + b give x | 2a, x | 2b, and x <= 2 when coprime (b <= a <= 200)");
    const auto& N = nat(800);
    for (u64 a = 0; a <= 200; ++a)
        for (u64 b = 0; b <= a; ++b) {
            // Any common divisor is at most gcd(a - b, a + b); with a = b = 0 take x <= 400.
            const u64 top = a + b == 0 ? 400 : std::gcd(a - b, a + b);
            const bool cop = descente::coprime({N[a], N[b]});
            for (u64 x = 1; x <= top; ++x) {
                if (!descente::divides(N[x], N[a - b]) || !descente::divides(N[x], N[a + b])) continue;
                t.check(descente::divides(N[x], N[2 * a]) && descente::divides(N[x], N[2 * b]),
                        [&] { return args({a, b, x}); });
                if (cop) t.check(x <= 2, [&] { return "coprime case " + args({a, b, x}); });
            }
        }
    return t.done();
}

Result even_product_divisors() {
    Tally t("x | 2pq gives x | p^2 - q^2 iff x | p^2 + q^2 (q <= p <= 100)");
    for (u64 p = 0; p <= 100; ++p)
        for (u64 q = 0; q <= p; ++q) {
            const Natural P(p), Q(q);
            const Natural diff = descente::square(P) - descente::square(Q);
            const Natural sum = descente::square(P) + descente::square(Q);
            const u64 prod = 2 * p * q;
            std::vector<u64> xs;
            if (prod == 0) {
                for (u64 x = 1; x <= p * p + q * q + 1; ++x) xs.push_back(x);
            } else {
                for (u64 d = 1; d * d <= prod; ++d) {
                    if (prod % d) continue;
                    xs.push_back(d);
                    if (d * d != prod) xs.push_back(prod / d);
                }
            }
            for (u64 x : xs) {
                const Natural X(x);
                t.check(descente::divides(X, diff) == descente::divides(X, sum), [&] { return args({p, q, x}); });
            }
        }
    return t.done();
}

Result generator_products_coprime() {
    Tally t("coprime p >= q give pq coprime to p^2 - q^2 and p^2 + q^2 (<= 100)");
    for (u64 p = 0; p <= 100; ++p)
        for (u64 q = 0; q <= p; ++q) {
            const Natural P(p), Q(q);
            if (!descente::coprime({P, Q})) continue;
            const Natural pq = P * Q;
            t.check(descente::coprime({pq, descente::square(P) - descente::square(Q)}) &&
                        descente::coprime({pq, descente::square(P) + descente::square(Q)}),
                    [&] { return args({p, q}); });
        }
    return t.done();
}

std::vector<Result> elements_suite() {
    return {divides_is_order(),
            sum_keeps_divisibility(),
            product_cancellation(),
            coprime_order_strict(),
            coprime_to_divisor(),
            coprime_products(),
            coprime_product_pairs(),
            coprime_powers(),
            prime_coprime_unless_divides(),
            euclid_lemma(),
            least_prime_divisor_walk(),
            lowest_terms_minimal(),
            divides_iff_squares_divide(),
            valuation_criterion(),
            split_valuation_post(),
            scale_between_recovers_factor(),
            powers_from_unit(),
            normal_form_round_trip(),
            square_split_round_trip(),
            sum_diff_common_divisor(),
            even_product_divisors(),
            generator_products_coprime()};
}

}  // namespace props
