#include <algorithm>
#include <set>

#include "doctest.h"
#include "descente/fermat.hpp"
#include "../support/oracles.hpp"

using namespace descente;

TEST_CASE("candidate encoding round trips") {
    const CandidateSolution c{3, 4, 5, Natural(2).pow(90)};
    CHECK(CandidateSolution::decode(c.encode()) == c);
    CHECK(c.to_string() == "(3, 4, 5, " + Natural(2).pow(90).to_string() + ")");
}

TEST_CASE("is_counterexample") {
    for (std::uint64_t x3 = 0; x3 <= 20; ++x3) REQUIRE_FALSE(is_counterexample({3, 4, 5, x3}));
    CHECK_FALSE(is_counterexample({0, 1, 1, 0}));
    CHECK(solves_equations({0, 1, 1, 0}));
    CHECK_FALSE(is_counterexample({1, 1, 2, 1}));
    CHECK_FALSE(solves_equations({1, 1, 2, 1}));
}

TEST_CASE("degenerate solutions with components at most one") {
    const auto d = degenerate_solutions();
    const std::set<CandidateSolution> got(d.begin(), d.end());
    const std::set<CandidateSolution> want{{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}};
    CHECK(d.size() == 3);
    CHECK(got == want);
}

TEST_CASE("zero-admitting solutions grow with the bound") {
    // (0, n, n, 0) and (n, 0, n, 0) solve both equations for every n, so the
    // set is not the three quadruples above once n reaches 2.
    const auto brute = oracle::all_solutions_with_zeros(10);
    CHECK(brute.size() == 21);
    for (std::uint64_t n = 0; n <= 10; ++n) {
        CHECK(std::find(brute.begin(), brute.end(), oracle::Quad{0, n, n, 0}) != brute.end());
        CHECK(std::find(brute.begin(), brute.end(), oracle::Quad{n, 0, n, 0}) != brute.end());
    }
}

TEST_CASE("reduce_triple_by_prime") {
    CHECK(reduce_triple_by_prime(PythTriple(6, 8, 10), 2) == PythTriple(3, 4, 5));
    CHECK(reduce_triple_by_prime(PythTriple(9, 12, 15), 3) == PythTriple(3, 4, 5));
    CHECK(reduce_triple_by_prime(PythTriple(0, 0, 0), 2) == PythTriple(0, 0, 0));
    CHECK_THROWS_AS(reduce_triple_by_prime(PythTriple(6, 8, 10), 4), DomainError);
    CHECK_THROWS_AS(reduce_triple_by_prime(PythTriple(6, 8, 10), 3), DomainError);
}

TEST_CASE("reduce_triple_by_prime preserves triples") {
    std::uint64_t reduced = 0;
    for (const auto& row : enumerate_triples(300)) {
        const auto& t = row.triple;
        for (std::uint64_t z = 2; z <= 300; ++z) {
            if (!oracle::prime(z) || !divides(z, t.x0()) || !divides(z, t.x1())) continue;
            const PythTriple r = reduce_triple_by_prime(t, z);
            REQUIRE(r.x0() * z == t.x0());
            REQUIRE(r.x2() * z == t.x2());
            REQUIRE(PythTriple::satisfies(r.x0(), r.x1(), r.x2()));
            ++reduced;
        }
    }
    CHECK(reduced > 0);
}

TEST_CASE("reduce_area_witness") {
    CHECK(reduce_area_witness(6, 2) == 3);
    CHECK(reduce_area_witness(15, 3) == 5);
    CHECK_THROWS_AS(reduce_area_witness(7, 2), DomainError);
    CHECK_THROWS_AS(reduce_area_witness(8, 4), DomainError);
}

TEST_CASE("claim guards") {
    CHECK_THROWS_AS(claim_i({3, 4, 6, 0}), DomainError);
    CHECK_THROWS_AS(claim_i({3, 4, 5, 1}), DomainError);
    CHECK_THROWS_AS(claim_ii(ClaimIData{25, 16, 3, 5, 5}), DomainError);
    CHECK(violation(ClaimIData{25, 16, 3, 5, 5}).has_value());
    CHECK_THROWS_AS(descend_claim_ii(ClaimIIData{5, 0, 5, 5}), DomainError);
    CHECK_THROWS_AS(walsh_claim_iii({3, 4, 5, 1}), DomainError);
    CHECK_THROWS_AS(frenicle_descend(ClaimIData{25, 16, 4, 5, 4}), DomainError);
}

TEST_CASE("satisfiable fragments") {
    CHECK(split_sum_diff_square(5, 4, 3) == SumDiffSplit{3, 1});
    CHECK(frenicle_xxxviii(PythTriple(4, 3, 5), 2) == DoubleSquareForm{1, 1});
}

TEST_CASE("vacuity certificates") {
    const auto c1 = claim_i_vacuity(2000);
    CHECK(c1.found == 0);
    CHECK(c1.checked > 0);
    CHECK(claim_i_vacuity(500).checked == oracle::primitive_triples(500).size());

    const auto c2 = claim_i_data_vacuity(200);
    CHECK(c2.found == 0);
    CHECK(c2.checked == 199 * 200 / 2);

    const auto c3 = claim_ii_data_vacuity(500);
    CHECK(c3.found == 0);
    std::uint64_t independent = 0;
    for (std::uint64_t e = 2; e <= 500; ++e)
        for (std::uint64_t f = 1; f < e; ++f) {
            const auto g = oracle::exact_root(e * e + f * f);
            const auto h = oracle::exact_root(e * e - f * f);
            if (g && h && std::gcd(*g, *h) == 1) ++independent;
        }
    CHECK(independent == 0);
}

TEST_CASE("descent identity") {
    for (std::uint64_t m = 0; m <= 50; ++m)
        for (std::uint64_t k = 0; k <= 50; ++k) {
            const Natural a = 2 * square(m);
            const Natural b = square(k);
            REQUIRE(square(a + b) - square(2 * Natural(m) * k) == square(a) + square(b));
        }
    CHECK(square(Natural(22)) - square(Natural(12)) == 340);
}

TEST_CASE("sum and difference identity behind the third claim") {
    for (std::uint64_t x0 = 0; x0 <= 100; ++x0)
        for (std::uint64_t x1 = 0; x1 <= 100; ++x1) {
            const Natural a(x0), b(x1);
            REQUIRE(square(a + b) == square(a) + square(b) + 2 * a * b);
            if (x0 >= x1) REQUIRE(square(a - b) == square(a) + square(b) - 2 * a * b);
        }
    CHECK(square(Natural(7)) == 49);
}

TEST_CASE("walsh weights") {
    const auto fam = walsh_family();
    CHECK(fam.size() == 2);
    CHECK(fam.weight(1, pairing::encode({5, 4, 0, 0})) == 41);
    CHECK(walsh_p1_weight(5, 4) == 41);
    for (std::uint64_t x0 = 0; x0 <= 30; ++x0)
        for (std::uint64_t x1 = 0; x1 <= 30; ++x1)
            for (std::uint64_t x3 = 0; x3 <= 10; ++x3) {
                const CandidateSolution c{x0, x1, x1 + x0, x3};
                REQUIRE(fam.weight(0, c.encode()) == fam.weight(1, walsh_pseudo_state(c)) + 1);
            }
}

TEST_CASE("fermat instances pass their checks") {
    CHECK(check_id(fermat_instance(WeightMode::modern), 300).ok());
    CHECK(check_id(fermat_instance(WeightMode::walsh), 300).ok());
    CHECK(check_id_prime(walsh_family(), 300).ok());
    CHECK(*weight_mode_from_string("walsh") == WeightMode::walsh);
    CHECK_FALSE(weight_mode_from_string("other"));
}
