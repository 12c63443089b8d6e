#include "doctest.h"
#include "descente/proportions.hpp"

using namespace descente;

namespace {
ContinuedProportion cp(std::vector<Natural> v) { return ContinuedProportion(std::move(v)); }
}  // namespace

TEST_CASE("continued proportion validation") {
    CHECK(cp({4, 6, 9}).size() == 3);
    CHECK(cp({5, 7}).size() == 2);
    CHECK_THROWS_AS(cp({4}), DomainError);
    CHECK_THROWS_AS(cp({4, 6, 10}), DomainError);
    CHECK_THROWS_AS(cp({0, 0, 0}), DomainError);
}

TEST_CASE("lowest_terms") {
    CHECK(lowest_terms(12, 9) == LowestTerms{4, 3, 3});
    CHECK(lowest_terms(5, 7) == LowestTerms{5, 7, 1});
    CHECK(lowest_terms(100, 10) == LowestTerms{10, 1, 10});
    CHECK_THROWS_AS(lowest_terms(0, 3), DomainError);
}

TEST_CASE("scale_between") {
    CHECK(scale_between(cp({1, 2, 4}), cp({3, 6, 12})) == 3);
    CHECK(scale_between(cp({4, 6, 9}), cp({4, 6, 9})) == 1);
    // Ends 2 and 18 share a factor, so the coprime-ends precondition rejects this.
    CHECK_THROWS_AS(scale_between(cp({2, 6, 18}), cp({2, 6, 18})), DomainError);
    CHECK(scale_between(cp({1, 3, 9}), cp({2, 6, 18})) == 2);
    CHECK_THROWS_AS(scale_between(cp({1, 2, 4}), cp({1, 3, 9})), DomainError);
    CHECK_THROWS_AS(scale_between(cp({2, 4}), cp({4, 8})), DomainError);
    CHECK_THROWS_AS(scale_between(cp({1, 2}), cp({1, 2, 4})), DomainError);
}

TEST_CASE("normal_form") {
    CHECK(normal_form(cp({4, 6, 9})) == NormalForm{1, 2, 3, 1});
    CHECK(normal_form(cp({8, 12, 18})) == NormalForm{2, 2, 3, 1});
    CHECK(normal_form(cp({1, 5, 25})) == NormalForm{1, 1, 5, 1});
    CHECK(normal_form(cp({27, 18, 12, 8})) == NormalForm{1, 3, 2, 2});
    CHECK(NormalForm{3, 1, 2, 3}.terms() == cp({3, 6, 12, 24, 48}));
}

TEST_CASE("split_coprime_square") {
    CHECK(split_coprime_square(9, 16, 12) == SquareSplit{3, 4});
    CHECK(split_coprime_square(1, 0, 0) == SquareSplit{1, 0});
    CHECK(split_coprime_square(25, 4, 10) == SquareSplit{5, 2});
    CHECK_THROWS_AS(split_coprime_square(4, 4, 4), DomainError);
    CHECK_THROWS_AS(split_coprime_square(2, 3, 2), DomainError);
}

TEST_CASE("coprime_side_with_prime") {
    CHECK(coprime_side_with_prime(2, 3, 5) == Side::first);
    CHECK(coprime_side_with_prime(5, 3, 10) == Side::second);
    CHECK(coprime({3, 50}));
    CHECK(coprime_side_with_prime(2, 1, 1) == Side::first);
    CHECK_THROWS_AS(coprime_side_with_prime(4, 1, 1), DomainError);
    CHECK_THROWS_AS(coprime_side_with_prime(2, 6, 9), DomainError);
}

TEST_CASE("split_coprime_double_square") {
    CHECK(split_coprime_double_square(2, 2, 1, 2) == DoubleSquareSplit{1, 1, ScaledSide::a});
    CHECK(split_coprime_double_square(2, 1, 8, 4) == DoubleSquareSplit{2, 1, ScaledSide::b});
    CHECK(split_coprime_double_square(3, 3, 1, 3) == DoubleSquareSplit{1, 1, ScaledSide::a});
    CHECK_THROWS_AS(split_coprime_double_square(2, 2, 1, 3), DomainError);
    CHECK_THROWS_AS(split_coprime_double_square(2, 2, 2, 4), DomainError);
}

TEST_CASE("split_sum_diff_square") {
    CHECK(split_sum_diff_square(5, 4, 3) == SumDiffSplit{3, 1});
    CHECK(split_sum_diff_square(13, 12, 5) == SumDiffSplit{5, 1});
    CHECK(split_sum_diff_square(25, 24, 7) == SumDiffSplit{7, 1});
    CHECK_THROWS_AS(split_sum_diff_square(5, 3, 4), DomainError);
    CHECK_THROWS_AS(split_sum_diff_square(5, 0, 5), DomainError);
    CHECK_THROWS_AS(split_sum_diff_square(6, 5, 3), DomainError);
}
