#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
    std::string name;
    bool ok = true;
    std::uint64_t cases = 0;
    std::string detail;  // first counterexample
};

// Bounded invariant checks over the divisibility and proportion primitives.
Result divides_is_order();
Result sum_keeps_divisibility();
Result product_cancellation();
Result coprime_order_strict();
Result coprime_to_divisor();
Result coprime_products();
Result coprime_product_pairs();
Result coprime_powers();
Result prime_coprime_unless_divides();
Result euclid_lemma();
Result least_prime_divisor_walk();
Result lowest_terms_minimal();
Result divides_iff_squares_divide();
Result valuation_criterion();
Result split_valuation_post();
Result scale_between_recovers_factor();
Result powers_from_unit();
Result normal_form_round_trip();
Result square_split_round_trip();
Result sum_diff_common_divisor();
Result even_product_divisors();
Result generator_products_coprime();

std::vector<Result> elements_suite();

}  // namespace props
