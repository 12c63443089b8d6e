#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "descente/descent.hpp"
#include "descente/diophantine.hpp"

// The area of a Pythagorean triangle is never a square:
// no x0, x1 >= 1 with x0^2 + x1^2 = x2^2 and x0*x1 = 2*x3^2.
//
// Every step of the descent is ordinary, guarded code. The guards of claim_i,
// claim_ii, descend_claim_ii and walsh_claim_iii can never be met (that is the
// theorem), so they are exercised through their guards, their satisfiable
// pieces and the vacuity certificates below.

namespace descente {

/// Any quadruple; predicates decide what it is.
struct CandidateSolution {
    Natural x0;
    Natural x1;
    Natural x2;
    Natural x3;

    [[nodiscard]] Natural encode() const;
    static CandidateSolution decode(const Natural& z);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CandidateSolution&, const CandidateSolution&) = default;
    friend auto operator<=>(const CandidateSolution&, const CandidateSolution&) = default;
};

/// Both equations hold: x0^2 + x1^2 = x2^2 and x0*x1 = 2*x3^2.
bool solves_equations(const CandidateSolution& c);

/// x0, x1 >= 1 and both equations hold.
bool is_counterexample(const CandidateSolution& c);

/// The solutions with all components <= 1 once zeros are admitted:
/// (0,0,0,0), (0,1,1,0), (1,0,1,0).
std::vector<CandidateSolution> degenerate_solutions();

/// (x0/z, x1/z, x2/z) for a prime z dividing both legs.
PythTriple reduce_triple_by_prime(const PythTriple& t, const Natural& z);

/// x3 / z for a prime z dividing x3.
Natural reduce_area_witness(const Natural& x3, const Natural& z);

struct ClaimIData {
    Natural p;
    Natural q;
    Natural c;
    Natural e;
    Natural f;

    friend bool operator==(const ClaimIData&, const ClaimIData&) = default;
};

struct ClaimIIData {
    Natural e;
    Natural f;
    Natural g;
    Natural h;

    friend bool operator==(const ClaimIIData&, const ClaimIIData&) = default;
};

/// Claim II data without the ordering e > f; produced by walsh_claim_iii.
struct WeakClaimIIData {
    Natural e;
    Natural f;
    Natural g;
    Natural h;

    friend bool operator==(const WeakClaimIIData&, const WeakClaimIIData&) = default;
};

/// The first broken invariant, or nothing.
std::optional<std::string> violation(const ClaimIData& d);
std::optional<std::string> violation(const ClaimIIData& d);

/// Counterexample with coprime legs -> p = e^2, q = f^2, p^2 - q^2 = c^2.
ClaimIData claim_i(const CandidateSolution& c);

/// (g, h) with p + q = g^2 and p - q = h^2, so e^2 + f^2 = g^2, e^2 - f^2 = h^2.
ClaimIIData claim_ii(const ClaimIData& d);

/// The smaller counterexample (2m^2, k^2, e, m*k) from h^2 + 2f^2 = g^2.
CandidateSolution descend_claim_ii(const ClaimIIData& d);

/// e = x2, f = 2*x3, g = x0 + x1, h = |x0 - x1|, with e^2 +- f^2 = (x0 +- x1)^2.
WeakClaimIIData walsh_claim_iii(const CandidateSolution& c);

/// (m, k) with (2m^2)^2 + (k^2)^2 = p = e^2, from the triple (q, c, p).
DoubleSquareForm frenicle_descend(const ClaimIData& d);

/// Outcome of an exhaustive scan for inputs that satisfy an operation's guard.
struct VacuityCertificate {
    std::string what;
    Natural bound;
    std::uint64_t checked = 0;
    std::uint64_t found = 0;

    friend bool operator==(const VacuityCertificate&, const VacuityCertificate&) = default;
};

/// Inputs of claim_i (and walsh_claim_iii) among triples with x2 <= bound.
VacuityCertificate claim_i_vacuity(const Natural& bound_x2);
/// Full ClaimIData with e <= bound.
VacuityCertificate claim_i_data_vacuity(const Natural& bound_e);
/// Full ClaimIIData with e <= bound.
VacuityCertificate claim_ii_data_vacuity(const Natural& bound_e);

enum class WeightMode { modern, walsh };

std::string to_string(WeightMode m);
std::optional<WeightMode> weight_mode_from_string(std::string_view s);

/// x2^2 + (2*x3)^2 + 1.
Natural walsh_p0_weight(const CandidateSolution& c);
/// e^2 + f^2.
Natural walsh_p1_weight(const Natural& e, const Natural& f);

/// The state walsh_claim_iii would produce, without its guard, encoded as (e, f, g, h).
Natural walsh_pseudo_state(const CandidateSolution& c);

/// Encoded quadruples covered at bound N: every triple with x2 <= N in both
/// orientations with x3 = isqrt(x0*x1/2), and (e, f, isqrt(e^2+f^2), isqrt(e^2-f^2))
/// for 0 < f < e <= N.
Domain candidate_domain();

/// Theorem 1 as an (ID) instance over encoded quadruples. Weight x2 (modern)
/// or x2^2 + (2*x3)^2 + 1 (walsh). The step divides out a common prime of the
/// legs, otherwise runs claim_i, claim_ii and descend_claim_ii.
DescentInstance fermat_instance(WeightMode mode = WeightMode::modern);

/// P_0 = "not a counterexample" with weight x2^2 + (2*x3)^2 + 1 and
/// P_1 = "not Claim II data" with weight e^2 + f^2, over encoded 4-tuples.
/// step_0 reduces to coprime legs and applies walsh_claim_iii; step_1 descends
/// and rebuilds Claim II data through claim_i and claim_ii.
IndexedDescentFamily walsh_family();

}  // namespace descente
