#pragma once

#include <string>
#include <vector>

// Randomized and exhaustive property families shared between the property
// test binary and the acceptance gate. Randomized families draw from a fixed
// seed so failures reproduce; exhaustive families sweep a stated grid.
namespace stratavol::props {

struct PropertyResult {
    std::string name;
    int cases = 0;
    bool exhaustive = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Commutative-ring axioms for both coefficient rings on random polynomials.
PropertyResult ring_axioms(unsigned seed, int cases);

// s * reciprocal(s) is the unit series, on random series with unit constant.
PropertyResult reciprocal_round_trip(unsigned seed, int cases);

// The multi-zero generating polynomial does not depend on the order in which
// the zero orders are assigned to series variables. Exhaustive over all
// profiles of weight <= 10 with at least two zeros.
PropertyResult mu_symmetry();

// Every stored coefficient sits in an admissible stratum (2g even, >= 0) and
// carries the sign (-1)^g; inadmissible coefficients are exactly zero.
// Exhaustive over the table and profile grid.
PropertyResult parity_and_sign();

// The h -> t substitution is a ring morphism: ev(pq) = ev(p) ev(q).
PropertyResult ev_multiplicative(unsigned seed, int cases);

// Serialized tables survive a parse round trip and repeated serialization is
// byte-identical, including across independently solved tables.
PropertyResult cache_round_trip(unsigned seed, int cases);

std::vector<PropertyResult> run_all_properties();

} // namespace stratavol::props
