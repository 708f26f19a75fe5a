#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stratavol/minimal.hpp"
#include "stratavol/partition.hpp"

namespace stratavol::flows {

// Computes the derivations d/dt_m on the one-zero polynomials a((k)) from
// genus-0 degeneration sums, independently of the solved table's own
// t-monomials:
//
//   d/dt2 a((k)) = sum over ordered tuples (k_1..k_r), r >= 0, k_i >= 1,
//                  with k_1+..+k_r = k-r-1, of prod k_i^2 a((k_i));
//                  the r=0 term contributes 1 exactly when k = 1.
//   d/dtm a((k)) = sum over (k_0, k_1..k_r) with k_0+..+k_r = k-r-1 of
//                  k_0 (d/dt_{m-1} a((k_0))) prod k_i^2 a((k_i)), m >= 3,
//
// the inner derivative expanded recursively down to t2. Grouping the tuples
// by their first element turns both sums into a linear recurrence on
//   T(N) = sum over ordered tuples with sum (k_i + 1) = N of prod k_i^2 a((k_i)),
// so d/dt2 a((k)) = T(k-1) and the m >= 3 sum is
// sum_{k0} k_0 (d/dt_{m-1} a((k_0))) T(k-1-k_0).
//
// Holds a read-only reference to the table; the caller keeps it alive.
class FlowContext {
public:
    explicit FlowContext(const minimal::MinimalTable& table,
                         int max_k = -1, int weight_cap = -1);

    const minimal::MinimalTable& table() const { return table_; }
    int max_k() const { return max_k_; }
    int weight_cap() const { return weight_cap_; }

    // d/dt2 a((k)); the result is determined to t-weight weight_cap - 2 and
    // carries that cap.
    TPoly t2_flow(int k);
    // d/dtm a((k)) for m >= 3; result cap weight_cap - m.
    TPoly tm_flow(int k, int m);

private:
    const TPoly& value(int k) const; // a((k)) at full cap
    const TPoly& tail(int n);        // T(n), memoized
    const TPoly& flow_full(int k, int m); // memoized, at full cap

    const minimal::MinimalTable& table_;
    int max_k_;
    int weight_cap_;
    std::map<int, TPoly> tails_;
    std::map<std::pair<int, int>, TPoly> memo_;
};

struct FlowMismatch {
    int k;
    int m;
    Partition profile;
    Rational expected; // formal derivative of the table entry
    Rational got;      // flow recursion value
};

struct FlowReport {
    bool ok = true;
    std::vector<FlowMismatch> mismatches;
};

// Compares, coefficient by coefficient, the flow value of d/dt_m a((k))
// against the formal derivative of the table entry, for every 1 <= k <= K
// and 2 <= m <= W. Empty mismatch list iff the two routes agree.
FlowReport verify_flows(FlowContext& ctx);

// {"status": "ok"|"mismatch", "mismatches": [{k, m, profile, expected, got}]}
std::string to_json(const FlowReport& report);

} // namespace stratavol::flows
