#pragma once

#include <map>
#include <vector>

#include "stratavol/tpoly.hpp"

namespace stratavol::minimal {

// Coefficients of the reciprocal of sum_{j>=0} z^{2j} / (4^j (2j+1)!),
// indexed by the exponent 2g. Odd entries vanish; the first even entries are
// 1, -1/24, 7/5760, -31/967680.
class BSeed {
public:
    explicit BSeed(int max_2g);
    int max_2g() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& at(int two_g) const; // 0 <= two_g <= max_2g
private:
    std::vector<Rational> coeffs_;
};

BSeed b_numbers(int max_2g);

// Coefficient of z^{two_g} in exp(sum_{k>=2} t_k z^k) times the seed
// series: sum over partitions rho with parts >= 2 and |rho| <= two_g of
// seed(two_g - |rho|) / |Aut(rho)| times the rho-monomial, truncated to
// t-weight <= weight_cap.
TPoly b_poly(int two_g, int weight_cap);

// Solved one-zero table: k maps to the generating polynomial a((k)) whose
// rho-coefficient is a((k),rho)/|Aut(rho)|, truncated to t-weight <= W.
class MinimalTable {
public:
    MinimalTable(int max_k, int weight_cap, std::map<int, TPoly> values);
    int max_k() const { return max_k_; }
    int weight_cap() const { return weight_cap_; }
    const TPoly& at(int k) const; // 1 <= k <= max_k
    std::map<int, TPoly>& mutable_values() { return values_; } // fault injection in tests
private:
    int max_k_;
    int weight_cap_;
    std::map<int, TPoly> values_;
};

// Solves the genus induction. With F(z) = 1 + sum_k k a((k)) z^{k+1}, each
// m = 2..K+1 imposes [z^m] F^m / m! = b_poly(m); the single new unknown
// (m-1) a((m-1)) enters linearly with coefficient m/m!, so the system is
// triangular in increasing m.
MinimalTable solve_minimal(int max_k, int weight_cap);

// Recomputes [z^m] F^m / m! - b_poly(m) from a finished table; zero for
// every 2 <= m <= max_k + 1 when the table solves the induction.
TPoly solve_residual(const MinimalTable& table, int m);

} // namespace stratavol::minimal
