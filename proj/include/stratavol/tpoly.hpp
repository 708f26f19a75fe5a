#pragma once

#include <map>
#include <string>

#include "stratavol/partition.hpp"
#include "stratavol/rational.hpp"

namespace stratavol {

// Sparse polynomial in t_2, t_3, ... with exact rational coefficients,
// truncated by total t-weight. The monomial prod t_{rho_i} is keyed by the
// partition rho (parts >= 2); its weight is |rho| = sum of parts. Terms of
// weight above the cap are dropped by every operation, so a TPoly represents
// a residue class modulo weight > cap. Arithmetic between two TPolys
// requires equal caps; mixing truncation orders silently would produce
// values that are correct to no stated order.
class TPoly {
public:
    explicit TPoly(int weight_cap);
    static TPoly constant(const Rational& c, int weight_cap);
    static TPoly variable(int m, int weight_cap); // t_m, m >= 2

    int weight_cap() const { return weight_cap_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& mono) const;
    Rational constant_term() const { return coeff(Partition::empty()); }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Adds c to the coefficient of mono; monomials over the cap are dropped.
    TPoly& add_term(const Partition& mono, const Rational& c);

    TPoly operator-() const;
    TPoly operator+(const TPoly& other) const;
    TPoly operator-(const TPoly& other) const;
    TPoly operator*(const TPoly& other) const;
    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    bool operator==(const TPoly& other) const = default;

    TPoly scaled(const Rational& c) const;
    // Formal d/dt_m. A weight-cap-W input determines the result only to
    // weight W-m, and the result carries that reduced cap.
    TPoly derivative(int m) const;
    // Drops terms of weight > new_cap and relabels; new_cap <= weight_cap.
    TPoly truncated(int new_cap) const;
    // Relabels the cap without changing terms. Raising the cap asserts the
    // polynomial is exact (not a truncation); callers own that claim.
    TPoly with_cap(int new_cap) const;

    std::string to_string() const; // e.g. "-1/24 + t2" or "0"

private:
    std::map<Partition, Rational> terms_; // no zero coefficients stored
    int weight_cap_;
};

// Ring hooks for ZSeries<TPoly>.
inline bool is_zero(const TPoly& p) { return p.is_zero(); }
inline TPoly one_like(const TPoly& p) { return TPoly::constant(1, p.weight_cap()); }

} // namespace stratavol
