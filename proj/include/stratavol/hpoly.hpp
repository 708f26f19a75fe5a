#pragma once

#include <map>
#include <string>

#include "stratavol/partition.hpp"
#include "stratavol/rational.hpp"

namespace stratavol {

// Sparse polynomial in h_1, h_2, ... with exact rational coefficients. The
// monomial prod h_{j_i} is keyed by the partition (j_1,...,j_r), parts >= 1.
// Unlike TPoly there is no truncation: every HPoly we build is a finite
// exact object (z-degree caps live in the surrounding ZSeries).
//
// The grading used by the kernel invariants assigns h_j the weight j+1, so
// a monomial keyed by partition p has weighted degree |p| + length(p).
class HPoly {
public:
    HPoly() = default;
    static HPoly constant(const Rational& c);
    static HPoly variable(int k); // h_k, k >= 1

    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& mono) const;
    Rational constant_term() const { return coeff(Partition::empty()); }
    bool is_zero() const { return terms_.empty(); }
    // Largest h-index appearing in any monomial; 0 for h-free polynomials.
    int max_index() const;

    HPoly& add_term(const Partition& mono, const Rational& c);

    HPoly operator-() const;
    HPoly operator+(const HPoly& other) const;
    HPoly operator-(const HPoly& other) const;
    HPoly operator*(const HPoly& other) const;
    HPoly& operator+=(const HPoly& other);
    HPoly& operator-=(const HPoly& other);
    bool operator==(const HPoly& other) const = default;

    HPoly scaled(const Rational& c) const;
    // Formal partial derivative d/dh_k.
    HPoly dh(int k) const;

    // True when every term has weighted degree == degree (h_j of weight j+1).
    bool is_weighted_homogeneous(int degree) const;

    std::string to_string() const; // e.g. "4*h3 + h1^2" or "0"

private:
    std::map<Partition, Rational> terms_;
};

// Ring hooks for ZSeries<HPoly>.
inline bool is_zero(const HPoly& p) { return p.is_zero(); }
inline HPoly one_like(const HPoly&) { return HPoly::constant(1); }

} // namespace stratavol
