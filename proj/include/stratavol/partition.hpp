#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "stratavol/rational.hpp"

namespace stratavol {

// Multiset of positive integers in canonical (descending) order. Doubles as
//   - a residue profile rho (parts >= 2), which is also the monomial key
//     prod t_{rho_i} of TPoly,
//   - a zero profile mu (parts >= 1),
//   - a monomial key prod h_{j_i} of HPoly.
//
// Canonical ordering of partitions, used for every map iteration and every
// serialized listing: first by weight (sum of parts), then larger parts
// first, so weight 4 lists (4) before (2,2).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition{}; }
    static Partition single(int part) { return Partition{{part}}; }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool is_empty() const { return parts_.empty(); }
    bool contains(int part) const;
    int multiplicity(int part) const;
    int min_part() const;
    int max_part() const;

    // |Aut| = product over distinct part values of (multiplicity!).
    Rational aut_order() const;

    Partition with_part(int part) const;
    // Removes one copy of `part`; the part must be present.
    Partition without_part(int part) const;
    // Multiset union (monomial product).
    Partition merged(const Partition& other) const;

    std::string to_string() const; // e.g. "(3,2,2)" or "()"

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_; // descending
    int weight_ = 0;
};

// All partitions with parts >= min_part and weight <= weight_cap, each once,
// in the canonical order above.
std::vector<Partition> partitions_up_to(int weight_cap, int min_part);

} // namespace stratavol
