#include "stratavol/minimal.hpp"

#include "stratavol/errors.hpp"
#include "stratavol/partition.hpp"
#include "stratavol/zseries.hpp"

namespace stratavol::minimal {

BSeed::BSeed(int max_2g) {
    if (max_2g < 0)
        throw DomainError("b_numbers: max_2g must be >= 0");
    ZSeries<Rational> s({max_2g}, Rational(0));
    Rational pow4 = 1;
    for (int j = 0; 2 * j <= max_2g; ++j) {
        s.add_term({2 * j}, Rational(1) / (pow4 * factorial(2 * j + 1)));
        pow4 *= 4;
    }
    ZSeries<Rational> r = zseries_reciprocal(s);
    coeffs_.reserve(max_2g + 1);
    for (int i = 0; i <= max_2g; ++i)
        coeffs_.push_back(r.coeff({i}));
}

const Rational& BSeed::at(int two_g) const {
    if (two_g < 0 || two_g > max_2g())
        throw DomainError("BSeed index out of range: " + std::to_string(two_g));
    return coeffs_[two_g];
}

BSeed b_numbers(int max_2g) { return BSeed(max_2g); }

TPoly b_poly(int two_g, int weight_cap) {
    if (two_g < 0)
        throw DomainError("b_poly: index must be >= 0");
    BSeed seed(two_g);
    TPoly out(weight_cap);
    int rho_cap = std::min(two_g, weight_cap);
    for (const Partition& rho : partitions_up_to(rho_cap, 2)) {
        int rest = two_g - rho.weight();
        if (rest % 2 != 0)
            continue; // odd seed coefficients vanish
        Rational c = seed.at(rest) / rho.aut_order();
        out.add_term(rho, c);
    }
    return out;
}

MinimalTable::MinimalTable(int max_k, int weight_cap, std::map<int, TPoly> values)
    : max_k_(max_k), weight_cap_(weight_cap), values_(std::move(values)) {
    for (int k = 1; k <= max_k_; ++k)
        if (!values_.count(k))
            throw InvariantError("MinimalTable missing entry k=" + std::to_string(k));
}

const TPoly& MinimalTable::at(int k) const {
    auto it = values_.find(k);
    if (it == values_.end())
        throw DomainError("minimal table holds k in [1," + std::to_string(max_k_) +
                          "], got " + std::to_string(k));
    return it->second;
}

namespace {

// F restricted to z-degree <= z_cap, built from the solved prefix of the
// table: 1 + sum_{k+1 <= z_cap} k a((k)) z^{k+1}.
ZSeries<TPoly> f_series(const std::map<int, TPoly>& known, int z_cap, int weight_cap) {
    ZSeries<TPoly> f({z_cap}, TPoly(weight_cap));
    f.add_term({0}, TPoly::constant(1, weight_cap));
    for (const auto& [k, a] : known) {
        if (k + 1 > z_cap)
            break;
        f.add_term({k + 1}, a.scaled(k));
    }
    return f;
}

} // namespace

MinimalTable solve_minimal(int max_k, int weight_cap) {
    if (max_k < 1)
        throw DomainError("solve_minimal: max_k must be >= 1");
    if (weight_cap < 0)
        throw DomainError("solve_minimal: weight cap must be >= 0");
    std::map<int, TPoly> known;
    for (int m = 2; m <= max_k + 1; ++m) {
        // The unknown term f_m z^m of F contributes m * f_m to [z^m] F^m,
        // every other contribution involves solved entries only. The power
        // is recomputed per step: F gains a term between steps, so reusing
        // the previous power would need correction terms anyway.
        TPoly rhs = b_poly(m, weight_cap).scaled(factorial(m));
        TPoly lower = f_series(known, m, weight_cap).pow(m).coeff({m});
        TPoly f_m = (rhs - lower).scaled(Rational(1, m));
        known.emplace(m - 1, f_m.scaled(Rational(1, m - 1)));
    }
    return MinimalTable(max_k, weight_cap, std::move(known));
}

TPoly solve_residual(const MinimalTable& table, int m) {
    if (m < 2 || m > table.max_k() + 1)
        throw DomainError("solve_residual: m out of range");
    std::map<int, TPoly> known;
    for (int k = 1; k <= table.max_k(); ++k)
        known.emplace(k, table.at(k));
    TPoly lhs = f_series(known, m, table.weight_cap()).pow(m).coeff({m});
    return lhs.scaled(Rational(1) / factorial(m)) - b_poly(m, table.weight_cap());
}

} // namespace stratavol::minimal
